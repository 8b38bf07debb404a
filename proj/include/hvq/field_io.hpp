#ifndef HVQ_FIELD_IO_HPP
#define HVQ_FIELD_IO_HPP

#include <string>

#include "hvq/field.hpp"

namespace hvq {

// Binary grid dump. Header: magic "HVQ1", u32 rank, then per axis
// u64 n / f64 lower / f64 upper / u8 boundary (0 periodic, 1 dirichlet).
// Payload: little-endian 64-bit floats, complex interleaved (re, im).

void save_field(const RealField& f, const std::string& path);
void save_field(const ComplexField& f, const std::string& path);
RealField load_real_field(const std::string& path);
ComplexField load_complex_field(const std::string& path);

} // namespace hvq

#endif
