#include "hvq/field_io.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>

namespace hvq {

namespace {

void put_bytes(std::ofstream& out, const void* p, std::size_t n) {
    out.write(static_cast<const char*>(p), static_cast<std::streamsize>(n));
}

void put_u32(std::ofstream& out, std::uint32_t v) {
    unsigned char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    put_bytes(out, b, 4);
}

void put_u64(std::ofstream& out, std::uint64_t v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    put_bytes(out, b, 8);
}

void put_f64(std::ofstream& out, double x) {
    std::uint64_t v;
    std::memcpy(&v, &x, 8);
    put_u64(out, v);
}

std::uint32_t get_u32(std::ifstream& in) {
    unsigned char b[4];
    in.read(reinterpret_cast<char*>(b), 4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
    return v;
}

std::uint64_t get_u64(std::ifstream& in) {
    unsigned char b[8];
    in.read(reinterpret_cast<char*>(b), 8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return v;
}

double get_f64(std::ifstream& in) {
    const std::uint64_t v = get_u64(in);
    double x;
    std::memcpy(&x, &v, 8);
    return x;
}

void write_header(std::ofstream& out, const Grid& g) {
    out.write("HVQ1", 4);
    put_u32(out, static_cast<std::uint32_t>(g.rank()));
    for (int k = 0; k < g.rank(); ++k) {
        const Axis& a = g.axis(k);
        put_u64(out, static_cast<std::uint64_t>(a.n));
        put_f64(out, a.lower);
        put_f64(out, a.upper);
        const unsigned char b = a.boundary == Boundary::periodic ? 0 : 1;
        put_bytes(out, &b, 1);
    }
}

GridPtr read_header(std::ifstream& in, const std::string& path) {
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, "HVQ1", 4) != 0)
        throw UsageError("not an HVQ1 field file: " + path);
    const std::uint32_t rank = get_u32(in);
    if (rank == 0 || rank > 16) throw UsageError("corrupt HVQ1 header: " + path);
    std::vector<Axis> axes(rank);
    for (auto& a : axes) {
        a.n = static_cast<int>(get_u64(in));
        a.lower = get_f64(in);
        a.upper = get_f64(in);
        unsigned char b = 0;
        in.read(reinterpret_cast<char*>(&b), 1);
        a.boundary = b == 0 ? Boundary::periodic : Boundary::dirichlet;
    }
    if (!in) throw UsageError("truncated HVQ1 header: " + path);
    return Grid::make(std::move(axes));
}

} // namespace

void save_field(const RealField& f, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw UsageError("cannot open for write: " + path);
    write_header(out, f.grid());
    for (std::size_t i = 0; i < f.size(); ++i) put_f64(out, f[i]);
    if (!out) throw UsageError("write failed: " + path);
}

void save_field(const ComplexField& f, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw UsageError("cannot open for write: " + path);
    write_header(out, f.grid());
    for (std::size_t i = 0; i < f.size(); ++i) {
        put_f64(out, f[i].real());
        put_f64(out, f[i].imag());
    }
    if (!out) throw UsageError("write failed: " + path);
}

RealField load_real_field(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open: " + path);
    GridPtr g = read_header(in, path);
    RealField f(g);
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = get_f64(in);
    if (!in) throw UsageError("truncated HVQ1 payload: " + path);
    return f;
}

ComplexField load_complex_field(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open: " + path);
    GridPtr g = read_header(in, path);
    ComplexField f(g);
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double re = get_f64(in);
        const double im = get_f64(in);
        f[i] = {re, im};
    }
    if (!in) throw UsageError("truncated HVQ1 payload: " + path);
    return f;
}

} // namespace hvq
