#include "qtensor/tensor_io.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <fstream>

namespace qtensor {

namespace {

constexpr std::size_t kHeaderBytes = 4 + 3 * 8;
constexpr std::size_t kEntryBytes = 4 * 8;
// Keeps m*n*p and the byte size well inside 64 bits and refuses absurd
// headers before any allocation.
constexpr std::uint64_t kMaxDim = 1ULL << 20;
constexpr std::uint64_t kMaxEntries = 1ULL << 40;

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
    for (int k = 0; k < 8; ++k) out.push_back(static_cast<std::uint8_t>(v >> (8 * k)));
}

std::uint64_t get_u64(const std::uint8_t* p) {
    std::uint64_t v = 0;
    for (int k = 0; k < 8; ++k) v |= static_cast<std::uint64_t>(p[k]) << (8 * k);
    return v;
}

void put_f64(std::vector<std::uint8_t>& out, double d) {
    put_u64(out, std::bit_cast<std::uint64_t>(d));
}

double get_f64(const std::uint8_t* p) { return std::bit_cast<double>(get_u64(p)); }

} // namespace

std::vector<std::uint8_t> serialize_tensor(const CdTensor3& t) {
    std::vector<std::uint8_t> out;
    out.reserve(kHeaderBytes + t.size() * kEntryBytes);
    out.insert(out.end(), kTensorMagic.begin(), kTensorMagic.end());
    put_u64(out, t.m);
    put_u64(out, t.n);
    put_u64(out, t.p);
    for (std::size_t k = 0; k < t.size(); ++k) {
        put_f64(out, t.t1[k].real());
        put_f64(out, t.t1[k].imag());
        put_f64(out, t.t2[k].real());
        put_f64(out, t.t2[k].imag());
    }
    return out;
}

CdTensor3 parse_tensor(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < kHeaderBytes) {
        if (bytes.size() < 4 ||
            !std::equal(kTensorMagic.begin(), kTensorMagic.end(), bytes.begin()))
            throw TensorIoError(TensorIoErrorKind::BadMagic, "bad magic");
        throw TensorIoError(TensorIoErrorKind::Truncated, "truncated header");
    }
    if (!std::equal(kTensorMagic.begin(), kTensorMagic.end(), bytes.begin()))
        throw TensorIoError(TensorIoErrorKind::BadMagic, "bad magic");

    const std::uint64_t m = get_u64(bytes.data() + 4);
    const std::uint64_t n = get_u64(bytes.data() + 12);
    const std::uint64_t p = get_u64(bytes.data() + 20);
    if (m == 0 || n == 0 || p == 0 || m > kMaxDim || n > kMaxDim || p > kMaxDim ||
        m * n > kMaxEntries || m * n * p > kMaxEntries)
        throw TensorIoError(TensorIoErrorKind::DimOverflow, "dim overflow");

    const std::uint64_t entries = m * n * p;
    if (bytes.size() != kHeaderBytes + entries * kEntryBytes)
        throw TensorIoError(TensorIoErrorKind::Truncated,
                            "truncated payload: header dims inconsistent with length");

    CdTensor3 t(static_cast<std::size_t>(m), static_cast<std::size_t>(n),
                static_cast<std::size_t>(p));
    const std::uint8_t* cur = bytes.data() + kHeaderBytes;
    for (std::size_t k = 0; k < t.size(); ++k, cur += kEntryBytes) {
        t.t1[k] = Cx{get_f64(cur), get_f64(cur + 8)};
        t.t2[k] = Cx{get_f64(cur + 16), get_f64(cur + 24)};
    }
    return t;
}

void write_tensor(const std::filesystem::path& path, const CdTensor3& t) {
    const std::vector<std::uint8_t> bytes = serialize_tensor(t);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

CdTensor3 read_tensor(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary | std::ios::ate);
    if (!in) throw std::runtime_error("cannot open for reading: " + path.string());
    const std::streamsize size = in.tellg();
    in.seekg(0);
    std::vector<std::uint8_t> bytes(static_cast<std::size_t>(size));
    in.read(reinterpret_cast<char*>(bytes.data()), size);
    if (!in) throw std::runtime_error("read failed: " + path.string());
    return parse_tensor(bytes);
}

} // namespace qtensor
