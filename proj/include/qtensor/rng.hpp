#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qtensor/algebra.hpp"
#include "qtensor/transform.hpp"

namespace qtensor {

/// Generator identity pinned in every report header. The mapping from raw
/// 64-bit outputs to doubles is fixed (top 53 bits), so identical seeds give
/// bitwise-identical streams on every conforming platform.
inline constexpr const char* kGeneratorName = "mt19937_64(top53)->uniform[-1,1)";

/// Deterministic double stream over [-1, 1).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    double sym() {
        return 2.0 * (static_cast<double>(eng_() >> 11) * 0x1.0p-53) - 1.0;
    }

private:
    std::mt19937_64 eng_;
};

/// One splitmix64 step; used to derive independent sub-seeds from a base seed.
std::uint64_t splitmix64(std::uint64_t& state);

/// stream-th sub-seed of base (stream = 0, 1, ...).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

/// Random quaternion tensor with all 4 m n p real components uniform in
/// [-1, 1), drawn in file order: slices outermost, rows, columns, then
/// (w, x, y, z). Identical seed implies a bitwise-identical tensor.
CdTensor3 gen_random_tensor(std::size_t m, std::size_t n, std::size_t p,
                            std::uint64_t seed);

std::vector<Quaternion> gen_random_quaternions(std::size_t count, std::uint64_t seed);

} // namespace qtensor
