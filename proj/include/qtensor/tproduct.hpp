#pragma once

#include <cstddef>
#include <cstdint>

#include "qtensor/linalg.hpp"
#include "qtensor/transform.hpp"

namespace qtensor {

/// Stacks the frontal slices vertically into an (m p) x n matrix.
CdMatrix unfold(const CdTensor3& a);

/// Inverse of unfold; the row count must be divisible by p.
CdTensor3 fold(const CdMatrix& m, std::size_t p);

/// mp x np block circulant whose first block column is unfold(a).
CdMatrix bcirc_of_tensor(const CdTensor3& a);

/// Identity of the tensor product: identity first slice, zero elsewhere.
CdTensor3 identity_tensor(std::size_t n, std::size_t p);

/// Definitional tensor product fold(bcirc(a) . unfold(b)). This is the oracle
/// the fast path is verified against.
CdTensor3 tprod_naive(const CdTensor3& a, const CdTensor3& b);

/// Slice pairing index for the transformed-domain product: the reflection
/// (p - i) mod p. Pinned; changing it silently breaks tprod_fast.
constexpr std::size_t slice_reflect(std::size_t i, std::size_t p) { return (p - i) % p; }

/// Reusable buffers for tprod_fast (transformed operands and accumulator).
struct TProdWorkspace {
    CdTensor3 ahat, bhat, chat;
};

/// FFT-domain tensor product:
///   1. ahat = qfft3_conj(a), bhat = qfft3_conj(b);
///   2. per slice i, with sigma = slice_reflect:
///        chat1[i] = ahat1[i] bhat1[i] - conj(ahat2[sigma(i)]) bhat2[i]
///        chat2[i] = conj(ahat1[sigma(i)]) bhat2[i] + ahat2[i] bhat1[i]
///   3. c = qifft3_conj(chat).
/// Each slice quadruple uses four complex matrix products (16 real
/// multiplications per entry triple), so step 2 costs 16 m n s p real
/// multiplications against the oracle's 16 m n s p^2.
CdTensor3 tprod_fast(const CdTensor3& a, const CdTensor3& b);
CdTensor3 tprod_fast(const CdTensor3& a, const CdTensor3& b, TProdWorkspace& ws);

struct TprodFlops {
    std::uint64_t fast_mults = 0;            // slice products: 16 m n s p
    std::uint64_t fast_transform_flops = 0;  // 2 (mn + ns + ms) p log2(p) scale term
    std::uint64_t naive_mults = 0;           // 16 m n s p^2
    std::uint64_t naive_adds = 0;            // 4 m p s (n p - 1) + 12 m n s p^2
};

/// Real-operation counts for both evaluation routes. Zero dims rejected.
TprodFlops flops_estimate(std::size_t m, std::size_t n, std::size_t s, std::size_t p);

} // namespace qtensor
