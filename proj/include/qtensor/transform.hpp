#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qtensor/algebra.hpp"
#include "qtensor/linalg.hpp"

namespace qtensor {

/// Unnormalized DFT by direct O(p^2) summation: y_s = sum_m omega^{s m} x_m
/// with omega = exp(-2 pi i / p), zero-based. Equals sqrt(p) * F_p * x.
/// This is the oracle the fast transform is tested against.
std::vector<Cx> dft_vec_naive(std::span<const Cx> x);

/// Unnormalized forward FFT, any length. Composite lengths run mixed-radix
/// Cooley-Tukey; prime factors fall back to direct summation.
std::vector<Cx> fft_vec(std::span<const Cx> x);

/// Inverse of fft_vec: conjugate kernel, scaled by 1/p.
std::vector<Cx> ifft_vec(std::span<const Cx> y);

/// Third-order quaternion tensor in CD form Q = t1 + t2 j, stored as a stack
/// of p frontal m x n slices, row-major within each slice.
struct CdTensor3 {
    std::size_t m = 0, n = 0, p = 0;
    std::vector<Cx> t1, t2;

    CdTensor3() = default;
    CdTensor3(std::size_t m_, std::size_t n_, std::size_t p_)
        : m(m_), n(n_), p(p_), t1(m_ * n_ * p_), t2(m_ * n_ * p_) {}

    std::size_t size() const { return t1.size(); }
    std::size_t idx(std::size_t i, std::size_t j, std::size_t r) const {
        return (r * m + i) * n + j;
    }

    Quaternion qat(std::size_t i, std::size_t j, std::size_t r) const {
        const std::size_t k = idx(i, j, r);
        return cd_join(t1[k], t2[k]);
    }
    void set_qat(std::size_t i, std::size_t j, std::size_t r, const Quaternion& q) {
        const std::size_t k = idx(i, j, r);
        auto [p1, p2] = cd_split(q);
        t1[k] = p1;
        t2[k] = p2;
    }

    CdMatrix slice(std::size_t r) const;
    void set_slice(std::size_t r, const CdMatrix& s);

    double frob_norm() const;
};

/// Conjugate-fused forward transform along the third axis:
/// out.t1 = fft(conj(t1), 3), out.t2 = -fft(t2, 3). Tube-wise this is
/// q_hat = sqrt(p) * F_p * conj(q) on quaternion tubes. The conjugation is
/// fused into the load/store, never materialized.
CdTensor3 qfft3_conj(const CdTensor3& q);

/// Exact inverse of qfft3_conj: out.t1 = conj(ifft(t1, 3)),
/// out.t2 = -ifft(t2, 3). qifft3_conj(qfft3_conj(Q)) == Q up to rounding.
CdTensor3 qifft3_conj(const CdTensor3& qhat);

} // namespace qtensor
