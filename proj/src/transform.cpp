#include "qtensor/transform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qtensor {

namespace {

std::size_t smallest_factor(std::size_t n) {
    if (n % 2 == 0) return 2;
    for (std::size_t f = 3; f * f <= n; f += 2)
        if (n % f == 0) return f;
    return n;
}

std::vector<Cx> twiddles(std::size_t n) {
    std::vector<Cx> w(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double ang =
            -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
        w[k] = std::polar(1.0, ang);
    }
    return w;
}

std::vector<Cx> dft_direct(std::span<const Cx> x) {
    const std::size_t n = x.size();
    const std::vector<Cx> w = twiddles(n);
    std::vector<Cx> y(n);
    for (std::size_t s = 0; s < n; ++s) {
        Cx acc = 0.0;
        for (std::size_t m = 0; m < n; ++m) acc += w[(s * m) % n] * x[m];
        y[s] = acc;
    }
    return y;
}

// Decimation in time over the smallest prime factor f of n = f * m:
// X[q + s m] = sum_r omega_n^{r (q + s m)} * fft(x_r)[q], where x_r is the
// subsequence x[r], x[r + f], ...
std::vector<Cx> fft_rec(std::span<const Cx> x) {
    const std::size_t n = x.size();
    if (n == 1) return {x[0]};
    const std::size_t f = smallest_factor(n);
    if (f == n) return dft_direct(x);

    const std::size_t m = n / f;
    std::vector<std::vector<Cx>> sub(f);
    std::vector<Cx> scratch(m);
    for (std::size_t r = 0; r < f; ++r) {
        for (std::size_t q = 0; q < m; ++q) scratch[q] = x[r + q * f];
        sub[r] = fft_rec(scratch);
    }

    const std::vector<Cx> w = twiddles(n);
    std::vector<Cx> y(n);
    for (std::size_t s = 0; s < f; ++s)
        for (std::size_t q = 0; q < m; ++q) {
            const std::size_t k = q + s * m;
            Cx acc = 0.0;
            for (std::size_t r = 0; r < f; ++r) acc += w[(r * k) % n] * sub[r][q];
            y[k] = acc;
        }
    return y;
}

} // namespace

std::vector<Cx> dft_vec_naive(std::span<const Cx> x) {
    if (x.empty()) throw std::invalid_argument("dft_vec_naive: empty vector");
    return dft_direct(x);
}

std::vector<Cx> fft_vec(std::span<const Cx> x) {
    if (x.empty()) throw std::invalid_argument("fft_vec: empty vector");
    return fft_rec(x);
}

std::vector<Cx> ifft_vec(std::span<const Cx> y) {
    if (y.empty()) throw std::invalid_argument("ifft_vec: empty vector");
    const std::size_t n = y.size();
    std::vector<Cx> tmp(n);
    for (std::size_t k = 0; k < n; ++k) tmp[k] = std::conj(y[k]);
    std::vector<Cx> out = fft_rec(tmp);
    const double scale = 1.0 / static_cast<double>(n);
    for (Cx& z : out) z = std::conj(z) * scale;
    return out;
}

CdMatrix CdTensor3::slice(std::size_t r) const {
    CdMatrix s(m, n);
    const std::size_t base = r * m * n;
    std::copy(t1.begin() + base, t1.begin() + base + m * n, s.a1.data.begin());
    std::copy(t2.begin() + base, t2.begin() + base + m * n, s.a2.data.begin());
    return s;
}

void CdTensor3::set_slice(std::size_t r, const CdMatrix& s) {
    if (s.rows() != m || s.cols() != n)
        throw std::invalid_argument("set_slice: slice shape mismatch");
    const std::size_t base = r * m * n;
    std::copy(s.a1.data.begin(), s.a1.data.end(), t1.begin() + base);
    std::copy(s.a2.data.begin(), s.a2.data.end(), t2.begin() + base);
}

double CdTensor3::frob_norm() const {
    double s = 0.0;
    for (const Cx& z : t1) s += std::norm(z);
    for (const Cx& z : t2) s += std::norm(z);
    return std::sqrt(s);
}

namespace {

enum class TubeOp { ConjInForward, NegateForward, InverseConjOut, NegateInverse };

// Applies the length-p transform to every (i, j) tube, with the conjugation
// or negation fused into the gather/scatter.
void transform_tubes(const std::vector<Cx>& in, std::vector<Cx>& out, std::size_t mn,
                     std::size_t p, TubeOp op) {
    std::vector<Cx> tube(p), res;
    for (std::size_t t = 0; t < mn; ++t) {
        for (std::size_t r = 0; r < p; ++r) {
            const Cx v = in[r * mn + t];
            tube[r] = (op == TubeOp::ConjInForward) ? std::conj(v) : v;
        }
        switch (op) {
            case TubeOp::ConjInForward:
            case TubeOp::NegateForward:
                res = fft_rec(tube);
                break;
            case TubeOp::InverseConjOut:
            case TubeOp::NegateInverse:
                res = ifft_vec(tube);
                break;
        }
        for (std::size_t r = 0; r < p; ++r) {
            Cx v = res[r];
            if (op == TubeOp::NegateForward || op == TubeOp::NegateInverse) v = -v;
            if (op == TubeOp::InverseConjOut) v = std::conj(v);
            out[r * mn + t] = v;
        }
    }
}

} // namespace

CdTensor3 qfft3_conj(const CdTensor3& q) {
    if (q.p == 0) throw std::invalid_argument("qfft3_conj: p must be >= 1");
    CdTensor3 out(q.m, q.n, q.p);
    const std::size_t mn = q.m * q.n;
    transform_tubes(q.t1, out.t1, mn, q.p, TubeOp::ConjInForward);
    transform_tubes(q.t2, out.t2, mn, q.p, TubeOp::NegateForward);
    return out;
}

CdTensor3 qifft3_conj(const CdTensor3& qhat) {
    if (qhat.p == 0) throw std::invalid_argument("qifft3_conj: p must be >= 1");
    CdTensor3 out(qhat.m, qhat.n, qhat.p);
    const std::size_t mn = qhat.m * qhat.n;
    transform_tubes(qhat.t1, out.t1, mn, qhat.p, TubeOp::InverseConjOut);
    transform_tubes(qhat.t2, out.t2, mn, qhat.p, TubeOp::NegateInverse);
    return out;
}

} // namespace qtensor
