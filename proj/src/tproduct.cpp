#include "qtensor/tproduct.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qtensor {

CdMatrix unfold(const CdTensor3& a) {
    CdMatrix m(a.m * a.p, a.n);
    std::copy(a.t1.begin(), a.t1.end(), m.a1.data.begin());
    std::copy(a.t2.begin(), a.t2.end(), m.a2.data.begin());
    return m;
}

CdTensor3 fold(const CdMatrix& m, std::size_t p) {
    if (p == 0 || m.rows() % p != 0)
        throw std::invalid_argument("fold: row count not divisible by p");
    CdTensor3 t(m.rows() / p, m.cols(), p);
    std::copy(m.a1.data.begin(), m.a1.data.end(), t.t1.begin());
    std::copy(m.a2.data.begin(), m.a2.data.end(), t.t2.begin());
    return t;
}

CdMatrix bcirc_of_tensor(const CdTensor3& a) {
    const std::size_t m = a.m, n = a.n, p = a.p;
    CdMatrix r(m * p, n * p);
    for (std::size_t br = 0; br < p; ++br)
        for (std::size_t bc = 0; bc < p; ++bc) {
            const std::size_t src = ((br + p - bc) % p) * m * n;
            for (std::size_t i = 0; i < m; ++i) {
                const std::size_t dst = (br * m + i) * n * p + bc * n;
                std::copy(a.t1.begin() + src + i * n, a.t1.begin() + src + (i + 1) * n,
                          r.a1.data.begin() + dst);
                std::copy(a.t2.begin() + src + i * n, a.t2.begin() + src + (i + 1) * n,
                          r.a2.data.begin() + dst);
            }
        }
    return r;
}

CdTensor3 identity_tensor(std::size_t n, std::size_t p) {
    if (n == 0 || p == 0) throw std::invalid_argument("identity_tensor: zero dims");
    CdTensor3 t(n, n, p);
    for (std::size_t i = 0; i < n; ++i) t.t1[t.idx(i, i, 0)] = 1.0;
    return t;
}

CdTensor3 tprod_naive(const CdTensor3& a, const CdTensor3& b) {
    if (a.n != b.m || a.p != b.p)
        throw std::invalid_argument("tprod_naive: dimension mismatch");
    return fold(qmatmul(bcirc_of_tensor(a), unfold(b)), a.p);
}

namespace {

// c (m x s) += sign * op(a) (m x n) * b (n x s), all row-major slices;
// op conjugates a entrywise when conj_a is set.
void slice_gemm_acc(const Cx* a, bool conj_a, const Cx* b, Cx* c, std::size_t m,
                    std::size_t n, std::size_t s, double sign) {
    for (std::size_t i = 0; i < m; ++i) {
        Cx* crow = c + i * s;
        for (std::size_t k = 0; k < n; ++k) {
            Cx aik = a[i * n + k];
            if (conj_a) aik = std::conj(aik);
            aik *= sign;
            const Cx* brow = b + k * s;
            for (std::size_t j = 0; j < s; ++j) crow[j] += aik * brow[j];
        }
    }
}

} // namespace

CdTensor3 tprod_fast(const CdTensor3& a, const CdTensor3& b, TProdWorkspace& ws) {
    if (a.n != b.m || a.p != b.p)
        throw std::invalid_argument("tprod_fast: dimension mismatch");
    const std::size_t m = a.m, n = a.n, s = b.n, p = a.p;

    ws.ahat = qfft3_conj(a);
    ws.bhat = qfft3_conj(b);
    if (ws.chat.m == m && ws.chat.n == s && ws.chat.p == p) {
        std::fill(ws.chat.t1.begin(), ws.chat.t1.end(), Cx{});
        std::fill(ws.chat.t2.begin(), ws.chat.t2.end(), Cx{});
    } else {
        ws.chat = CdTensor3(m, s, p);
    }

    const std::size_t amn = m * n, bns = n * s, cms = m * s;
    for (std::size_t i = 0; i < p; ++i) {
        const std::size_t ri = slice_reflect(i, p);
        const Cx* a1_i = ws.ahat.t1.data() + i * amn;
        const Cx* a1_r = ws.ahat.t1.data() + ri * amn;
        const Cx* a2_i = ws.ahat.t2.data() + i * amn;
        const Cx* a2_r = ws.ahat.t2.data() + ri * amn;
        const Cx* b1_i = ws.bhat.t1.data() + i * bns;
        const Cx* b2_i = ws.bhat.t2.data() + i * bns;
        Cx* c1 = ws.chat.t1.data() + i * cms;
        Cx* c2 = ws.chat.t2.data() + i * cms;
        slice_gemm_acc(a1_i, false, b1_i, c1, m, n, s, +1.0);
        slice_gemm_acc(a2_r, true, b2_i, c1, m, n, s, -1.0);
        slice_gemm_acc(a1_r, true, b2_i, c2, m, n, s, +1.0);
        slice_gemm_acc(a2_i, false, b1_i, c2, m, n, s, +1.0);
    }
    return qifft3_conj(ws.chat);
}

CdTensor3 tprod_fast(const CdTensor3& a, const CdTensor3& b) {
    TProdWorkspace ws;
    return tprod_fast(a, b, ws);
}

TprodFlops flops_estimate(std::size_t m, std::size_t n, std::size_t s, std::size_t p) {
    if (m == 0 || n == 0 || s == 0 || p == 0)
        throw std::invalid_argument("flops_estimate: zero dims");
    const std::uint64_t mu = m, nu = n, su = s, pu = p;
    TprodFlops f;
    f.fast_mults = 16 * mu * nu * su * pu;
    const double lg = p > 1 ? std::log2(static_cast<double>(p)) : 0.0;
    f.fast_transform_flops = static_cast<std::uint64_t>(
        std::llround(2.0 * static_cast<double>(mu * nu + nu * su + mu * su) *
                     static_cast<double>(pu) * lg));
    f.naive_mults = 16 * mu * nu * su * pu * pu;
    f.naive_adds = 4 * mu * pu * su * (nu * pu - 1) + 12 * mu * nu * su * pu * pu;
    return f;
}

} // namespace qtensor
