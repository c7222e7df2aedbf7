#include "qtensor/linalg.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qtensor {

namespace {

void check_same_shape(std::size_t ra, std::size_t ca, std::size_t rb, std::size_t cb) {
    if (ra != rb || ca != cb) throw std::invalid_argument("matrix shape mismatch");
}

void check_inner(std::size_t ca, std::size_t rb) {
    if (ca != rb) throw std::invalid_argument("matrix inner dimension mismatch");
}

} // namespace

Octonion family_unit(Family f) {
    const Octonion l = Octonion::unit(4);
    const Octonion jl = Octonion::unit(6);
    switch (f) {
        case Family::L: return l;
        case Family::JL: return jl;
        case Family::Mixed: return (l + jl) * (1.0 / std::numbers::sqrt2);
    }
    throw std::invalid_argument("unknown family");
}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::transpose() const {
    CMatrix r(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
    return r;
}

CMatrix CMatrix::conj() const {
    CMatrix r(rows, cols);
    for (std::size_t k = 0; k < data.size(); ++k) r.data[k] = std::conj(data[k]);
    return r;
}

CMatrix CMatrix::conj_transpose() const {
    CMatrix r(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) r.at(j, i) = std::conj(at(i, j));
    return r;
}

double CMatrix::frob_norm() const {
    double s = 0.0;
    for (const Cx& z : data) s += std::norm(z);
    return std::sqrt(s);
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
    check_same_shape(a.rows, a.cols, b.rows, b.cols);
    CMatrix r(a.rows, a.cols);
    for (std::size_t k = 0; k < r.data.size(); ++k) r.data[k] = a.data[k] + b.data[k];
    return r;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
    check_same_shape(a.rows, a.cols, b.rows, b.cols);
    CMatrix r(a.rows, a.cols);
    for (std::size_t k = 0; k < r.data.size(); ++k) r.data[k] = a.data[k] - b.data[k];
    return r;
}

CMatrix operator*(const CMatrix& a, Cx s) {
    CMatrix r(a.rows, a.cols);
    for (std::size_t k = 0; k < r.data.size(); ++k) r.data[k] = a.data[k] * s;
    return r;
}

CMatrix cmatmul(const CMatrix& a, const CMatrix& b) {
    check_inner(a.cols, b.rows);
    CMatrix r(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        Cx* out = &r.data[i * r.cols];
        for (std::size_t k = 0; k < a.cols; ++k) {
            const Cx aik = a.at(i, k);
            if (aik == Cx{}) continue;
            const Cx* brow = &b.data[k * b.cols];
            for (std::size_t j = 0; j < b.cols; ++j) out[j] += aik * brow[j];
        }
    }
    return r;
}

CMatrix dft_matrix(std::size_t p) {
    if (p == 0) throw std::invalid_argument("dft_matrix: p must be >= 1");
    CMatrix f(p, p);
    const double scale = 1.0 / std::sqrt(static_cast<double>(p));
    for (std::size_t s = 0; s < p; ++s) {
        for (std::size_t m = 0; m < p; ++m) {
            // exponent reduced mod p to keep the angle small
            const std::size_t e = (s * m) % p;
            const double ang = -2.0 * std::numbers::pi * static_cast<double>(e) /
                               static_cast<double>(p);
            f.at(s, m) = std::polar(scale, ang);
        }
    }
    return f;
}

CMatrix perm_matrix(std::size_t p) {
    if (p == 0) throw std::invalid_argument("perm_matrix: p must be >= 1");
    CMatrix m(p, p);
    m.at(0, 0) = 1.0;
    for (std::size_t i = 1; i < p; ++i) m.at(i, p - i) = 1.0;
    return m;
}

CMatrix kron_identity(const CMatrix& a, std::size_t m) {
    CMatrix r(a.rows * m, a.cols * m);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) {
            const Cx v = a.at(i, j);
            if (v == Cx{}) continue;
            for (std::size_t k = 0; k < m; ++k) r.at(i * m + k, j * m + k) = v;
        }
    return r;
}

CMatrix circulant(std::span<const Cx> gen) {
    const std::size_t p = gen.size();
    if (p == 0) throw std::invalid_argument("circulant: empty generator");
    CMatrix m(p, p);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) m.at(i, j) = gen[(i + p - j) % p];
    return m;
}

CdMatrix::CdMatrix(CMatrix m1, CMatrix m2) : a1(std::move(m1)), a2(std::move(m2)) {
    check_same_shape(a1.rows, a1.cols, a2.rows, a2.cols);
}

CdMatrix CdMatrix::identity(std::size_t n) {
    CdMatrix m(n, n);
    m.a1 = CMatrix::identity(n);
    return m;
}

CdMatrix CdMatrix::conj_transpose() const {
    CdMatrix r;
    r.a1 = a1.conj_transpose();
    r.a2 = a2.transpose() * Cx{-1.0, 0.0};
    return r;
}

double CdMatrix::frob_norm() const {
    double s = 0.0;
    for (const Cx& z : a1.data) s += std::norm(z);
    for (const Cx& z : a2.data) s += std::norm(z);
    return std::sqrt(s);
}

CdMatrix operator+(const CdMatrix& a, const CdMatrix& b) { return {a.a1 + b.a1, a.a2 + b.a2}; }
CdMatrix operator-(const CdMatrix& a, const CdMatrix& b) { return {a.a1 - b.a1, a.a2 - b.a2}; }

CdMatrix qmatmul(const CdMatrix& a, const CdMatrix& b) {
    check_inner(a.cols(), b.rows());
    CdMatrix r;
    r.a1 = cmatmul(a.a1, b.a1) - cmatmul(a.a2, b.a2.conj());
    r.a2 = cmatmul(a.a1, b.a2) + cmatmul(a.a2, b.a1.conj());
    return r;
}

double offdiag_frob(const CdMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (i == j) continue;
            s += std::norm(a.a1.at(i, j)) + std::norm(a.a2.at(i, j));
        }
    return std::sqrt(s);
}

CirculantGen::CirculantGen(std::vector<CdMatrix> g) : gens(std::move(g)) {
    for (const CdMatrix& blk : gens)
        check_same_shape(blk.rows(), blk.cols(), gens[0].rows(), gens[0].cols());
}

CdMatrix bcirc_build(const CirculantGen& g) {
    const std::size_t p = g.p();
    if (p == 0) throw std::invalid_argument("bcirc_build: no generator blocks");
    const std::size_t m = g.block_rows(), n = g.block_cols();
    CdMatrix r(m * p, n * p);
    for (std::size_t br = 0; br < p; ++br)
        for (std::size_t bc = 0; bc < p; ++bc) {
            const CdMatrix& blk = g.gens[(br + p - bc) % p];
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    r.a1.at(br * m + i, bc * n + j) = blk.a1.at(i, j);
                    r.a2.at(br * m + i, bc * n + j) = blk.a2.at(i, j);
                }
        }
    return r;
}

OctMatrix OctMatrix::identity(std::size_t n) {
    OctMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Octonion::one();
    return m;
}

OctMatrix OctMatrix::conj_transpose() const {
    OctMatrix r(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) r.at(j, i) = oconj(at(i, j));
    return r;
}

double OctMatrix::frob_norm() const {
    double s = 0.0;
    for (const Octonion& o : data) s += onorm_sq(o);
    return std::sqrt(s);
}

OctMatrix operator-(const OctMatrix& a, const OctMatrix& b) {
    check_same_shape(a.rows, a.cols, b.rows, b.cols);
    OctMatrix r(a.rows, a.cols);
    for (std::size_t k = 0; k < r.data.size(); ++k) r.data[k] = a.data[k] - b.data[k];
    return r;
}

OctMatrix omatmul(const OctMatrix& a, const OctMatrix& b) {
    check_inner(a.cols, b.rows);
    OctMatrix r(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < b.cols; ++j) {
            Octonion acc;
            for (std::size_t k = 0; k < a.cols; ++k) acc = acc + a.at(i, k) * b.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}

OctMatrix osandwich(const OctMatrix& l, const OctMatrix& m, const OctMatrix& r) {
    return omatmul(omatmul(l, m), r);
}

OctMatrix osandwich_right(const OctMatrix& l, const OctMatrix& m, const OctMatrix& r) {
    return omatmul(l, omatmul(m, r));
}

bool is_unitary(const OctMatrix& a, double tol) {
    if (a.rows != a.cols) throw std::invalid_argument("is_unitary: matrix not square");
    const OctMatrix id = OctMatrix::identity(a.rows);
    const OctMatrix act = a.conj_transpose();
    return (omatmul(a, act) - id).frob_norm() <= tol &&
           (omatmul(act, a) - id).frob_norm() <= tol;
}

OctMatrix dft_octonion(std::size_t p, Family f) {
    const CMatrix fp = dft_matrix(p);
    const Octonion u = family_unit(f);
    OctMatrix r(p, p);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j)
            r.at(i, j) = Octonion::from_complex(fp.at(i, j)) * u;
    return r;
}

OctMatrix kron_identity(const OctMatrix& a, std::size_t m) {
    OctMatrix r(a.rows * m, a.cols * m);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j)
            for (std::size_t k = 0; k < m; ++k) r.at(i * m + k, j * m + k) = a.at(i, j);
    return r;
}

OctMatrix to_octonion(const CdMatrix& a) {
    OctMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r.at(i, j) = Octonion::from_quaternion(a.qat(i, j));
    return r;
}

double offdiag_frob(const OctMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j)
            if (i != j) s += onorm_sq(a.at(i, j));
    return std::sqrt(s);
}

double offblockdiag_frob(const OctMatrix& a, std::size_t bm, std::size_t bn) {
    if (bm == 0 || bn == 0 || a.rows % bm != 0 || a.cols % bn != 0 ||
        a.rows / bm != a.cols / bn)
        throw std::invalid_argument("offblockdiag_frob: block shape mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j)
            if (i / bm != j / bn) s += onorm_sq(a.at(i, j));
    return std::sqrt(s);
}

} // namespace qtensor
