#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qtensor/algebra.hpp"

namespace qtensor {

/// Which imaginary unit multiplies the DFT matrix to form the octonion
/// diagonalizer: l, jl, or (l + jl)/sqrt(2). All three produce the same
/// diagonal; they differ only as unitary conjugators.
enum class Family { L, JL, Mixed };

Octonion family_unit(Family f);

/// Dense complex matrix, row-major.
struct CMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Cx> data;

    CMatrix() = default;
    CMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    static CMatrix identity(std::size_t n);

    Cx& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const Cx& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    CMatrix transpose() const;
    CMatrix conj() const;
    CMatrix conj_transpose() const;
    double frob_norm() const;

    friend CMatrix operator+(const CMatrix& a, const CMatrix& b);
    friend CMatrix operator-(const CMatrix& a, const CMatrix& b);
    friend CMatrix operator*(const CMatrix& a, Cx s);
};

CMatrix cmatmul(const CMatrix& a, const CMatrix& b);

/// Normalized DFT matrix: entry (s, m) = omega^{s m} / sqrt(p) with
/// omega = exp(-2 pi i / p) (zero-based indices). Unitary and symmetric.
CMatrix dft_matrix(std::size_t p);

/// Involutory permutation with ones at (0,0) and (i, p-i) for i >= 1
/// (one-based: (1,1) and i + j = p + 2). Equals F_p F_p.
CMatrix perm_matrix(std::size_t p);

/// Kronecker product a (x) I_m.
CMatrix kron_identity(const CMatrix& a, std::size_t m);

/// Complex circulant with the given first column.
CMatrix circulant(std::span<const Cx> gen);

/// Quaternion matrix in Cayley-Dickson form A = a1 + a2 j with a1, a2 complex.
///
/// This is the primary quaternion-matrix representation: all fast paths are
/// stated on the CD components. The quaternion entry view exists for oracles.
struct CdMatrix {
    CMatrix a1, a2;

    CdMatrix() = default;
    CdMatrix(std::size_t r, std::size_t c) : a1(r, c), a2(r, c) {}
    CdMatrix(CMatrix m1, CMatrix m2);

    static CdMatrix identity(std::size_t n);

    std::size_t rows() const { return a1.rows; }
    std::size_t cols() const { return a1.cols; }

    Quaternion qat(std::size_t i, std::size_t j) const {
        return cd_join(a1.at(i, j), a2.at(i, j));
    }
    void set_qat(std::size_t i, std::size_t j, const Quaternion& q) {
        auto [p1, p2] = cd_split(q);
        a1.at(i, j) = p1;
        a2.at(i, j) = p2;
    }

    /// (a1 + a2 j)^* = a1^* - a2^T j.
    CdMatrix conj_transpose() const;
    double frob_norm() const;

    friend CdMatrix operator+(const CdMatrix& a, const CdMatrix& b);
    friend CdMatrix operator-(const CdMatrix& a, const CdMatrix& b);
};

/// (a1 + a2 j)(b1 + b2 j) = (a1 b1 - a2 conj(b2)) + (a1 b2 + a2 conj(b1)) j.
CdMatrix qmatmul(const CdMatrix& a, const CdMatrix& b);

double offdiag_frob(const CdMatrix& a);

/// Generators of a block circulant quaternion matrix: p blocks, all m x n.
struct CirculantGen {
    std::vector<CdMatrix> gens;

    CirculantGen() = default;
    explicit CirculantGen(std::vector<CdMatrix> g);

    std::size_t p() const { return gens.size(); }
    std::size_t block_rows() const { return gens.empty() ? 0 : gens[0].rows(); }
    std::size_t block_cols() const { return gens.empty() ? 0 : gens[0].cols(); }
};

/// mp x np block circulant with block (r, c) = gens[(r - c) mod p].
CdMatrix bcirc_build(const CirculantGen& g);

/// Dense octonion matrix. Used only by the brute-force verification paths,
/// which are size-capped; never on a fast path.
struct OctMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Octonion> data;

    OctMatrix() = default;
    OctMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    static OctMatrix identity(std::size_t n);

    Octonion& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const Octonion& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    OctMatrix conj_transpose() const;
    double frob_norm() const;

    friend OctMatrix operator-(const OctMatrix& a, const OctMatrix& b);
};

/// Entry (i, j) = sum_k a(i, k) b(k, j), each term one octonion product,
/// accumulated in index order.
OctMatrix omatmul(const OctMatrix& a, const OctMatrix& b);

/// Left-associated sandwich (L M) R. Association order matters.
OctMatrix osandwich(const OctMatrix& l, const OctMatrix& m, const OctMatrix& r);

/// L (M R), for the association-pattern property tests only.
OctMatrix osandwich_right(const OctMatrix& l, const OctMatrix& m, const OctMatrix& r);

/// True iff A A^* and A^* A are both within tol of the identity in Frobenius
/// norm (left-associated products).
bool is_unitary(const OctMatrix& a, double tol);

/// F_p scaled entrywise by the family unit: entry (s, m) = (F_p)_{s,m} * u.
OctMatrix dft_octonion(std::size_t p, Family f);

OctMatrix kron_identity(const OctMatrix& a, std::size_t m);

/// Embeds a CD-form quaternion matrix entrywise.
OctMatrix to_octonion(const CdMatrix& a);

double offdiag_frob(const OctMatrix& a);

/// Frobenius mass outside the diagonal bm x bn blocks of a (bm*k) x (bn*k)
/// block matrix.
double offblockdiag_frob(const OctMatrix& a, std::size_t bm, std::size_t bn);

} // namespace qtensor
