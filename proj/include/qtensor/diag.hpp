#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "qtensor/linalg.hpp"
#include "qtensor/transform.hpp"

namespace qtensor {

/// Block diagonal Diag(B_0, ..., B_{p-1}) with uniform m x n blocks.
struct BlockDiag {
    std::vector<CdMatrix> blocks;
};

/// Diagonal of the octonion-unitary conjugation of circ(q): computed on the
/// fast path as q_hat = sqrt(p) * F_p * conj(q) via the conjugate-fused FFT.
/// The family only selects the conjugating unit; the output is identical for
/// all three (they share one closed form), so the parameter is accepted for
/// interface symmetry with the brute-force checkers and otherwise unused.
std::vector<Quaternion> diagonalize_circ(std::span<const Quaternion> q,
                                         Family f = Family::L);

/// Block s = sum_r omega^{s r} conj(G_r): the conjugate-fused FFT applied to
/// the m x n x p generator stack.
BlockDiag block_diagonalize(const CirculantGen& g, Family f = Family::L);

/// Exact inverse of block_diagonalize (inverse conjugate-fused FFT).
CirculantGen reconstruct_circ(const BlockDiag& blocks, Family f = Family::L);

// ---- brute-force octonion verification (size-capped, test/verify paths) ----

/// Hard cap for any brute-force octonion path: p * max(m, n) <= 64.
inline constexpr std::size_t kBruteForceCap = 64;

/// Full sandwich (O circ(q)) O^* with O = dft_octonion(p, f), computed in
/// octonion arithmetic. Independent of the FFT path.
OctMatrix circ_sandwich_bruteforce(std::span<const Quaternion> q, Family f);

/// (O (x) I_m) bcirc(G) (O^* (x) I_n), all in octonion arithmetic.
OctMatrix bcirc_sandwich_bruteforce(const CirculantGen& g, Family f);

/// Reassembles bcirc(G) from its block diagonalization through the
/// conjugate-transposed DFT, which routes the first CD component through the
/// permutation P_p (x) I on both sides:
///   (-F_p^* u (x) I_m) [ (P_p (x) I_m) Diag(B1) (P_p (x) I_n) + Diag(B2) j ]
///   (F_p^* u (x) I_n).
/// Returned in octonion arithmetic so tests can compare against bcirc_build.
OctMatrix bcirc_from_blocks_bruteforce(const BlockDiag& blocks, Family f);

/// Relative off-diagonal Frobenius mass, offdiag(a) / ref_norm.
double offdiag_rel(const OctMatrix& a, double ref_norm);
double offdiag_rel(const CdMatrix& a, double ref_norm);

// ---- necessary-and-sufficient conditions for a CD-form diagonalizer ----

/// For F = F1 + F2 j to diagonalize every circulant quaternion matrix, the
/// eight products below must be diagonal for every real circulant A:
///   F1 A F1^*, F1 A F1^T, F1 A F2^T, F1 A F2^*,
///   F2 A F1^*, F2 A F1^T, F2 A F2^T, F2 A F2^*.
inline constexpr std::array<std::string_view, 8> kCdConditionNames = {
    "F1*A*F1H", "F1*A*F1T", "F1*A*F2T", "F1*A*F2H",
    "F2*A*F1H", "F2*A*F1T", "F2*A*F2T", "F2*A*F2H",
};

/// Relative off-diagonal mass of each of the eight condition matrices for one
/// real circulant A given by its generator vector.
std::array<double, 8> cd_diagonalizer_conditions(const CMatrix& f1, const CMatrix& f2,
                                                 std::span<const double> gen);

struct CdDiagReport {
    std::array<double, 8> worst{};  // max relative off-diagonal mass per condition
    std::array<bool, 8> pass{};
    bool all_pass = false;
    double unitary_err = 0.0;  // || F F^* - I ||_F for F = F1 + F2 j
    bool unitary_ok = false;   // warning flag only; conditions are still evaluated
    std::size_t trials = 0;
    /// Generator of the circulant witness that produced the largest relative
    /// off-diagonal mass across all conditions.
    std::vector<double> witness_gen;
};

/// Probabilistic check of the eight conditions over `trials` random real
/// circulants with components uniform in [-1, 1] from the given seed.
CdDiagReport cd_diagonalizer_check(const CMatrix& f1, const CMatrix& f2,
                                   std::size_t trials, double tol, std::uint64_t seed);

// ---- negative results: complex/quaternion DFT candidates fail ----

/// Candidate conjugators in the quaternion domain: F_p, F_p j, (F_p + F_p j)/sqrt(2).
enum class QCandidate { One, J, MixedJ };

/// CD form of the candidate unitary.
CdMatrix q_candidate(std::size_t p, QCandidate cand);

/// Relative off-diagonal mass of U circ(q) U^* for the candidate U
/// (quaternion arithmetic; associative, so no ordering subtleties).
double candidate_sandwich_offmass(QCandidate cand, std::span<const Quaternion> gens);

struct NegativeDiagReport {
    std::size_t p = 0;
    QCandidate candidate = QCandidate::One;
    double offdiag_rel_mass = 0.0;
    bool diagonal = false;  // true only in the documented p <= 2 exception
    /// Zero-based (row, col) positions of off-diagonal entries above
    /// 1e-9 * ||A||_F.
    std::vector<std::pair<std::size_t, std::size_t>> support;
};

/// Conjugates circ(j, 2j, ..., pj) by the chosen candidate and reports the
/// off-diagonal mass, which exceeds 0.1 * ||A|| for every p >= 3. For p <= 2
/// every candidate genuinely diagonalizes; that case is only reported (never
/// an error) when allow_small is set, and rejected otherwise.
NegativeDiagReport negative_diag_example(std::size_t p, QCandidate cand,
                                         bool allow_small = false);

} // namespace qtensor
