#include "qtensor/diag.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace qtensor {

namespace {

CdTensor3 tube_from_quaternions(std::span<const Quaternion> q) {
    CdTensor3 t(1, 1, q.size());
    for (std::size_t r = 0; r < q.size(); ++r) t.set_qat(0, 0, r, q[r]);
    return t;
}

CdTensor3 stack_from_gen(const CirculantGen& g) {
    CdTensor3 t(g.block_rows(), g.block_cols(), g.p());
    for (std::size_t r = 0; r < g.p(); ++r) t.set_slice(r, g.gens[r]);
    return t;
}

void check_cap(std::size_t p, std::size_t m, std::size_t n) {
    if (p * std::max(m, n) > kBruteForceCap)
        throw std::invalid_argument("brute-force octonion path exceeds size cap");
}

CdMatrix circ_cd(std::span<const Quaternion> gens) {
    const std::size_t p = gens.size();
    CdMatrix m(p, p);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) m.set_qat(i, j, gens[(i + p - j) % p]);
    return m;
}

} // namespace

std::vector<Quaternion> diagonalize_circ(std::span<const Quaternion> q, Family) {
    if (q.empty()) throw std::invalid_argument("diagonalize_circ: p must be >= 1");
    const CdTensor3 hat = qfft3_conj(tube_from_quaternions(q));
    std::vector<Quaternion> out(q.size());
    for (std::size_t r = 0; r < q.size(); ++r) out[r] = hat.qat(0, 0, r);
    return out;
}

BlockDiag block_diagonalize(const CirculantGen& g, Family) {
    if (g.p() == 0) throw std::invalid_argument("block_diagonalize: no generator blocks");
    const CdTensor3 hat = qfft3_conj(stack_from_gen(g));
    BlockDiag out;
    out.blocks.reserve(g.p());
    for (std::size_t r = 0; r < g.p(); ++r) out.blocks.push_back(hat.slice(r));
    return out;
}

CirculantGen reconstruct_circ(const BlockDiag& blocks, Family) {
    if (blocks.blocks.empty())
        throw std::invalid_argument("reconstruct_circ: no blocks");
    CdTensor3 hat(blocks.blocks[0].rows(), blocks.blocks[0].cols(), blocks.blocks.size());
    for (std::size_t r = 0; r < blocks.blocks.size(); ++r)
        hat.set_slice(r, blocks.blocks[r]);
    const CdTensor3 q = qifft3_conj(hat);
    std::vector<CdMatrix> gens;
    gens.reserve(q.p);
    for (std::size_t r = 0; r < q.p; ++r) gens.push_back(q.slice(r));
    return CirculantGen{std::move(gens)};
}

OctMatrix circ_sandwich_bruteforce(std::span<const Quaternion> q, Family f) {
    const std::size_t p = q.size();
    if (p == 0) throw std::invalid_argument("circ_sandwich_bruteforce: p must be >= 1");
    check_cap(p, 1, 1);
    const OctMatrix o = dft_octonion(p, f);
    return osandwich(o, to_octonion(circ_cd(q)), o.conj_transpose());
}

OctMatrix bcirc_sandwich_bruteforce(const CirculantGen& g, Family f) {
    const std::size_t p = g.p();
    if (p == 0) throw std::invalid_argument("bcirc_sandwich_bruteforce: empty generator");
    check_cap(p, g.block_rows(), g.block_cols());
    const OctMatrix o = dft_octonion(p, f);
    const OctMatrix left = kron_identity(o, g.block_rows());
    const OctMatrix right = kron_identity(o.conj_transpose(), g.block_cols());
    return osandwich(left, to_octonion(bcirc_build(g)), right);
}

OctMatrix bcirc_from_blocks_bruteforce(const BlockDiag& blocks, Family f) {
    const std::size_t p = blocks.blocks.size();
    if (p == 0) throw std::invalid_argument("bcirc_from_blocks_bruteforce: no blocks");
    const std::size_t m = blocks.blocks[0].rows(), n = blocks.blocks[0].cols();
    check_cap(p, m, n);

    // middle term: (P_p (x) I_m) Diag(B1) (P_p (x) I_n) + Diag(B2) j.
    // Conjugating a block diagonal by the permutation reorders the blocks by
    // the same index reflection the permutation encodes.
    CdMatrix mid(m * p, n * p);
    for (std::size_t r = 0; r < p; ++r) {
        const std::size_t rr = (p - r) % p;  // P_p block reflection
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                mid.a1.at(r * m + i, r * n + j) = blocks.blocks[rr].a1.at(i, j);
                mid.a2.at(r * m + i, r * n + j) = blocks.blocks[r].a2.at(i, j);
            }
    }

    const CMatrix fstar = dft_matrix(p).conj_transpose();
    const Octonion u = family_unit(f);
    OctMatrix ostar(p, p);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j)
            ostar.at(i, j) = Octonion::from_complex(fstar.at(i, j)) * u;

    OctMatrix left = kron_identity(ostar, m);
    for (Octonion& o : left.data) o = -o;
    const OctMatrix right = kron_identity(ostar, n);
    return osandwich(left, to_octonion(mid), right);
}

double offdiag_rel(const OctMatrix& a, double ref_norm) {
    return ref_norm > 0.0 ? offdiag_frob(a) / ref_norm : offdiag_frob(a);
}

double offdiag_rel(const CdMatrix& a, double ref_norm) {
    return ref_norm > 0.0 ? offdiag_frob(a) / ref_norm : offdiag_frob(a);
}

std::array<double, 8> cd_diagonalizer_conditions(const CMatrix& f1, const CMatrix& f2,
                                                 std::span<const double> gen) {
    if (f1.rows != f1.cols || f2.rows != f2.cols || f1.rows != f2.rows)
        throw std::invalid_argument("cd_diagonalizer_conditions: shape mismatch");
    if (gen.size() != f1.rows)
        throw std::invalid_argument("cd_diagonalizer_conditions: generator length");

    std::vector<Cx> cgen(gen.size());
    for (std::size_t i = 0; i < gen.size(); ++i) cgen[i] = gen[i];
    const CMatrix a = circulant(cgen);
    const double ref = a.frob_norm();

    const CMatrix f1h = f1.conj_transpose(), f1t = f1.transpose();
    const CMatrix f2h = f2.conj_transpose(), f2t = f2.transpose();

    auto offmass = [&](const CMatrix& left, const CMatrix& right) {
        const CMatrix mt = cmatmul(cmatmul(left, a), right);
        double s = 0.0;
        for (std::size_t i = 0; i < mt.rows; ++i)
            for (std::size_t j = 0; j < mt.cols; ++j)
                if (i != j) s += std::norm(mt.at(i, j));
        return ref > 0.0 ? std::sqrt(s) / ref : std::sqrt(s);
    };

    return {offmass(f1, f1h), offmass(f1, f1t), offmass(f1, f2t), offmass(f1, f2h),
            offmass(f2, f1h), offmass(f2, f1t), offmass(f2, f2t), offmass(f2, f2h)};
}

CdDiagReport cd_diagonalizer_check(const CMatrix& f1, const CMatrix& f2,
                                   std::size_t trials, double tol, std::uint64_t seed) {
    if (f1.rows != f1.cols || f2.rows != f2.cols || f1.rows != f2.rows)
        throw std::invalid_argument("cd_diagonalizer_check: shape mismatch");

    CdDiagReport rep;
    rep.trials = trials;

    const CdMatrix f{f1, f2};
    const CdMatrix gram = qmatmul(f, f.conj_transpose()) - CdMatrix::identity(f1.rows);
    rep.unitary_err = gram.frob_norm();
    rep.unitary_ok = rep.unitary_err <= tol;

    std::mt19937_64 eng(seed);
    std::vector<double> gen(f1.rows);
    double witness_mass = -1.0;
    for (std::size_t t = 0; t < trials; ++t) {
        for (double& v : gen)
            v = 2.0 * (static_cast<double>(eng() >> 11) * 0x1.0p-53) - 1.0;
        const std::array<double, 8> mass = cd_diagonalizer_conditions(f1, f2, gen);
        for (std::size_t k = 0; k < 8; ++k) {
            rep.worst[k] = std::max(rep.worst[k], mass[k]);
            if (mass[k] > witness_mass) {
                witness_mass = mass[k];
                rep.witness_gen = gen;
            }
        }
    }
    rep.all_pass = true;
    for (std::size_t k = 0; k < 8; ++k) {
        rep.pass[k] = rep.worst[k] <= tol;
        rep.all_pass = rep.all_pass && rep.pass[k];
    }
    return rep;
}

CdMatrix q_candidate(std::size_t p, QCandidate cand) {
    const CMatrix f = dft_matrix(p);
    CdMatrix u(p, p);
    switch (cand) {
        case QCandidate::One:
            u.a1 = f;
            break;
        case QCandidate::J:
            u.a2 = f;
            break;
        case QCandidate::MixedJ: {
            const Cx s{1.0 / std::numbers::sqrt2, 0.0};
            u.a1 = f * s;
            u.a2 = f * s;
            break;
        }
    }
    return u;
}

double candidate_sandwich_offmass(QCandidate cand, std::span<const Quaternion> gens) {
    if (gens.empty()) throw std::invalid_argument("candidate_sandwich_offmass: empty");
    const CdMatrix a = circ_cd(gens);
    const CdMatrix u = q_candidate(gens.size(), cand);
    const CdMatrix s = qmatmul(qmatmul(u, a), u.conj_transpose());
    return offdiag_rel(s, a.frob_norm());
}

NegativeDiagReport negative_diag_example(std::size_t p, QCandidate cand, bool allow_small) {
    if (p == 0) throw std::invalid_argument("negative_diag_example: p must be >= 1");
    if (p < 3 && !allow_small)
        throw std::invalid_argument(
            "negative_diag_example: p < 3 is genuinely diagonalizable; "
            "pass allow_small to get the report");

    std::vector<Quaternion> gens(p);
    for (std::size_t r = 0; r < p; ++r)
        gens[r] = Quaternion{0.0, 0.0, static_cast<double>(r + 1), 0.0};

    const CdMatrix a = circ_cd(gens);
    const CdMatrix u = q_candidate(p, cand);
    const CdMatrix s = qmatmul(qmatmul(u, a), u.conj_transpose());
    const double ref = a.frob_norm();

    NegativeDiagReport rep;
    rep.p = p;
    rep.candidate = cand;
    rep.offdiag_rel_mass = offdiag_rel(s, ref);
    rep.diagonal = rep.offdiag_rel_mass <= 1e-12;
    const double support_tol = 1e-9 * ref;
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) {
            if (i == j) continue;
            if (qnorm(s.qat(i, j)) > support_tol) rep.support.emplace_back(i, j);
        }
    return rep;
}

} // namespace qtensor
