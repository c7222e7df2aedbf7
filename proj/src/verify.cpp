#include "qtensor/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qtensor/diag.hpp"
#include "qtensor/rng.hpp"
#include "qtensor/tproduct.hpp"

#include <json.hpp>

namespace qtensor {

namespace {

Cx rand_cx(Rng& rng) { return {rng.sym(), rng.sym()}; }

Quaternion rand_q(Rng& rng) { return {rng.sym(), rng.sym(), rng.sym(), rng.sym()}; }

double rel(double err, double scale) { return scale > 0.0 ? err / scale : err; }

double odiff(const Octonion& a, const Octonion& b) { return onorm(a - b); }

double tensor_rel_err(const CdTensor3& got, const CdTensor3& want) {
    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k < got.size(); ++k) {
        num += std::norm(got.t1[k] - want.t1[k]) + std::norm(got.t2[k] - want.t2[k]);
        den += std::norm(want.t1[k]) + std::norm(want.t2[k]);
    }
    return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

double cd_rel_err(const CdMatrix& got, const CdMatrix& want) {
    const double den = want.frob_norm();
    const double num = (got - want).frob_norm();
    return den > 0.0 ? num / den : num;
}

struct Suite {
    std::vector<CheckResult>& out;
    double tol_scale;

    void add(std::string name, double worst, double tol, std::string detail = {}) {
        const double t = tol * tol_scale;
        out.push_back({std::move(name), worst <= t, worst, t, std::move(detail)});
    }
    /// For checks that must EXCEED a margin (negative results).
    void add_margin(std::string name, double margin, double bound, std::string detail = {}) {
        out.push_back({std::move(name), margin > bound, margin, bound, std::move(detail)});
    }
    void add_flag(std::string name, bool pass, std::string detail = {}) {
        out.push_back({std::move(name), pass, pass ? 0.0 : 1.0, 0.5, std::move(detail)});
    }
};

Octonion oct_cx(const Cx& z) { return Octonion::from_complex(z); }

// ---------------------------------------------------------------- algebra --

void algebra_suite(Suite& s, std::uint64_t seed) {
    Rng rng(seed);
    const Octonion l = Octonion::unit(4);
    const Octonion jl = Octonion::unit(6);
    const Octonion j = Octonion::unit(2);

    {
        double worst = 0.0;
        for (int t = 0; t < 10'000; ++t) {
            Octonion a, b;
            for (double& v : a.c) v = rng.sym();
            for (double& v : b.c) v = rng.sym();
            const double scale = onorm(a) * onorm(b);
            worst = std::max(worst, rel(odiff(omul_table(a, b), omul_closed(a, b)), scale));
        }
        s.add("algebra.table_vs_closed", worst, 1e-14, "10^4 random pairs");
    }
    {
        double worst = 0.0;
        for (int t = 0; t < 1'000; ++t) {
            const Octonion q = Octonion::from_quaternion(rand_q(rng));
            worst = std::max(worst, rel(odiff(l * q, oconj(q) * l), onorm(q)));
        }
        s.add("algebra.l_commutation", worst, 1e-14, "l q == conj(q) l");
    }
    {
        // closed forms of the structured triples (p u) b (r u), left-assoc
        double worst = 0.0;
        for (int t = 0; t < 1'000; ++t) {
            const Cx p = rand_cx(rng), q = rand_cx(rng), r = rand_cx(rng), sc = rand_cx(rng);
            const double scale = std::abs(p) * std::abs(q) * std::abs(r) + 1e-30;
            const Octonion pl = oct_cx(p) * l, rl = oct_cx(r) * l;
            const Octonion pjl = oct_cx(p) * jl, rjl = oct_cx(r) * jl;
            const Octonion qj = oct_cx(q) * j;
            const Cx pc = std::conj(p), qc = std::conj(q), rc = std::conj(r);

            worst = std::max(worst, rel(odiff(triple(pl, oct_cx(q), rl), oct_cx(-p * qc * rc)), scale));
            worst = std::max(worst, rel(odiff(triple(pjl, oct_cx(q), rjl), oct_cx(-p * qc * rc)), scale));
            worst = std::max(worst, rel(odiff(triple(pl, qj, rl), oct_cx(p * q * rc) * j), scale));
            worst = std::max(worst, rel(odiff(triple(pjl, qj, rjl), oct_cx(p * q * rc) * j), scale));
            worst = std::max(worst, rel(odiff(triple(pl, oct_cx(q), rjl), oct_cx(pc * q * rc) * j), scale));
            worst = std::max(worst, rel(odiff(triple(pjl, oct_cx(q), rl), -(oct_cx(pc * q * rc) * j)), scale));
            worst = std::max(worst, rel(odiff(triple(pl, qj, rjl), oct_cx(pc * qc * rc)), scale));
            worst = std::max(worst, rel(odiff(triple(pjl, qj, rl), -oct_cx(pc * qc * rc)), scale));

            // u (v l) == (v l) conj(u) for quaternions u, v
            const Octonion u = Octonion::from_quaternion(cd_join(p, q));
            const Octonion vl = Octonion::from_quaternion(cd_join(r, sc)) * l;
            worst = std::max(worst, rel(odiff(u * vl, vl * oconj(u)), onorm(u) * onorm(vl)));
        }
        s.add("algebra.structured_triples", worst, 1e-13, "closed forms, l and jl forms");
    }
    {
        // special associative regroupings that do hold
        double worst = 0.0;
        for (int t = 0; t < 1'000; ++t) {
            const Cx p = rand_cx(rng), q = rand_cx(rng), r = rand_cx(rng);
            const Cx sc = rand_cx(rng), tc = rand_cx(rng);
            const Octonion P = oct_cx(p), R = oct_cx(r);
            const Octonion pl = P * l, ql = oct_cx(q) * l, sl = oct_cx(sc) * l, tl = oct_cx(tc) * l;
            const Octonion qbl = oct_cx(std::conj(q)) * l, sbl = oct_cx(std::conj(sc)) * l;
            const Octonion tbl = oct_cx(std::conj(tc)) * l;
            const Octonion pj = P * j, rj = oct_cx(r) * j;
            const Octonion pjl = P * jl;
            const Octonion in1 = triple(ql, R, sl);
            const Octonion in2 = triple(ql, rj, sl);
            const double scale = std::abs(p) * std::abs(q) * std::abs(r) * std::abs(sc) + 1e-30;

            worst = std::max(worst, rel(odiff(P * in1, triple(P * ql, R, sl)), scale));
            worst = std::max(worst, rel(odiff(P * in2, triple(P * ql, rj, sl)), scale));
            worst = std::max(worst, rel(odiff(pj * in1, triple(pj * qbl, R, sbl)), scale));
            worst = std::max(worst, rel(odiff(pj * in2, triple(pj * qbl, rj, sbl)), scale));
            worst = std::max(worst, rel(odiff(triple(pl, in1, tl), triple(pl * ql, R, sl * tl)), scale));
            worst = std::max(worst, rel(odiff(triple(pl, oct_cx(q * r * sc), tl),
                                              triple(pl * oct_cx(q), R, oct_cx(sc) * tl)), scale));
            worst = std::max(worst, rel(odiff(triple(pl, in2, tl), triple(pl * qbl, rj, sl * tbl)), scale));
            const double c = q.real(), d = sc.real();
            worst = std::max(worst, rel(odiff(triple(pl, rj * (c * d), sl),
                                              triple(pl * c, rj, sl * d)), scale));
            worst = std::max(worst, rel(odiff(triple(pl, ql, sl), pl * (ql * sl)), scale));
            worst = std::max(worst, rel(odiff(triple(pjl, ql, sl), pjl * (qbl * sbl)), scale));
            const Octonion u = P + oct_cx(q) * j, v = R + oct_cx(sc) * j;
            const Octonion uv = oct_cx(p * r - std::conj(q) * sc) +
                                oct_cx(std::conj(p) * sc + q * r) * j;
            worst = std::max(worst, rel(odiff(triple(tl, u, v), tl * uv), scale));
        }
        s.add("algebra.associative_patterns", worst, 1e-13);
    }
    {
        // non-associativity must be observable on the remaining patterns
        double wa = 0.0, wb = 0.0, wc = 0.0, wd = 0.0;
        for (int t = 0; t < 64; ++t) {
            const Cx p = rand_cx(rng), q = rand_cx(rng), r = rand_cx(rng), sc = rand_cx(rng);
            const Octonion pl = oct_cx(p) * l, ql = oct_cx(q) * l, rl = oct_cx(r) * l;
            const Octonion rj = oct_cx(r) * j, pj = oct_cx(p) * j;
            const Octonion pjl = oct_cx(p) * jl;
            wa = std::max(wa, odiff(triple(pl, ql, rj), triple_right(pl, ql, rj)));
            wb = std::max(wb, odiff(triple(pj, ql, rl), triple_right(pj, ql, rl)));
            wc = std::max(wc, odiff(triple(pjl, ql, rl), triple_right(pjl, ql, rl)));
            const Octonion u = oct_cx(p) + oct_cx(q) * j, v = oct_cx(r) + oct_cx(sc) * j;
            const Octonion tl = oct_cx(rand_cx(rng)) * l;
            wd = std::max(wd, odiff(triple(tl, u, v), triple_right(tl, u, v)));
        }
        s.add_margin("algebra.nonassoc_witness", std::min({wa, wb, wc, wd}), 1e-3,
                     "each pattern must differ under re-association");
    }
    {
        // (p u)(q + r j)(s u) == -p conj(q) conj(s) + p r conj(s) j, all families
        double worst = 0.0;
        for (int t = 0; t < 1'000; ++t) {
            const Cx p = rand_cx(rng), q = rand_cx(rng), r = rand_cx(rng), sc = rand_cx(rng);
            const Quaternion mid = cd_join(q, r);
            const double scale = std::abs(p) * qnorm(mid) * std::abs(sc) + 1e-30;
            for (Family f : {Family::L, Family::JL, Family::Mixed}) {
                const Octonion u = family_unit(f);
                const Octonion lhs = triple(oct_cx(p) * u, Octonion::from_quaternion(mid),
                                            oct_cx(sc) * u);
                const Octonion rhs = oct_cx(-p * std::conj(q) * std::conj(sc)) +
                                     oct_cx(p * r * std::conj(sc)) * j;
                worst = std::max(worst, rel(odiff(lhs, rhs), scale));
            }
        }
        s.add("algebra.cd_sandwich_rule", worst, 1e-13, "three conjugator families");
    }
    {
        double worst = 0.0;
        for (int t = 0; t < 2'000; ++t) {
            Octonion a, b;
            for (double& v : a.c) v = rng.sym();
            for (double& v : b.c) v = rng.sym();
            const double scale = onorm(a) * onorm(b);
            worst = std::max(worst, rel(std::abs(onorm(a * b) - scale), scale));
        }
        s.add("algebra.composition_law", worst, 1e-12, "|ab| == |a||b|");
    }
    {
        double worst = 0.0;
        for (int t = 0; t < 1'000; ++t) {
            const Quaternion a = rand_q(rng), b = rand_q(rng);
            const Octonion viaoct = Octonion::from_quaternion(a) * Octonion::from_quaternion(b);
            worst = std::max(worst, rel(odiff(Octonion::from_quaternion(qmul(a, b)), viaoct),
                                        qnorm(a) * qnorm(b)));
        }
        s.add("algebra.quaternion_embedding", worst, 1e-14);
    }
}

// ------------------------------------------------------------------- diag --

OctMatrix dft_octonion_maybe_corrupt(std::size_t p, Family f, bool corrupt) {
    if (!corrupt) return dft_octonion(p, f);
    const CMatrix fp = dft_matrix(p).conj();  // flipped DFT sign
    const Octonion u = family_unit(f);
    OctMatrix r(p, p);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j2 = 0; j2 < p; ++j2)
            r.at(i, j2) = Octonion::from_complex(fp.at(i, j2)) * u;
    return r;
}

CirculantGen random_gen(Rng& rng, std::size_t m, std::size_t n, std::size_t p) {
    std::vector<CdMatrix> gens;
    gens.reserve(p);
    for (std::size_t r = 0; r < p; ++r) {
        CdMatrix blk(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) blk.set_qat(i, j, rand_q(rng));
        gens.push_back(std::move(blk));
    }
    return CirculantGen{std::move(gens)};
}

void diag_suite(Suite& s, std::uint64_t seed, bool corrupt) {
    Rng rng(seed);
    constexpr Family kFamilies[] = {Family::L, Family::JL, Family::Mixed};

    {
        double worst = 0.0;
        for (std::size_t p = 2; p <= 16; ++p)
            for (Family f : kFamilies) {
                const OctMatrix o = dft_octonion(p, f);
                const OctMatrix oct = o.conj_transpose();
                const OctMatrix id = OctMatrix::identity(p);
                worst = std::max(worst, (omatmul(o, oct) - id).frob_norm());
                worst = std::max(worst, (omatmul(oct, o) - id).frob_norm());
            }
        s.add("diag.octonion_dft_unitary", worst, 1e-12, "p in 2..16, three families");
    }
    {
        double worst = 0.0;
        for (std::size_t p = 1; p <= 16; ++p) {
            const std::vector<Quaternion> q = gen_random_quaternions(p, rng.next_u64());
            double qn = 0.0;
            for (const Quaternion& v : q) qn += qnorm_sq(v);
            qn = std::sqrt(qn);
            for (Family f : kFamilies)
                worst = std::max(worst, offdiag_rel(circ_sandwich_bruteforce(q, f), qn));
        }
        s.add("diag.sandwich_offdiag", worst, 1e-11, "octonion sandwich is diagonal");
    }
    {
        double worst = 0.0;
        for (int t = 0; t < 50; ++t) {
            const std::size_t p = 1 + (static_cast<std::size_t>(rng.next_u64()) % 16);
            const std::vector<Quaternion> q = gen_random_quaternions(p, rng.next_u64());
            double qn = 0.0;
            for (const Quaternion& v : q) qn += qnorm_sq(v);
            qn = std::sqrt(qn);
            const std::vector<Quaternion> fftpath = diagonalize_circ(q);

            OctMatrix circ(p, p);
            for (std::size_t i = 0; i < p; ++i)
                for (std::size_t j2 = 0; j2 < p; ++j2)
                    circ.at(i, j2) = Octonion::from_quaternion(q[(i + p - j2) % p]);
            const OctMatrix o = dft_octonion_maybe_corrupt(p, Family::L, corrupt);
            const OctMatrix sand = osandwich(o, circ, o.conj_transpose());
            for (std::size_t r = 0; r < p; ++r)
                worst = std::max(
                    worst, rel(odiff(sand.at(r, r), Octonion::from_quaternion(fftpath[r])), qn));
        }
        s.add("diag.fft_vs_bruteforce", worst, 1e-11,
              "50 seeded circulants, p <= 16, fft path == octonion sandwich diagonal");
    }
    {
        double worst = 0.0;
        for (std::size_t p : {2, 3, 5, 8}) {
            const std::vector<Quaternion> q = gen_random_quaternions(p, rng.next_u64());
            const OctMatrix sl = circ_sandwich_bruteforce(q, Family::L);
            const OctMatrix sjl = circ_sandwich_bruteforce(q, Family::JL);
            const OctMatrix smx = circ_sandwich_bruteforce(q, Family::Mixed);
            for (std::size_t r = 0; r < p; ++r) {
                worst = std::max(worst, odiff(sl.at(r, r), sjl.at(r, r)));
                worst = std::max(worst, odiff(sl.at(r, r), smx.at(r, r)));
            }
        }
        s.add("diag.families_identical", worst, 1e-12, "all families share one diagonal");
    }
    {
        double worst = 0.0;
        for (std::size_t p = 1; p <= 8; ++p) {
            const CirculantGen g = random_gen(rng, 3, 2, p);
            const CirculantGen back = reconstruct_circ(block_diagonalize(g));
            double num = 0.0, den = 0.0;
            for (std::size_t r = 0; r < p; ++r) {
                num += std::pow((back.gens[r] - g.gens[r]).frob_norm(), 2);
                den += std::pow(g.gens[r].frob_norm(), 2);
            }
            worst = std::max(worst, std::sqrt(num / den));
        }
        s.add("diag.block_roundtrip", worst, 1e-12, "3x2 blocks, p <= 8");
    }
    {
        double worst = 0.0;
        for (auto [m, n, p] : {std::array<std::size_t, 3>{2, 3, 4}, {3, 2, 8}}) {
            const CirculantGen g = random_gen(rng, m, n, p);
            const BlockDiag bd = block_diagonalize(g);
            const OctMatrix sand = bcirc_sandwich_bruteforce(g, Family::L);
            double ref = 0.0;
            for (const CdMatrix& blk : g.gens) ref += std::pow(blk.frob_norm(), 2);
            ref = std::sqrt(ref);
            worst = std::max(worst, offblockdiag_frob(sand, m, n) / ref);
            for (std::size_t r = 0; r < p; ++r)
                for (std::size_t i = 0; i < m; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        worst = std::max(
                            worst,
                            rel(odiff(sand.at(r * m + i, r * n + j),
                                      Octonion::from_quaternion(bd.blocks[r].qat(i, j))),
                                ref));
        }
        s.add("diag.block_bruteforce", worst, 1e-11,
              "kron sandwich matches fft block diagonalization");
    }
    {
        double worst = 0.0;
        for (auto [m, n, p] : {std::array<std::size_t, 3>{2, 2, 4}, {1, 3, 6}}) {
            const CirculantGen g = random_gen(rng, m, n, p);
            const OctMatrix lhs = bcirc_from_blocks_bruteforce(block_diagonalize(g), Family::L);
            const OctMatrix rhs = to_octonion(bcirc_build(g));
            worst = std::max(worst, (lhs - rhs).frob_norm() / rhs.frob_norm());
        }
        s.add("diag.blocks_to_bcirc_identity", worst, 1e-11,
              "permuted-diagonal reconstruction through the conjugated DFT");
    }
    {
        const NegativeDiagReport rep = negative_diag_example(4, QCandidate::One);
        const bool ok = rep.support ==
                        std::vector<std::pair<std::size_t, std::size_t>>{{1, 3}, {3, 1}};
        s.add_flag("diag.counterexample_p4_support", ok && !rep.diagonal,
                   "off-diagonal support must be exactly (2,4),(4,2) one-based");
    }
    {
        double min_mass = 1e300;
        for (std::size_t p = 3; p <= 8; ++p) {
            const std::vector<Quaternion> gens = gen_random_quaternions(p, rng.next_u64());
            for (QCandidate c : {QCandidate::One, QCandidate::J, QCandidate::MixedJ})
                min_mass = std::min(min_mass, candidate_sandwich_offmass(c, gens));
        }
        s.add_margin("diag.counterexamples_decisive", min_mass, 0.1,
                     "every DFT-based quaternion candidate fails for p >= 3");
    }
    {
        double worst = 0.0;
        for (std::size_t p : {std::size_t{1}, std::size_t{2}}) {
            const std::vector<Quaternion> gens = gen_random_quaternions(p, rng.next_u64());
            for (QCandidate c : {QCandidate::One, QCandidate::J, QCandidate::MixedJ}) {
                worst = std::max(worst, candidate_sandwich_offmass(c, gens));
                const NegativeDiagReport rep = negative_diag_example(p, c, true);
                worst = std::max(worst, rep.offdiag_rel_mass);
            }
        }
        s.add("diag.small_p_exception", worst, 1e-12,
              "p <= 2: all candidates genuinely diagonalize");
    }
    {
        bool ok = true;
        double fail_margin = 1e300;
        for (std::size_t p = 3; p <= 8; ++p) {
            const CMatrix f1 = dft_matrix(p);
            const CMatrix f2(p, p);
            const CdDiagReport rep = cd_diagonalizer_check(f1, f2, 8, 1e-11, rng.next_u64());
            ok = ok && rep.unitary_ok && !rep.all_pass;
            double worst_fail = 0.0;
            for (std::size_t k = 0; k < 8; ++k)
                if (!rep.pass[k]) worst_fail = std::max(worst_fail, rep.worst[k]);
            fail_margin = std::min(fail_margin, worst_fail);
        }
        const CdDiagReport rep2 =
            cd_diagonalizer_check(dft_matrix(2), CMatrix(2, 2), 8, 1e-11, rng.next_u64());
        ok = ok && rep2.all_pass && rep2.unitary_ok;
        s.add_flag("diag.cd_conditions_dft", ok && fail_margin > 1e-3,
                   "F1=F_p, F2=0: some condition fails for p >= 3, all pass at p = 2");
    }
}

// --------------------------------------------------------------- tproduct --

void tproduct_suite(Suite& s, std::uint64_t seed) {
    Rng rng(seed);

    {
        double worst = 0.0;
        for (int t = 0; t < 100; ++t) {
            const std::size_t m = 1 + rng.next_u64() % 8, n = 1 + rng.next_u64() % 8;
            const std::size_t k = 1 + rng.next_u64() % 8, p = 1 + rng.next_u64() % 12;
            const CdTensor3 a = gen_random_tensor(m, n, p, rng.next_u64());
            const CdTensor3 b = gen_random_tensor(n, k, p, rng.next_u64());
            worst = std::max(worst, tensor_rel_err(tprod_fast(a, b), tprod_naive(a, b)));
        }
        s.add("tproduct.fast_vs_naive", worst, 1e-11,
              "100 seeded cases, m,n,s in [1,8], p in [1,12]");
    }
    {
        double worst = 0.0;
        for (auto [m, n, k, p] : {std::array<std::size_t, 4>{2, 3, 2, 4}, {3, 2, 4, 5}}) {
            const CdTensor3 a = gen_random_tensor(m, n, p, rng.next_u64());
            const CdTensor3 b = gen_random_tensor(n, k, p, rng.next_u64());
            const CdMatrix lhs = bcirc_of_tensor(tprod_naive(a, b));
            const CdMatrix rhs = qmatmul(bcirc_of_tensor(a), bcirc_of_tensor(b));
            worst = std::max(worst, cd_rel_err(lhs, rhs));
        }
        s.add("tproduct.bcirc_multiplicative", worst, 1e-12,
              "bcirc(a * b) == bcirc(a) bcirc(b)");
    }
    {
        double worst = 0.0;
        for (auto [m, n, k, u, p] :
             {std::array<std::size_t, 5>{2, 3, 2, 2, 4}, {3, 2, 2, 3, 3}}) {
            const CdTensor3 a = gen_random_tensor(m, n, p, rng.next_u64());
            const CdTensor3 b = gen_random_tensor(n, k, p, rng.next_u64());
            const CdTensor3 c = gen_random_tensor(k, u, p, rng.next_u64());
            worst = std::max(worst, tensor_rel_err(tprod_naive(tprod_naive(a, b), c),
                                                   tprod_naive(a, tprod_naive(b, c))));
        }
        s.add("tproduct.naive_associative", worst, 1e-10);
    }
    {
        double worst = 0.0;
        for (auto [m, n, p] : {std::array<std::size_t, 3>{3, 4, 5}, {2, 2, 1}}) {
            const CdTensor3 a = gen_random_tensor(m, n, p, rng.next_u64());
            worst = std::max(worst, tensor_rel_err(tprod_naive(a, identity_tensor(n, p)), a));
            worst = std::max(worst, tensor_rel_err(tprod_fast(a, identity_tensor(n, p)), a));
        }
        s.add("tproduct.right_identity", worst, 1e-12);
    }
    {
        const CdTensor3 a = gen_random_tensor(4, 3, 6, rng.next_u64());
        const CdTensor3 back = fold(unfold(a), a.p);
        s.add("tproduct.fold_unfold_roundtrip", tensor_rel_err(back, a), 0.0, "bitwise");
    }
    {
        bool ok = true;
        for (auto [m, n, k, p] :
             {std::array<std::size_t, 4>{1, 1, 1, 2}, {3, 4, 5, 7}, {8, 8, 8, 12}}) {
            const TprodFlops f = flops_estimate(m, n, k, p);
            ok = ok && f.naive_mults == f.fast_mults * p;
        }
        s.add_flag("tproduct.flops_ratio", ok, "direct/fast multiplication ratio == p");
    }
}

} // namespace

std::vector<CheckResult> run_verify(const VerifyOptions& opts) {
    const bool all = opts.suite == "all";
    if (!all && opts.suite != "algebra" && opts.suite != "diag" && opts.suite != "tproduct")
        throw std::invalid_argument("unknown suite: " + opts.suite);

    std::vector<CheckResult> results;
    Suite s{results, opts.tol_scale};
    if (all || opts.suite == "algebra") algebra_suite(s, opts.seed);
    if (all || opts.suite == "diag") diag_suite(s, opts.seed + 1, opts.corrupt_dft_sign);
    if (all || opts.suite == "tproduct") tproduct_suite(s, opts.seed + 2);
    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& c) { return c.pass; });
}

std::string verify_report_json(const VerifyOptions& opts,
                               const std::vector<CheckResult>& results) {
    nlohmann::json j;
    j["suite"] = opts.suite;
    j["seed"] = opts.seed;
    j["tol_scale"] = opts.tol_scale;
    j["pass"] = all_passed(results);
    j["checks"] = nlohmann::json::array();
    for (const CheckResult& c : results)
        j["checks"].push_back({{"name", c.name},
                               {"pass", c.pass},
                               {"worst", c.worst},
                               {"tol", c.tol},
                               {"detail", c.detail}});
    return j.dump(2) + "\n";
}

} // namespace qtensor
