#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "test_util.hpp"

using namespace qtensor;
using qtest::o_err;
using qtest::q_err;
using qtest::rand_cx;
using qtest::rand_o;
using qtest::rand_q;

namespace {
const Octonion kI = Octonion::unit(1);
const Octonion kJ = Octonion::unit(2);
const Octonion kK = Octonion::unit(3);
const Octonion kL = Octonion::unit(4);
const Octonion kIl = Octonion::unit(5);
const Octonion kJl = Octonion::unit(6);
const Octonion kKl = Octonion::unit(7);

Octonion ocx(const Cx& z) { return Octonion::from_complex(z); }
} // namespace

TEST_CASE("basis products from the multiplication table") {
    CHECK(o_err(omul_table(kJ, kIl), kKl) == 0.0);
    CHECK(o_err(omul_table(kL, kI), -kIl) == 0.0);
    CHECK(o_err(omul_table(kI, kJ), kK) == 0.0);
    CHECK(o_err(omul_table(kIl, kJl), -kK) == 0.0);
    CHECK(o_err(omul_table(kL, kL), -Octonion::one()) == 0.0);

    Rng rng(11);
    for (int t = 0; t < 16; ++t) {
        const Octonion o = rand_o(rng);
        CHECK(o_err(omul_table(Octonion::one(), o), o) == 0.0);
        CHECK(o_err(omul_table(o, Octonion::one()), o) == 0.0);
    }
}

TEST_CASE("closed-form product agrees with the table product") {
    CHECK(o_err(omul_closed(kI, kJ), kK) == 0.0);
    CHECK(o_err(omul_closed(kIl, kJl), -kK) == 0.0);

    Rng rng(101);
    double worst = 0.0;
    for (int t = 0; t < 10'000; ++t) {
        const Octonion a = rand_o(rng), b = rand_o(rng);
        const double scale = onorm(a) * onorm(b);
        worst = std::max(worst, o_err(omul_table(a, b), omul_closed(a, b)) / scale);
    }
    CHECK(worst <= 1e-14);
}

TEST_CASE("conjugate and modulus") {
    const Octonion o = Octonion::one() + kI + kL;
    CHECK(o_err(oconj(o), Octonion::one() - kI - kL) == 0.0);

    Octonion all;
    for (double& v : all.c) v = 1.0;
    CHECK(onorm(all) == doctest::Approx(std::sqrt(8.0)).epsilon(1e-15));

    Rng rng(7);
    for (int t = 0; t < 100; ++t) {
        const Octonion a = rand_o(rng);
        CHECK(o_err(oconj(oconj(a)), a) == 0.0);
    }
}

TEST_CASE("composition law |ab| = |a||b|") {
    Rng rng(13);
    double worst = 0.0;
    for (int t = 0; t < 2'000; ++t) {
        const Octonion a = rand_o(rng), b = rand_o(rng);
        const double scale = onorm(a) * onorm(b);
        worst = std::max(worst, std::abs(onorm(omul_table(a, b)) - scale) / scale);
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("quaternion product and embedding") {
    CHECK(q_err(qmul({0, 0, 1, 0}, {0, 0, 0, 1}), {0, 1, 0, 0}) == 0.0);  // j k = i

    Rng rng(17);
    double worst = 0.0;
    for (int t = 0; t < 1'000; ++t) {
        const Quaternion a = rand_q(rng), b = rand_q(rng);
        const Quaternion prod = qmul(a, b);

        // q conj(q) is real and equals |q|^2
        const Quaternion qq = qmul(a, qconj(a));
        CHECK(std::abs(qq.w - qnorm_sq(a)) <= 1e-14 * qnorm_sq(a));
        CHECK(std::abs(qq.x) + std::abs(qq.y) + std::abs(qq.z) <= 1e-14);

        const Octonion viaoct =
            omul_table(Octonion::from_quaternion(a), Octonion::from_quaternion(b));
        worst = std::max(worst, o_err(Octonion::from_quaternion(prod), viaoct) /
                                    (qnorm(a) * qnorm(b)));
        CHECK(is_quaternion(viaoct, 0.0));  // embedding closed under product
    }
    CHECK(worst <= 1e-14);
}

TEST_CASE("cayley-dickson split and join") {
    const auto [p1, p2] = cd_split({1, 2, 3, 4});
    CHECK(p1 == Cx{1, 2});
    CHECK(p2 == Cx{3, 4});
    const auto [r1, r2] = cd_split({5, 0, 0, 0});
    CHECK(r1 == Cx{5, 0});
    CHECK(r2 == Cx{0, 0});

    Rng rng(23);
    for (int t = 0; t < 200; ++t) {
        const Quaternion q = rand_q(rng);
        const auto [a, b] = cd_split(q);
        CHECK(q_err(cd_join(a, b), q) == 0.0);
        CHECK(q_err(qconj(qconj(q)), q) == 0.0);
        CHECK(qnorm_sq(q) >= 0.0);
    }
}

TEST_CASE("structured triple products collapse to complex closed forms") {
    // (1 l) 1 (1 l) = l^2 = -1
    CHECK(o_err(triple(kL, Octonion::one(), kL), -Octonion::one()) == 0.0);

    Rng rng(29);
    double worst = 0.0;
    for (int t = 0; t < 1'000; ++t) {
        const Cx p = rand_cx(rng), q = rand_cx(rng), r = rand_cx(rng);
        const Cx pc = std::conj(p), qc = std::conj(q), rc = std::conj(r);
        const double scale = std::abs(p) * std::abs(q) * std::abs(r) + 1e-30;
        const Octonion pl = ocx(p) * kL, rl = ocx(r) * kL;
        const Octonion pjl = ocx(p) * kJl, rjl = ocx(r) * kJl;
        const Octonion qj = ocx(q) * kJ;

        auto upd = [&](const Octonion& got, const Octonion& want) {
            worst = std::max(worst, o_err(got, want) / scale);
        };
        upd(triple(pl, ocx(q), rl), ocx(-p * qc * rc));
        upd(triple(pjl, ocx(q), rjl), ocx(-p * qc * rc));
        upd(triple(pl, qj, rl), ocx(p * q * rc) * kJ);
        upd(triple(pjl, qj, rjl), ocx(p * q * rc) * kJ);
        upd(triple(pl, ocx(q), rjl), ocx(pc * q * rc) * kJ);
        upd(triple(pjl, ocx(q), rl), -(ocx(pc * q * rc) * kJ));
        upd(triple(pl, qj, rjl), ocx(pc * qc * rc));
        upd(triple(pjl, qj, rl), -ocx(pc * qc * rc));
    }
    CHECK(worst <= 1e-13);
}

TEST_CASE("quaternions commute past l-multiples via conjugation") {
    Rng rng(31);
    double worst = 0.0;
    for (int t = 0; t < 1'000; ++t) {
        const Octonion q = Octonion::from_quaternion(rand_q(rng));
        worst = std::max(worst, o_err(kL * q, oconj(q) * kL) / onorm(q));

        const Octonion u = Octonion::from_quaternion(rand_q(rng));
        const Octonion vl = Octonion::from_quaternion(rand_q(rng)) * kL;
        worst = std::max(worst, o_err(u * vl, vl * oconj(u)) / (onorm(u) * onorm(vl)));
    }
    CHECK(worst <= 1e-14);
}

TEST_CASE("sandwich rule for all three conjugator families") {
    Rng rng(37);
    const Octonion mixed = (kL + kJl) * (1.0 / std::numbers::sqrt2);
    double worst = 0.0;
    for (int t = 0; t < 1'000; ++t) {
        const Cx p = rand_cx(rng), q = rand_cx(rng), r = rand_cx(rng), s = rand_cx(rng);
        const Quaternion mid = cd_join(q, r);
        const double scale = std::abs(p) * qnorm(mid) * std::abs(s) + 1e-30;
        for (const Octonion& u : {kL, kJl, mixed}) {
            const Octonion lhs =
                triple(ocx(p) * u, Octonion::from_quaternion(mid), ocx(s) * u);
            const Octonion rhs =
                ocx(-p * std::conj(q) * std::conj(s)) + ocx(p * r * std::conj(s)) * kJ;
            worst = std::max(worst, o_err(lhs, rhs) / scale);
        }
    }
    CHECK(worst <= 1e-13);
}

TEST_CASE("re-association holds exactly on complex-middle patterns") {
    // Those triples live in an associative (quaternion) subalgebra.
    Rng rng(41);
    double worst = 0.0;
    for (int t = 0; t < 500; ++t) {
        const Cx p = rand_cx(rng), q = rand_cx(rng), r = rand_cx(rng);
        const double scale = std::abs(p) * std::abs(q) * std::abs(r) + 1e-30;
        for (const Octonion& u : {kL, kJl}) {
            const Octonion a = ocx(p) * u, c = ocx(r) * u;
            worst = std::max(worst,
                             o_err(triple(a, ocx(q), c), triple_right(a, ocx(q), c)) / scale);
        }
        // all-l triples re-associate as well
        const Octonion pl = ocx(p) * kL, ql = ocx(q) * kL, rl = ocx(r) * kL;
        worst = std::max(worst, o_err(triple(pl, ql, rl), triple_right(pl, ql, rl)) / scale);
    }
    CHECK(worst <= 1e-13);
}

TEST_CASE("special associative regroupings") {
    Rng rng(43);
    double worst = 0.0;
    for (int t = 0; t < 1'000; ++t) {
        const Cx p = rand_cx(rng), q = rand_cx(rng), r = rand_cx(rng);
        const Cx s = rand_cx(rng), tc = rand_cx(rng);
        const Octonion P = ocx(p), R = ocx(r);
        const Octonion pl = P * kL, ql = ocx(q) * kL, sl = ocx(s) * kL, tl = ocx(tc) * kL;
        const Octonion qbl = ocx(std::conj(q)) * kL, sbl = ocx(std::conj(s)) * kL;
        const Octonion tbl = ocx(std::conj(tc)) * kL;
        const Octonion pj = P * kJ, rj = R * kJ;
        const Octonion pjl = P * kJl;
        const Octonion in1 = triple(ql, R, sl);   // (q l) r (s l)
        const Octonion in2 = triple(ql, rj, sl);  // (q l)(r j)(s l)
        const double scale =
            std::abs(p) * std::abs(q) * std::abs(r) * std::abs(s) + 1e-30;

        auto upd = [&](const Octonion& a, const Octonion& b) {
            worst = std::max(worst, o_err(a, b) / scale);
        };
        upd(P * in1, triple(P * ql, R, sl));
        upd(P * in2, triple(P * ql, rj, sl));
        upd(pj * in1, triple(pj * qbl, R, sbl));
        upd(pj * in2, triple(pj * qbl, rj, sbl));
        upd(triple(pl, in1, tl), triple(pl * ql, R, sl * tl));
        upd(triple(pl, ocx(q * r * s), tl), triple(pl * ocx(q), R, ocx(s) * tl));
        upd(triple(pl, in2, tl), triple(pl * qbl, rj, sl * tbl));
        const double c = q.real(), d = s.real();
        upd(triple(pl, rj * (c * d), sl), triple(pl * c, rj, sl * d));
        upd(triple(pl, ql, sl), pl * (ql * sl));
        upd(triple(pjl, ql, sl), pjl * (qbl * sbl));
        const Octonion u = P + ocx(q) * kJ, v = R + ocx(s) * kJ;
        const Octonion uv =
            ocx(p * r - std::conj(q) * s) + ocx(std::conj(p) * s + q * r) * kJ;
        upd(triple(tl, u, v), tl * uv);
    }
    CHECK(worst <= 1e-13);
}

TEST_CASE("non-associativity is witnessed on the remaining patterns") {
    Rng rng(47);
    double wa = 0.0, wb = 0.0, wc = 0.0, wd = 0.0;
    for (int t = 0; t < 64; ++t) {
        const Cx p = rand_cx(rng), q = rand_cx(rng), r = rand_cx(rng), s = rand_cx(rng);
        const Octonion pl = ocx(p) * kL, ql = ocx(q) * kL, rl = ocx(r) * kL;
        const Octonion rj = ocx(r) * kJ, pj = ocx(p) * kJ, pjl = ocx(p) * kJl;
        wa = std::max(wa, o_err(triple(pl, ql, rj), triple_right(pl, ql, rj)));
        wb = std::max(wb, o_err(triple(pj, ql, rl), triple_right(pj, ql, rl)));
        wc = std::max(wc, o_err(triple(pjl, ql, rl), triple_right(pjl, ql, rl)));
        const Octonion u = ocx(p) + ocx(q) * kJ, v = ocx(r) + ocx(s) * kJ;
        const Octonion tl = ocx(rand_cx(rng)) * kL;
        wd = std::max(wd, o_err(triple(tl, u, v), triple_right(tl, u, v)));
    }
    CHECK(wa > 1e-3);
    CHECK(wb > 1e-3);
    CHECK(wc > 1e-3);
    CHECK(wd > 1e-3);
}
