#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

using namespace qtensor;
using qtest::cx_err;
using qtest::q_err;
using qtest::rand_cx;
using qtest::tensor_rel_err;

namespace {

std::vector<Cx> rand_vec(Rng& rng, std::size_t n) {
    std::vector<Cx> v(n);
    for (Cx& z : v) z = rand_cx(rng);
    return v;
}

double vec_err(const std::vector<Cx>& a, const std::vector<Cx>& b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += std::norm(a[k] - b[k]);
    return std::sqrt(s);
}

double vec_norm(const std::vector<Cx>& a) {
    double s = 0.0;
    for (const Cx& z : a) s += std::norm(z);
    return std::sqrt(s);
}

CdTensor3 rand_tensor(Rng& rng, std::size_t m, std::size_t n, std::size_t p) {
    CdTensor3 t(m, n, p);
    for (Cx& z : t.t1) z = rand_cx(rng);
    for (Cx& z : t.t2) z = rand_cx(rng);
    return t;
}

} // namespace

TEST_CASE("direct dft on pinned vectors") {
    const std::vector<Cx> delta = {1, 0, 0, 0};
    const std::vector<Cx> y = dft_vec_naive(delta);
    for (const Cx& z : y) CHECK(cx_err(z, {1, 0}) <= 1e-15);

    const std::vector<Cx> x = {1, 2, 3, 4};
    const std::vector<Cx> want = {{10, 0}, {-2, 2}, {-2, 0}, {-2, -2}};
    const std::vector<Cx> got = dft_vec_naive(x);
    for (std::size_t k = 0; k < 4; ++k) CHECK(cx_err(got[k], want[k]) <= 1e-14);

    const std::vector<Cx> c(5, Cx{3, -1});
    const std::vector<Cx> yc = dft_vec_naive(c);
    CHECK(cx_err(yc[0], Cx{15, -5}) <= 1e-13);
    for (std::size_t k = 1; k < 5; ++k) CHECK(std::abs(yc[k]) <= 1e-13);

    CHECK_THROWS_AS(dft_vec_naive({}), std::invalid_argument);
}

TEST_CASE("fft agrees with the direct dft at awkward lengths") {
    Rng rng(51);
    CHECK(cx_err(fft_vec(std::vector<Cx>{1, 1})[0], {2, 0}) == 0.0);
    CHECK(cx_err(fft_vec(std::vector<Cx>{1, 1})[1], {0, 0}) <= 1e-15);

    for (std::size_t n : {1, 2, 3, 5, 7, 12, 16, 27, 100, 97}) {
        const std::vector<Cx> x = rand_vec(rng, n);
        const std::vector<Cx> a = fft_vec(x), b = dft_vec_naive(x);
        CHECK(vec_err(a, b) / vec_norm(b) <= 1e-12);
    }
    CHECK_THROWS_AS(fft_vec({}), std::invalid_argument);
}

TEST_CASE("fft round trip and inverse") {
    Rng rng(53);
    const std::vector<Cx> x = rand_vec(rng, 12);
    CHECK(vec_err(ifft_vec(fft_vec(x)), x) / vec_norm(x) <= 1e-13);

    for (std::size_t n : {4, 9, 14}) {
        const std::vector<Cx> v = rand_vec(rng, n);
        CHECK(vec_err(fft_vec(ifft_vec(v)), v) / vec_norm(v) <= 1e-13);
    }
    CHECK_THROWS_AS(ifft_vec({}), std::invalid_argument);
}

TEST_CASE("fft linearity and energy scaling") {
    Rng rng(57);
    const std::size_t n = 24;
    const std::vector<Cx> x = rand_vec(rng, n), y = rand_vec(rng, n);
    const Cx a = rand_cx(rng), b = rand_cx(rng);
    std::vector<Cx> lin(n);
    for (std::size_t k = 0; k < n; ++k) lin[k] = a * x[k] + b * y[k];
    const std::vector<Cx> fx = fft_vec(x), fy = fft_vec(y), fl = fft_vec(lin);
    std::vector<Cx> want(n);
    for (std::size_t k = 0; k < n; ++k) want[k] = a * fx[k] + b * fy[k];
    CHECK(vec_err(fl, want) / vec_norm(want) <= 1e-12);

    // ||fft(x)||^2 = p ||x||^2
    const double lhs = vec_norm(fx) * vec_norm(fx);
    const double rhs = static_cast<double>(n) * vec_norm(x) * vec_norm(x);
    CHECK(std::abs(lhs - rhs) / rhs <= 1e-12);
}

TEST_CASE("conjugate-fused forward transform") {
    // p = 1 is plain quaternion conjugation
    Rng rng(61);
    CdTensor3 t1(2, 3, 1);
    for (Cx& z : t1.t1) z = rand_cx(rng);
    for (Cx& z : t1.t2) z = rand_cx(rng);
    const CdTensor3 h1 = qfft3_conj(t1);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(q_err(h1.qat(i, j, 0), qconj(t1.qat(i, j, 0))) == 0.0);

    // the canonical tube (j, 2j, 3j, 4j)
    CdTensor3 tube(1, 1, 4);
    for (std::size_t r = 0; r < 4; ++r)
        tube.set_qat(0, 0, r, {0, 0, static_cast<double>(r + 1), 0});
    const CdTensor3 hat = qfft3_conj(tube);
    const Quaternion want[4] = {{0, 0, -10, 0}, {0, 0, 2, -2}, {0, 0, 2, 0}, {0, 0, 2, 2}};
    for (std::size_t r = 0; r < 4; ++r) CHECK(q_err(hat.qat(0, 0, r), want[r]) <= 1e-13);

    // real-valued input: t1 transforms plainly, t2 stays zero
    CdTensor3 re(2, 2, 5);
    for (Cx& z : re.t1) z = Cx{rng.sym(), 0.0};
    const CdTensor3 hre = qfft3_conj(re);
    for (const Cx& z : hre.t2) CHECK(std::abs(z) == 0.0);
    std::vector<Cx> tube0(5);
    for (std::size_t r = 0; r < 5; ++r) tube0[r] = re.t1[re.idx(1, 0, r)];
    const std::vector<Cx> ft = fft_vec(tube0);
    for (std::size_t r = 0; r < 5; ++r)
        CHECK(cx_err(hre.t1[hre.idx(1, 0, r)], ft[r]) <= 1e-13);
}

TEST_CASE("every tube satisfies the sqrt(p) F conj(q) relation") {
    Rng rng(67);
    const CdTensor3 t = rand_tensor(rng, 3, 2, 7);
    const CdTensor3 hat = qfft3_conj(t);
    const CMatrix f = dft_matrix(7);
    const double sp = std::sqrt(7.0);
    double worst = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t s = 0; s < 7; ++s) {
                Cx acc1{}, acc2{};
                for (std::size_t r = 0; r < 7; ++r) {
                    const auto [q1, q2] = cd_split(t.qat(i, j, r));
                    acc1 += sp * f.at(s, r) * std::conj(q1);
                    acc2 += sp * f.at(s, r) * (-q2);
                }
                worst = std::max(worst, q_err(hat.qat(i, j, s), cd_join(acc1, acc2)));
            }
    CHECK(worst / t.frob_norm() <= 1e-12);
}

TEST_CASE("inverse transform is the exact inverse") {
    Rng rng(71);
    const CdTensor3 t = rand_tensor(rng, 3, 4, 5);
    CHECK(tensor_rel_err(qifft3_conj(qfft3_conj(t)), t) <= 1e-12);
    CHECK(tensor_rel_err(qfft3_conj(qifft3_conj(t)), t) <= 1e-12);

    // p = 1 is conjugation; zero maps to zero
    CdTensor3 z(2, 2, 3);
    const CdTensor3 hz = qifft3_conj(z);
    CHECK(hz.frob_norm() == 0.0);

    CdTensor3 one(1, 1, 1);
    one.set_qat(0, 0, 0, {1, 2, 3, 4});
    CHECK(q_err(qifft3_conj(one).qat(0, 0, 0), {1, -2, -3, -4}) == 0.0);
}
