#pragma once

#include <cmath>
#include <complex>

#include "qtensor/algebra.hpp"
#include "qtensor/linalg.hpp"
#include "qtensor/rng.hpp"
#include "qtensor/transform.hpp"

namespace qtest {

using qtensor::Cx;

inline double cx_err(const Cx& a, const Cx& b) { return std::abs(a - b); }

inline double q_err(const qtensor::Quaternion& a, const qtensor::Quaternion& b) {
    return qtensor::qnorm(a - b);
}

inline double o_err(const qtensor::Octonion& a, const qtensor::Octonion& b) {
    return qtensor::onorm(a - b);
}

inline double cmat_err(const qtensor::CMatrix& a, const qtensor::CMatrix& b) {
    return (a - b).frob_norm();
}

inline double cdmat_err(const qtensor::CdMatrix& a, const qtensor::CdMatrix& b) {
    return (a - b).frob_norm();
}

inline double tensor_err(const qtensor::CdTensor3& a, const qtensor::CdTensor3& b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k)
        s += std::norm(a.t1[k] - b.t1[k]) + std::norm(a.t2[k] - b.t2[k]);
    return std::sqrt(s);
}

inline double tensor_rel_err(const qtensor::CdTensor3& got, const qtensor::CdTensor3& want) {
    const double den = want.frob_norm();
    const double num = tensor_err(got, want);
    return den > 0.0 ? num / den : num;
}

inline Cx rand_cx(qtensor::Rng& rng) { return {rng.sym(), rng.sym()}; }

inline qtensor::Quaternion rand_q(qtensor::Rng& rng) {
    return {rng.sym(), rng.sym(), rng.sym(), rng.sym()};
}

inline qtensor::Octonion rand_o(qtensor::Rng& rng) {
    qtensor::Octonion o;
    for (double& v : o.c) v = rng.sym();
    return o;
}

} // namespace qtest
