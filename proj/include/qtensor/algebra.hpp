#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>

namespace qtensor {

using Cx = std::complex<double>;

/// Quaternion q = w + x i + y j + z k over doubles.
///
/// Value type, immutable in spirit: every operation returns a new value and
/// is safe to call concurrently.
struct Quaternion {
    double w = 0.0, x = 0.0, y = 0.0, z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_, double y_, double z_)
        : w(w_), x(x_), y(y_), z(z_) {}

    static constexpr Quaternion zero() { return {}; }
    static constexpr Quaternion one() { return {1.0, 0.0, 0.0, 0.0}; }

    friend constexpr Quaternion operator+(const Quaternion& a, const Quaternion& b) {
        return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend constexpr Quaternion operator-(const Quaternion& a, const Quaternion& b) {
        return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend constexpr Quaternion operator-(const Quaternion& a) {
        return {-a.w, -a.x, -a.y, -a.z};
    }
    friend constexpr Quaternion operator*(const Quaternion& a, double s) {
        return {a.w * s, a.x * s, a.y * s, a.z * s};
    }
    friend constexpr Quaternion operator*(double s, const Quaternion& a) { return a * s; }
    friend constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b);
};

/// Hamilton product (i j = k, j k = i, k i = j, i^2 = j^2 = k^2 = -1).
constexpr Quaternion qmul(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y + a.y * b.w + a.z * b.x - a.x * b.z,
            a.w * b.z + a.z * b.w + a.x * b.y - a.y * b.x};
}

constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) { return qmul(a, b); }

constexpr Quaternion qconj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

constexpr double qnorm_sq(const Quaternion& q) {
    return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

inline double qnorm(const Quaternion& q) { return std::sqrt(qnorm_sq(q)); }

/// Cayley-Dickson split q = p1 + p2 j with p1 = w + x i, p2 = y + z i.
constexpr std::pair<Cx, Cx> cd_split(const Quaternion& q) {
    return {Cx{q.w, q.x}, Cx{q.y, q.z}};
}

constexpr Quaternion cd_join(const Cx& p1, const Cx& p2) {
    return {p1.real(), p1.imag(), p2.real(), p2.imag()};
}

/// Octonion o = c0 + c1 i + c2 j + c3 k + c4 l + c5 il + c6 jl + c7 kl.
///
/// The basis order (1, i, j, k, l, il, jl, kl) is fixed project-wide;
/// quaternions embed as the l-free subalgebra (c[4..7] = 0).
struct Octonion {
    std::array<double, 8> c{};

    constexpr Octonion() = default;
    constexpr Octonion(double c0, double c1, double c2, double c3,
                       double c4, double c5, double c6, double c7)
        : c{c0, c1, c2, c3, c4, c5, c6, c7} {}

    static constexpr Octonion zero() { return {}; }
    static constexpr Octonion one() { return unit(0); }

    /// k-th basis element in the order (1, i, j, k, l, il, jl, kl).
    static constexpr Octonion unit(std::size_t k) {
        Octonion o;
        o.c[k] = 1.0;
        return o;
    }

    static constexpr Octonion from_real(double r) { return {r, 0, 0, 0, 0, 0, 0, 0}; }
    static constexpr Octonion from_complex(const Cx& z) {
        return {z.real(), z.imag(), 0, 0, 0, 0, 0, 0};
    }
    static constexpr Octonion from_quaternion(const Quaternion& q) {
        return {q.w, q.x, q.y, q.z, 0, 0, 0, 0};
    }

    /// Truncates to the quaternion part; callers check is_quaternion first
    /// when the tail is expected to vanish.
    constexpr Quaternion quaternion_part() const { return {c[0], c[1], c[2], c[3]}; }

    friend constexpr Octonion operator+(const Octonion& a, const Octonion& b) {
        Octonion r;
        for (std::size_t i = 0; i < 8; ++i) r.c[i] = a.c[i] + b.c[i];
        return r;
    }
    friend constexpr Octonion operator-(const Octonion& a, const Octonion& b) {
        Octonion r;
        for (std::size_t i = 0; i < 8; ++i) r.c[i] = a.c[i] - b.c[i];
        return r;
    }
    friend constexpr Octonion operator-(const Octonion& a) {
        Octonion r;
        for (std::size_t i = 0; i < 8; ++i) r.c[i] = -a.c[i];
        return r;
    }
    friend constexpr Octonion operator*(const Octonion& a, double s) {
        Octonion r;
        for (std::size_t i = 0; i < 8; ++i) r.c[i] = a.c[i] * s;
        return r;
    }
    friend constexpr Octonion operator*(double s, const Octonion& a) { return a * s; }
    friend Octonion operator*(const Octonion& a, const Octonion& b);
};

/// Octonion product from the 8x8 basis multiplication table, extended
/// bilinearly. Independent of omul_closed; the two are cross-checked in the
/// test suite and must agree to ~1e-14 relative.
Octonion omul_table(const Octonion& a, const Octonion& b);

/// Octonion product from the expanded 8-component coordinate formula.
Octonion omul_closed(const Octonion& a, const Octonion& b);

inline Octonion operator*(const Octonion& a, const Octonion& b) { return omul_closed(a, b); }

constexpr Octonion oconj(const Octonion& o) {
    return {o.c[0], -o.c[1], -o.c[2], -o.c[3], -o.c[4], -o.c[5], -o.c[6], -o.c[7]};
}

constexpr double onorm_sq(const Octonion& o) {
    double s = 0.0;
    for (double v : o.c) s += v * v;
    return s;
}

inline double onorm(const Octonion& o) { return std::sqrt(onorm_sq(o)); }

inline bool is_quaternion(const Octonion& o, double tol) {
    return std::abs(o.c[4]) <= tol && std::abs(o.c[5]) <= tol &&
           std::abs(o.c[6]) <= tol && std::abs(o.c[7]) <= tol;
}

/// Left-associated triple product (a b) c. Octonions are non-associative, so
/// association order is part of the contract everywhere in this project;
/// triple_right exists for the property tests that probe exactly that.
inline Octonion triple(const Octonion& a, const Octonion& b, const Octonion& c) {
    return (a * b) * c;
}

inline Octonion triple_right(const Octonion& a, const Octonion& b, const Octonion& c) {
    return a * (b * c);
}

} // namespace qtensor
