#include "qtensor/algebra.hpp"

namespace qtensor {
namespace {

// Basis product table, row element times column element, in the fixed order
// (1, i, j, k, l, il, jl, kl). kIdx holds the index of the resulting basis
// element, kSgn its sign.
constexpr int kIdx[8][8] = {
    {0, 1, 2, 3, 4, 5, 6, 7},
    {1, 0, 3, 2, 5, 4, 7, 6},
    {2, 3, 0, 1, 6, 7, 4, 5},
    {3, 2, 1, 0, 7, 6, 5, 4},
    {4, 5, 6, 7, 0, 1, 2, 3},
    {5, 4, 7, 6, 1, 0, 3, 2},
    {6, 7, 4, 5, 2, 3, 0, 1},
    {7, 6, 5, 4, 3, 2, 1, 0},
};

constexpr int kSgn[8][8] = {
    {+1, +1, +1, +1, +1, +1, +1, +1},
    {+1, -1, +1, -1, +1, -1, -1, +1},
    {+1, -1, -1, +1, +1, +1, -1, -1},
    {+1, +1, -1, -1, +1, -1, +1, -1},
    {+1, -1, -1, -1, -1, +1, +1, +1},
    {+1, +1, -1, +1, -1, -1, -1, +1},
    {+1, +1, +1, -1, -1, +1, -1, -1},
    {+1, -1, +1, +1, -1, -1, +1, -1},
};

} // namespace

Octonion omul_table(const Octonion& a, const Octonion& b) {
    Octonion r;
    for (std::size_t i = 0; i < 8; ++i) {
        const double ai = a.c[i];
        if (ai == 0.0) continue;
        for (std::size_t j = 0; j < 8; ++j) {
            r.c[static_cast<std::size_t>(kIdx[i][j])] += kSgn[i][j] * ai * b.c[j];
        }
    }
    return r;
}

Octonion omul_closed(const Octonion& o1, const Octonion& o2) {
    const double a1 = o1.c[0], b1 = o1.c[1], c1 = o1.c[2], d1 = o1.c[3];
    const double e1 = o1.c[4], f1 = o1.c[5], g1 = o1.c[6], h1 = o1.c[7];
    const double a2 = o2.c[0], b2 = o2.c[1], c2 = o2.c[2], d2 = o2.c[3];
    const double e2 = o2.c[4], f2 = o2.c[5], g2 = o2.c[6], h2 = o2.c[7];
    return {
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2 - e1 * e2 - f1 * f2 - g1 * g2 - h1 * h2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2 + e1 * f2 - f1 * e2 + h1 * g2 - g1 * h2,
        a1 * c2 + c1 * a2 + d1 * b2 - b1 * d2 + e1 * g2 - g1 * e2 + f1 * h2 - h1 * f2,
        a1 * d2 + d1 * a2 + b1 * c2 - c1 * b2 + e1 * h2 - h1 * e2 + g1 * f2 - f1 * g2,
        a1 * e2 + e1 * a2 + f1 * b2 - b1 * f2 + g1 * c2 - c1 * g2 + h1 * d2 - d1 * h2,
        a1 * f2 + f1 * a2 + b1 * e2 - e1 * b2 + h1 * c2 - c1 * h2 + d1 * g2 - g1 * d2,
        a1 * g2 + g1 * a2 + b1 * h2 - h1 * b2 + c1 * e2 - e1 * c2 + f1 * d2 - d1 * f2,
        a1 * h2 + h1 * a2 + g1 * b2 - b1 * g2 + c1 * f2 - f1 * c2 + d1 * e2 - e1 * d2,
    };
}

} // namespace qtensor
