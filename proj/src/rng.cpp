#include "qtensor/rng.hpp"

#include <stdexcept>

namespace qtensor {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    std::uint64_t state = base;
    std::uint64_t out = 0;
    for (std::uint64_t k = 0; k <= stream; ++k) out = splitmix64(state);
    return out;
}

CdTensor3 gen_random_tensor(std::size_t m, std::size_t n, std::size_t p,
                            std::uint64_t seed) {
    if (m == 0 || n == 0 || p == 0)
        throw std::invalid_argument("gen_random_tensor: zero dims");
    Rng rng(seed);
    CdTensor3 t(m, n, p);
    for (std::size_t k = 0; k < t.size(); ++k) {
        const double w = rng.sym(), x = rng.sym(), y = rng.sym(), z = rng.sym();
        t.t1[k] = Cx{w, x};
        t.t2[k] = Cx{y, z};
    }
    return t;
}

std::vector<Quaternion> gen_random_quaternions(std::size_t count, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Quaternion> out(count);
    for (Quaternion& q : out) {
        q.w = rng.sym();
        q.x = rng.sym();
        q.y = rng.sym();
        q.z = rng.sym();
    }
    return out;
}

} // namespace qtensor
