#include "qtensor/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "qtensor/rng.hpp"

#include <json.hpp>

namespace qtensor {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double rel_frob_error(const CdTensor3& got, const CdTensor3& want) {
    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k < got.size(); ++k) {
        num += std::norm(got.t1[k] - want.t1[k]) + std::norm(got.t2[k] - want.t2[k]);
        den += std::norm(want.t1[k]) + std::norm(want.t2[k]);
    }
    return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

std::string fmt(double v, const char* format) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), format, v);
    return buf;
}

} // namespace

std::vector<BenchRecord> run_bench(const BenchConfig& cfg, std::ostream* progress) {
    if (cfg.m == 0 || cfg.n == 0 || cfg.s == 0 || cfg.trials == 0 || cfg.p_values.empty())
        throw std::invalid_argument("run_bench: dims and trials must be >= 1");

    std::vector<BenchRecord> records;
    records.reserve(cfg.p_values.size());

    for (std::size_t idx = 0; idx < cfg.p_values.size(); ++idx) {
        const std::size_t p = cfg.p_values[idx];
        if (p == 0) throw std::invalid_argument("run_bench: p must be >= 1");

        BenchRecord rec;
        rec.m = cfg.m;
        rec.n = cfg.n;
        rec.s = cfg.s;
        rec.p = p;
        rec.trials = cfg.trials;
        rec.seed = cfg.seed;

        const CdTensor3 a =
            gen_random_tensor(cfg.m, cfg.n, p, derive_seed(cfg.seed, 2 * idx));
        const CdTensor3 b =
            gen_random_tensor(cfg.n, cfg.s, p, derive_seed(cfg.seed, 2 * idx + 1));

        TProdWorkspace ws;
        CdTensor3 fast = tprod_fast(a, b, ws);  // warmup
        std::vector<double> times(cfg.trials);
        for (std::size_t t = 0; t < cfg.trials; ++t) {
            const auto t0 = Clock::now();
            fast = tprod_fast(a, b, ws);
            times[t] = seconds_since(t0);
        }
        rec.time_fast_s = median(times);

        const std::uint64_t naive_cost = flops_estimate(cfg.m, cfg.n, cfg.s, p).naive_mults;
        if (naive_cost > cfg.naive_mult_cap && !cfg.force) {
            rec.naive_skipped = true;
            rec.time_naive_s = std::numeric_limits<double>::quiet_NaN();
            rec.speedup = std::numeric_limits<double>::quiet_NaN();
            rec.rel_error = std::numeric_limits<double>::quiet_NaN();
            if (progress)
                *progress << "p=" << p << ": direct path skipped (" << naive_cost
                          << " > cap " << cfg.naive_mult_cap << ", use --force)\n";
        } else {
            CdTensor3 naive = tprod_naive(a, b);  // warmup
            for (std::size_t t = 0; t < cfg.trials; ++t) {
                const auto t0 = Clock::now();
                naive = tprod_naive(a, b);
                times[t] = seconds_since(t0);
            }
            rec.time_naive_s = median(times);
            rec.speedup = rec.time_naive_s / rec.time_fast_s;
            rec.rel_error = rel_frob_error(fast, naive);
            if (progress)
                *progress << "p=" << p << ": fast " << rec.time_fast_s << " s, direct "
                          << rec.time_naive_s << " s, speedup " << rec.speedup
                          << ", rel_error " << rec.rel_error << "\n";
        }
        records.push_back(rec);
    }
    return records;
}

std::string build_identifier() {
    return std::string("qtensor 0.1.0 (") +
#if defined(__clang__)
           "clang " __clang_version__
#elif defined(__GNUC__)
           "gcc " __VERSION__
#else
           "unknown compiler"
#endif
           + "), generator " + kGeneratorName;
}

std::string records_to_csv(const std::vector<BenchRecord>& records) {
    std::string out = "# " + build_identifier() + "\n";
    out += "m,n,s,p,trials,seed,time_fast_s,time_naive_s,speedup,rel_error\n";
    for (const BenchRecord& r : records) {
        out += std::to_string(r.m) + "," + std::to_string(r.n) + "," + std::to_string(r.s) +
               "," + std::to_string(r.p) + "," + std::to_string(r.trials) + "," +
               std::to_string(r.seed) + "," + fmt(r.time_fast_s, "%.9g") + ",";
        if (r.naive_skipped) {
            out += ",,";
        } else {
            out += fmt(r.time_naive_s, "%.9g") + "," + fmt(r.speedup, "%.9g") + "," +
                   fmt(r.rel_error, "%.17g");
        }
        out += "\n";
    }
    return out;
}

std::string records_to_json(const std::vector<BenchRecord>& records) {
    nlohmann::json j;
    j["generator"] = kGeneratorName;
    j["build"] = build_identifier();
    j["records"] = nlohmann::json::array();
    for (const BenchRecord& r : records) {
        nlohmann::json rec{
            {"m", r.m},       {"n", r.n},
            {"s", r.s},       {"p", r.p},
            {"trials", r.trials}, {"seed", r.seed},
            {"time_fast_s", r.time_fast_s},
        };
        if (r.naive_skipped) {
            rec["time_naive_s"] = nullptr;
            rec["speedup"] = nullptr;
            rec["rel_error"] = nullptr;
            rec["naive_skipped"] = true;
        } else {
            rec["time_naive_s"] = r.time_naive_s;
            rec["speedup"] = r.speedup;
            rec["rel_error"] = r.rel_error;
        }
        j["records"].push_back(std::move(rec));
    }
    return j.dump(2) + "\n";
}

} // namespace qtensor
