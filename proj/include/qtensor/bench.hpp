#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qtensor/tproduct.hpp"

namespace qtensor {

enum class BenchFormat { Csv, Json };

struct BenchConfig {
    std::size_t m = 20, n = 20, s = 20;
    std::vector<std::size_t> p_values = {8};
    std::size_t trials = 5;
    std::uint64_t seed = 42;
    BenchFormat format = BenchFormat::Csv;
    std::string out_path;  // empty = stdout
    bool force = false;    // run the direct path even past the cost cap
    /// Direct-path real-multiplication budget (16 m n s p^2) above which the
    /// direct evaluation is skipped unless force is set.
    std::uint64_t naive_mult_cap = 20'000'000'000ULL;
};

struct BenchRecord {
    std::size_t m = 0, n = 0, s = 0, p = 0, trials = 0;
    std::uint64_t seed = 0;
    double time_fast_s = 0.0;
    double time_naive_s = 0.0;  // NaN when skipped
    double speedup = 0.0;       // NaN when skipped
    double rel_error = 0.0;     // NaN when skipped
    bool naive_skipped = false;
};

/// One warmup plus `trials` timed runs of each path per p, median times,
/// relative Frobenius error from the final pair of outputs. Timing loops are
/// strictly single-threaded. Identical configs reproduce tensors and error
/// fields exactly; only the timings vary.
std::vector<BenchRecord> run_bench(const BenchConfig& cfg, std::ostream* progress = nullptr);

std::string records_to_csv(const std::vector<BenchRecord>& records);
std::string records_to_json(const std::vector<BenchRecord>& records);

/// "<name> <version>, generator <kGeneratorName>" - pinned in report headers.
std::string build_identifier();

} // namespace qtensor
