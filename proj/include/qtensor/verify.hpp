#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qtensor {

struct VerifyOptions {
    std::string suite = "all";  // all | algebra | diag | tproduct
    double tol_scale = 1.0;     // multiplies every check's pinned tolerance
    std::uint64_t seed = 42;
    /// Test fixture: runs the diag suite's brute-force oracle with the DFT
    /// sign flipped, which must trip the fft-vs-bruteforce invariant.
    bool corrupt_dft_sign = false;
};

struct CheckResult {
    std::string name;
    bool pass = false;
    double worst = 0.0;  // worst observed error (or margin, see detail)
    double tol = 0.0;
    std::string detail;
};

/// Runs the selected property suites. Throws std::invalid_argument on an
/// unknown suite name. The process-level contract: exit 0 iff all pass.
std::vector<CheckResult> run_verify(const VerifyOptions& opts);

bool all_passed(const std::vector<CheckResult>& results);

std::string verify_report_json(const VerifyOptions& opts,
                               const std::vector<CheckResult>& results);

} // namespace qtensor
