// qtbench: benchmark and verification harness for the quaternion tensor
// product library.
//
//   qtbench bench  --m M --n N --s S --p P[,P2,...] [--trials T] [--seed S]
//                  [--format csv|json] [--out PATH] [--force]
//   qtbench verify --suite all|algebra|diag|tproduct [--tol X] [--seed S]
//   qtbench gen    --m M --n N --p P --seed S --out PATH

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qtensor/bench.hpp"
#include "qtensor/rng.hpp"
#include "qtensor/tensor_io.hpp"
#include "qtensor/verify.hpp"

namespace {

int cmd_bench(const qtensor::BenchConfig& cfg) {
    const std::vector<qtensor::BenchRecord> records = qtensor::run_bench(cfg, &std::cerr);
    const std::string body = cfg.format == qtensor::BenchFormat::Csv
                                 ? qtensor::records_to_csv(records)
                                 : qtensor::records_to_json(records);
    if (cfg.out_path.empty()) {
        std::cout << body;
    } else {
        std::ofstream out(cfg.out_path, std::ios::trunc);
        if (!out) {
            std::cerr << "error: cannot write " << cfg.out_path << "\n";
            return 2;
        }
        out << body;
    }
    return 0;
}

int cmd_verify(const qtensor::VerifyOptions& opts) {
    const std::vector<qtensor::CheckResult> results = qtensor::run_verify(opts);
    for (const qtensor::CheckResult& c : results)
        std::cerr << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << "  worst=" << c.worst
                  << " tol=" << c.tol << (c.detail.empty() ? "" : "  (" + c.detail + ")")
                  << "\n";
    std::cout << qtensor::verify_report_json(opts, results);
    return qtensor::all_passed(results) ? 0 : 1;
}

int cmd_gen(std::size_t m, std::size_t n, std::size_t p, std::uint64_t seed,
            const std::string& out) {
    const qtensor::CdTensor3 t = qtensor::gen_random_tensor(m, n, p, seed);
    qtensor::write_tensor(out, t);
    std::cerr << "wrote " << out << " (" << m << "x" << n << "x" << p << ", seed " << seed
              << ")\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quaternion tensor product benchmark and verification harness"};
    app.require_subcommand(1);

    qtensor::BenchConfig cfg;
    std::string format = "csv";
    CLI::App* bench = app.add_subcommand("bench", "time fast vs direct tensor product");
    bench->add_option("--m", cfg.m, "rows of A")->required()->check(CLI::PositiveNumber);
    bench->add_option("--n", cfg.n, "cols of A / rows of B")
        ->required()
        ->check(CLI::PositiveNumber);
    bench->add_option("--s", cfg.s, "cols of B")->required()->check(CLI::PositiveNumber);
    bench->add_option("--p", cfg.p_values, "slice counts (comma separated)")
        ->required()
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    bench->add_option("--trials", cfg.trials, "timed runs per path (median reported)")
        ->check(CLI::PositiveNumber);
    bench->add_option("--seed", cfg.seed, "base seed for the tensor generator");
    bench->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    bench->add_option("--out", cfg.out_path, "output file (default stdout)");
    bench->add_flag("--force", cfg.force, "run the direct path even past the cost cap");
    bench->add_option("--naive-cap", cfg.naive_mult_cap,
                      "direct-path real-multiplication budget before skipping");

    qtensor::VerifyOptions vopts;
    CLI::App* verify = app.add_subcommand("verify", "run the property suites");
    verify->add_option("--suite", vopts.suite, "all, algebra, diag or tproduct")
        ->check(CLI::IsMember({"all", "algebra", "diag", "tproduct"}));
    verify->add_option("--tol", vopts.tol_scale, "tolerance scale factor (default 1)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", vopts.seed, "seed for the randomized properties");
    verify
        ->add_flag("--corrupt-dft-sign", vopts.corrupt_dft_sign,
                   "negative-control fixture: flip the DFT sign in the diag oracle")
        ->group("");  // hidden

    std::size_t gm = 1, gn = 1, gp = 1;
    std::uint64_t gseed = 42;
    std::string gout;
    CLI::App* gen = app.add_subcommand("gen", "write a seeded random tensor file");
    gen->add_option("--m", gm, "rows")->required()->check(CLI::PositiveNumber);
    gen->add_option("--n", gn, "cols")->required()->check(CLI::PositiveNumber);
    gen->add_option("--p", gp, "slices")->required()->check(CLI::PositiveNumber);
    gen->add_option("--seed", gseed, "generator seed");
    gen->add_option("--out", gout, "output path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (bench->parsed()) {
            cfg.format = format == "json" ? qtensor::BenchFormat::Json
                                          : qtensor::BenchFormat::Csv;
            return cmd_bench(cfg);
        }
        if (verify->parsed()) return cmd_verify(vopts);
        if (gen->parsed()) return cmd_gen(gm, gn, gp, gseed, gout);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
