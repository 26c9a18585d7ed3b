#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pgeom/batchio.hpp"
#include "pgeom/bench.hpp"
#include "pgeom/selftest.hpp"

namespace {

int run_eval(const std::string& in_path, const std::string& out_path, bool euclidean) {
    std::ifstream fin;
    if (!in_path.empty()) {
        fin.open(in_path);
        if (!fin) {
            std::cerr << "pgeom eval: cannot open input file '" << in_path << "'\n";
            return 1;
        }
    }
    std::ofstream fout;
    if (!out_path.empty()) {
        fout.open(out_path);
        if (!fout) {
            std::cerr << "pgeom eval: cannot open output file '" << out_path << "'\n";
            return 1;
        }
    }
    std::istream& in = in_path.empty() ? std::cin : fin;
    std::ostream& out = out_path.empty() ? std::cout : fout;
    pgeom::batchio::run_batch(in, out, {.euclidean = euclidean});
    return 0; // per-record errors are reported in-stream, not via exit code
}

int run_bench_cmd(const std::string& family, double severity, std::size_t count,
                  std::uint64_t seed, const std::string& out_path, bool timing) {
    pgeom::bench::BenchScenario sc;
    try {
        sc.family = pgeom::bench::family_from_name(family);
        sc.severity = severity;
        sc.count = count;
        sc.seed = seed;
        const auto cells = pgeom::bench::run_bench(sc, {.timing = timing});
        if (out_path.empty()) {
            pgeom::bench::write_csv(std::cout, cells);
        } else {
            std::ofstream fout(out_path);
            if (!fout) {
                std::cerr << "pgeom bench: cannot open output file '" << out_path << "'\n";
                return 1;
            }
            pgeom::bench::write_csv(fout, cells);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "pgeom bench: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Division-free projective geometry kernel: batch evaluation, "
                 "robustness benchmark, and invariant selftest"};
    app.require_subcommand(1);

    std::string eval_in, eval_out;
    bool eval_euclidean = false;
    auto* eval = app.add_subcommand(
        "eval", "Evaluate line-delimited JSON records (stdin/stdout by default)");
    eval->add_option("--in", eval_in, "Input file (default: standard input)");
    eval->add_option("--out", eval_out, "Output file (default: standard output)");
    eval->add_flag("--euclidean", eval_euclidean,
                   "Also emit Euclidean projections of point-valued results");

    std::string bench_family, bench_out;
    double bench_severity = 1e-8;
    std::size_t bench_count = 1000;
    std::uint64_t bench_seed = 1;
    bool bench_timing = false;
    auto* bench = app.add_subcommand("bench", "Robustness benchmark; writes a CSV report");
    bench
        ->add_option("--family", bench_family,
                     "near-parallel-lines | near-parallel-planes | thin-triangle | exponent-spread")
        ->required();
    bench->add_option("--severity", bench_severity,
                      "Stress parameter (angle/thinness, or decimal exponent span)");
    bench->add_option("--count", bench_count, "Instances per method");
    bench->add_option("--seed", bench_seed, "Generator seed");
    bench->add_option("--out", bench_out, "Output CSV file (default: standard output)");
    bench->add_flag("--timing", bench_timing,
                    "Measure wall time (median of 5 reps); off by default so reports "
                    "are byte-identical across runs");

    auto* selftest = app.add_subcommand("selftest", "Run the invariant suite (exit 2 on failure)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e); // 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (eval->parsed()) return run_eval(eval_in, eval_out, eval_euclidean);
    if (bench->parsed())
        return run_bench_cmd(bench_family, bench_severity, bench_count, bench_seed, bench_out,
                             bench_timing);
    if (selftest->parsed()) return pgeom::selftest::run(std::cout) == 0 ? 0 : 2;
    return 1;
}
