#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace pgeom::bench {

/// Stress families. Each probes one classic failure mode of division-based
/// Euclidean pipelines while the projective pipeline stays division-free
/// until a single final readout:
///  - near-parallel-lines:  2D line intersection, angle between lines ~ severity
///  - near-parallel-planes: 3-plane intersection, third normal nearly dependent
///  - thin-triangle:        barycentric coordinates, triangle height ~ severity
///  - exponent-spread:      3-plane intersection, per-plane scale 2^k with
///                          |k| <= round(severity * log2(10)) (severity is the
///                          decimal exponent span, e.g. 150 for 1e+-150)
enum class BenchFamily { near_parallel_lines, near_parallel_planes, thin_triangle, exponent_spread };

[[nodiscard]] const char* family_name(BenchFamily f);
/// Throws std::invalid_argument for unknown names.
[[nodiscard]] BenchFamily family_from_name(std::string_view name);

struct BenchScenario {
    BenchFamily family = BenchFamily::near_parallel_lines;
    double severity = 1e-8;   ///< (0, 0.5] for geometric families; [0, 300] for exponent-spread
    std::size_t count = 1000; ///< instances per method, >= 1
    std::uint64_t seed = 1;   ///< seeds the documented deterministic generator
};

struct BenchOptions {
    /// Wall-clock timing is opt-in so that default reports are byte-identical
    /// across runs; when false the timing column is written as 0.
    bool timing = false;
};

/// One CSV data row: a (family, severity, method) cell.
struct BenchCell {
    std::string family;
    double severity = 0.0;
    std::string method; ///< "projective" | "euclidean-oracle"
    double max_relative_error_vs_exact = 0.0;
    std::size_t failure_count = 0; ///< NaN/Inf results, thrown solves, or full underflow
    double wall_time_ns_per_op = 0.0;
};

/// Runs one scenario and returns its two cells (projective first).
/// Instance streams are generated once per scenario from the seed and shared
/// by both methods; the exact reference for every instance is evaluated in
/// rational arithmetic. Deterministic: same scenario -> same cells.
std::vector<BenchCell> run_bench(const BenchScenario& sc, const BenchOptions& opt = {});

/// Fixed header: family,severity,method,max_relative_error_vs_exact,
/// failure_count,wall_time_ns_per_op. Doubles are shortest round-trip.
void write_csv(std::ostream& out, const std::vector<BenchCell>& cells);

} // namespace pgeom::bench
