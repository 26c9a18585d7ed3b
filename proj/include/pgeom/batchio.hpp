#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pgeom::batchio {

/// One parsed input record of the line-delimited eval stream.
struct BatchRecord {
    std::string id;                        ///< caller-supplied identifier, echoed verbatim
    std::string op;                        ///< operation name (see run_batch docs)
    std::vector<std::vector<double>> args; ///< numeric tuples; arity checked per op
};

struct BatchOptions {
    /// When set, point-valued results additionally carry their Euclidean
    /// projection ("euclidean": [...] or null for ideal results), and the
    /// barycentric operations carry the normalized weight list.
    bool euclidean = false;
};

/// Processes a line-delimited stream of JSON records, one per line:
///   {"id":"7","op":"meet_lines","args":[[0,1,0],[1,0,0]]}
/// and writes exactly one JSON line per non-blank input line:
///   {"id":"7","result":[0.0,0.0,-1.0]}
/// Malformed lines yield {"error":"ParseError","line":N}; kernel failures
/// yield {"error":"<code>","id":...}. Processing never aborts mid-stream.
/// Keys are emitted in sorted order and doubles in shortest round-trip form,
/// so identical input bytes produce identical output bytes.
///
/// Supported ops: cross3, cross4, cross5, meet_lines, join_points,
/// plane_from_points, meet_three_planes, meet_two_planes,
/// plucker_from_points, bary_triangle, bary_tetrahedron, lerp_rational,
/// lerp_monotonic, normalize_exponents.
///
/// Returns the number of records that produced an error line.
std::size_t run_batch(std::istream& in, std::ostream& out, const BatchOptions& opt = {});

} // namespace pgeom::batchio
