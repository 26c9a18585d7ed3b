#include "pgeom/batchio.hpp"

#include <array>
#include <cmath>
#include <istream>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "pgeom/barycentric.hpp"
#include "pgeom/errors.hpp"
#include "pgeom/hcoords.hpp"
#include "pgeom/interp.hpp"
#include "pgeom/joinmeet.hpp"
#include "pgeom/xprod.hpp"

namespace pgeom::batchio {

namespace {

using nlohmann::json;

template <std::size_t N>
std::array<double, N> tuple_arg(const std::vector<std::vector<double>>& args, std::size_t i) {
    if (args[i].size() != N)
        throw std::invalid_argument("argument " + std::to_string(i + 1) + " must have " +
                                    std::to_string(N) + " components");
    std::array<double, N> a{};
    for (std::size_t k = 0; k < N; ++k) a[k] = args[i][k];
    return a;
}

void require_arity(const std::vector<std::vector<double>>& args, std::size_t n) {
    if (args.size() != n)
        throw std::invalid_argument("expected " + std::to_string(n) + " argument tuples");
}

HPoint2 point2_arg(const std::vector<std::vector<double>>& args, std::size_t i) {
    const auto a = tuple_arg<3>(args, i);
    return {a[0], a[1], a[2]};
}

HPoint3 point3_arg(const std::vector<std::vector<double>>& args, std::size_t i) {
    const auto a = tuple_arg<4>(args, i);
    return {a[0], a[1], a[2], a[3]};
}

HPlane plane_arg(const std::vector<std::vector<double>>& args, std::size_t i) {
    const auto a = tuple_arg<4>(args, i);
    return {a[0], a[1], a[2], a[3]};
}

double scalar_arg(const std::vector<std::vector<double>>& args, std::size_t i) {
    if (args[i].size() != 1)
        throw std::invalid_argument("argument " + std::to_string(i + 1) + " must be a 1-tuple");
    return args[i][0];
}

template <std::size_t N>
json tuple_json(const std::array<double, N>& a) {
    return json(std::vector<double>(a.begin(), a.end()));
}

/// Euclidean projection of a homogeneous point tuple (w last); null if ideal.
json euclidean_json(std::span<const double> h) {
    const double w = h.back();
    if (w == 0.0) return nullptr;
    std::vector<double> e(h.size() - 1);
    for (std::size_t i = 0; i + 1 < h.size(); ++i) e[i] = h[i] / w;
    return json(e);
}

json dispatch(const BatchRecord& rec, const BatchOptions& opt) {
    const auto& args = rec.args;
    json out;

    if (rec.op == "cross3") {
        require_arity(args, 2);
        out["result"] = tuple_json(cross3(tuple_arg<3>(args, 0), tuple_arg<3>(args, 1)));
    } else if (rec.op == "cross4") {
        require_arity(args, 3);
        out["result"] = tuple_json(
            cross4(tuple_arg<4>(args, 0), tuple_arg<4>(args, 1), tuple_arg<4>(args, 2)));
    } else if (rec.op == "cross5") {
        require_arity(args, 4);
        out["result"] = tuple_json(cross5(tuple_arg<5>(args, 0), tuple_arg<5>(args, 1),
                                          tuple_arg<5>(args, 2), tuple_arg<5>(args, 3)));
    } else if (rec.op == "meet_lines") {
        require_arity(args, 2);
        const auto l0 = tuple_arg<3>(args, 0), l1 = tuple_arg<3>(args, 1);
        const HPoint2 p = meet_lines({l0[0], l0[1], l0[2]}, {l1[0], l1[1], l1[2]});
        out["result"] = tuple_json(p.tuple());
        if (opt.euclidean) out["euclidean"] = euclidean_json(p.tuple());
    } else if (rec.op == "join_points") {
        require_arity(args, 2);
        out["result"] = tuple_json(join_points(point2_arg(args, 0), point2_arg(args, 1)).tuple());
    } else if (rec.op == "plane_from_points") {
        require_arity(args, 3);
        out["result"] = tuple_json(
            plane_from_points(point3_arg(args, 0), point3_arg(args, 1), point3_arg(args, 2))
                .tuple());
    } else if (rec.op == "meet_three_planes") {
        require_arity(args, 3);
        const HPoint3 p =
            meet_three_planes(plane_arg(args, 0), plane_arg(args, 1), plane_arg(args, 2));
        out["result"] = tuple_json(p.tuple());
        if (opt.euclidean) out["euclidean"] = euclidean_json(p.tuple());
    } else if (rec.op == "meet_two_planes") {
        require_arity(args, 2);
        const ParametricLine3 l = meet_two_planes(plane_arg(args, 0), plane_arg(args, 1));
        out["result"] = tuple_json(l.origin_point.tuple());
        out["direction"] = tuple_json(l.direction);
        if (opt.euclidean) out["euclidean"] = euclidean_json(l.origin_point.tuple());
    } else if (rec.op == "plucker_from_points") {
        require_arity(args, 2);
        out["result"] =
            tuple_json(plucker_from_points(point3_arg(args, 0), point3_arg(args, 1)).tuple());
    } else if (rec.op == "bary_triangle") {
        require_arity(args, 4);
        const ProjBary3 xi = bary_triangle(point2_arg(args, 0), point2_arg(args, 1),
                                           point2_arg(args, 2), point2_arg(args, 3));
        out["result"] = tuple_json(xi.tuple());
        if (opt.euclidean) out["euclidean"] = tuple_json(bary_to_euclidean(xi));
    } else if (rec.op == "bary_tetrahedron") {
        require_arity(args, 5);
        const ProjBary4 xi =
            bary_tetrahedron(point3_arg(args, 0), point3_arg(args, 1), point3_arg(args, 2),
                             point3_arg(args, 3), point3_arg(args, 4));
        out["result"] = tuple_json(xi.tuple());
        if (opt.euclidean) out["euclidean"] = tuple_json(bary_to_euclidean(xi));
    } else if (rec.op == "lerp_rational" || rec.op == "lerp_monotonic") {
        require_arity(args, 3);
        const bool rational = rec.op == "lerp_rational";
        const double t = scalar_arg(args, 2);
        if (args[0].size() == 3) {
            const HSegment2 seg{point2_arg(args, 0), point2_arg(args, 1)};
            const HPoint2 p = rational ? lerp_rational(seg, t) : lerp_monotonic(seg, t);
            out["result"] = tuple_json(p.tuple());
            if (opt.euclidean) out["euclidean"] = euclidean_json(p.tuple());
        } else {
            const HSegment3 seg{point3_arg(args, 0), point3_arg(args, 1)};
            const HPoint3 p = rational ? lerp_rational(seg, t) : lerp_monotonic(seg, t);
            out["result"] = tuple_json(p.tuple());
            if (opt.euclidean) out["euclidean"] = euclidean_json(p.tuple());
        }
    } else if (rec.op == "normalize_exponents") {
        require_arity(args, 1);
        if (args[0].size() < 3 || args[0].size() > 6)
            throw std::invalid_argument("argument 1 must have 3 to 6 components");
        const ScaledValue s = normalize_exponents(args[0]);
        const auto t = s.tuple();
        out["result"] = json(std::vector<double>(t.begin(), t.end()));
        out["exp2"] = s.exp2();
    } else {
        throw std::invalid_argument("unknown op \"" + rec.op + "\"");
    }
    return out;
}

} // namespace

std::size_t run_batch(std::istream& in, std::ostream& out, const BatchOptions& opt) {
    std::size_t errors = 0;
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;

        const json doc = json::parse(line, nullptr, /*allow_exceptions=*/false);
        json reply;
        if (doc.is_discarded() || !doc.is_object() || !doc.contains("op") ||
            !doc["op"].is_string() || !doc.contains("args") || !doc["args"].is_array()) {
            reply["error"] = "ParseError";
            reply["line"] = lineno;
            out << reply.dump() << '\n';
            ++errors;
            continue;
        }

        BatchRecord rec;
        rec.op = doc["op"].get<std::string>();
        if (doc.contains("id")) reply["id"] = doc["id"];

        bool args_ok = true;
        for (const auto& tup : doc["args"]) {
            if (!tup.is_array()) {
                args_ok = false;
                break;
            }
            std::vector<double> v;
            v.reserve(tup.size());
            for (const auto& x : tup) {
                if (!x.is_number()) {
                    args_ok = false;
                    break;
                }
                v.push_back(x.get<double>());
            }
            if (!args_ok) break;
            rec.args.push_back(std::move(v));
        }
        if (!args_ok) {
            reply["error"] = "ParseError";
            reply["line"] = lineno;
            out << reply.dump() << '\n';
            ++errors;
            continue;
        }

        try {
            const json result = dispatch(rec, opt);
            reply.update(result);
        } catch (const geom_error& e) {
            reply["error"] = e.code();
            ++errors;
        } catch (const std::invalid_argument& e) {
            reply["error"] = "InvalidArgument";
            reply["message"] = e.what();
            ++errors;
        }
        out << reply.dump() << '\n';
    }
    return errors;
}

} // namespace pgeom::batchio
