#pragma once

#include <stdexcept>
#include <string>

namespace pgeom {

/// Base of all structured geometry errors. `code()` is the stable machine
/// name used in CLI error records and tests.
class geom_error : public std::runtime_error {
public:
    geom_error(const char* code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    const char* code() const noexcept { return code_; }

private:
    const char* code_;
};

/// w = 0: point at infinity, has no Euclidean image.
struct ideal_point_error : geom_error {
    explicit ideal_point_error(const std::string& what = "ideal point (w = 0) has no Euclidean image")
        : geom_error("IdealPoint", what) {}
};

/// Construction collapsed to the all-zero tuple (projectively dependent inputs).
struct degenerate_input_error : geom_error {
    explicit degenerate_input_error(const std::string& what = "inputs are projectively dependent")
        : geom_error("DegenerateInput", what) {}
};

/// Two generating points are projectively equal: no unique line.
struct degenerate_line_error : geom_error {
    explicit degenerate_line_error(const std::string& what = "generating points coincide; line undefined")
        : geom_error("DegenerateLine", what) {}
};

/// Plane normals are parallel: no unique intersection line / oracle point.
struct parallel_planes_error : geom_error {
    explicit parallel_planes_error(const std::string& what = "planes are parallel or identical")
        : geom_error("ParallelPlanes", what) {}
};

/// Triangle vertices projectively collinear.
struct degenerate_triangle_error : geom_error {
    explicit degenerate_triangle_error(const std::string& what = "triangle vertices are collinear")
        : geom_error("DegenerateTriangle", what) {}
};

/// Tetrahedron vertices projectively coplanar (all-zero barycentric tuple).
struct degenerate_tetrahedron_error : geom_error {
    explicit degenerate_tetrahedron_error(const std::string& what = "tetrahedron vertices are coplanar")
        : geom_error("DegenerateTetrahedron", what) {}
};

/// Barycentric readout with xi_w = 0: query/vertex configuration degenerate.
struct degenerate_query_error : geom_error {
    explicit degenerate_query_error(const std::string& what = "barycentric tuple has xi_w = 0")
        : geom_error("DegenerateQuery", what) {}
};

/// Segment endpoint with w = 0 cannot be interpolated.
struct ideal_endpoint_error : geom_error {
    explicit ideal_endpoint_error(const std::string& what = "segment endpoint is ideal (w = 0)")
        : geom_error("IdealEndpoint", what) {}
};

/// Endpoint w components have opposite signs: path crosses infinity.
struct sign_conflict_error : geom_error {
    explicit sign_conflict_error(const std::string& what = "endpoint w components have opposite signs")
        : geom_error("SignConflict", what) {}
};

/// Exactly singular system handed to a Cramer solver.
struct singular_matrix_error : geom_error {
    explicit singular_matrix_error(const std::string& what = "matrix determinant is exactly zero")
        : geom_error("SingularMatrix", what) {}
};

} // namespace pgeom
