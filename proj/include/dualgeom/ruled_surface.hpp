#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "dualgeom/curve.hpp"

namespace dualgeom {

/// Ruled surface r(s,u) = β(s) + u·l(s) sampled on an s-major grid.
struct RuledSurfaceMesh {
    std::vector<Vec3> base_curve;  // β(s_i), the foot of the perpendicular from the origin
    std::vector<Vec3> rulings;     // l(s_i)
    std::vector<double> s_values;
    std::vector<double> u_values;
    Interval u_range;
    std::vector<Vec3> vertices;    // row-major: vertices[i * u_count + j] = r(s_i, u_j)

    std::size_t s_count() const { return s_values.size(); }
    std::size_t u_count() const { return u_values.size(); }
    const Vec3& vertex(std::size_t i, std::size_t j) const { return vertices[i * u_count() + j]; }
};

// Tolerance on both components of g(α̃,α̃) - 1 for a sample to be accepted as a line.
inline constexpr double kUnitSphereAdmission = 1e-6;

/// E. Study image of a curve on the dual unit sphere: each sample α̃(s_i) becomes the line
/// with direction α and foot α × α*. s_range defaults to the curve's domain.
/// Throws NotOnDualUnitSphere naming the first offending sample.
RuledSurfaceMesh ruled_surface_from_dual_curve(const DualCurve& curve, int s_samples,
                                               Interval u_range, int u_count,
                                               std::optional<Interval> s_range = std::nullopt);

/// Wavefront OBJ: `v` lines in s-major order, then two triangles per grid cell.
void export_obj(const RuledSurfaceMesh& mesh, std::ostream& out);
void export_obj(const RuledSurfaceMesh& mesh, const std::filesystem::path& path);

/// CSV with header `s,u,x,y,z`, one row per vertex, 17 significant digits.
void export_csv(const RuledSurfaceMesh& mesh, std::ostream& out);
void export_csv(const RuledSurfaceMesh& mesh, const std::filesystem::path& path);

}  // namespace dualgeom
