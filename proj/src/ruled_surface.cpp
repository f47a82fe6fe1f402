#include "dualgeom/ruled_surface.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "dualgeom/error.hpp"
#include "dualgeom/line.hpp"

namespace dualgeom {

namespace {

std::vector<double> grid(Interval range, int count) {
    std::vector<double> values(std::max(count, 0));
    for (int i = 0; i < count; ++i) {
        values[i] = count == 1 ? range.lo : range.lo + range.length() * i / (count - 1);
    }
    return values;
}

std::string number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

template <class Writer>
void write_file(const std::filesystem::path& path, Writer&& writer) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::IOFailure, "cannot open " + path.string() + " for writing");
    writer(out);
    out.flush();
    if (!out) throw Error(ErrorCode::IOFailure, "failed writing " + path.string());
}

}  // namespace

RuledSurfaceMesh ruled_surface_from_dual_curve(const DualCurve& curve, int s_samples,
                                               Interval u_range, int u_count,
                                               std::optional<Interval> s_range) {
    RuledSurfaceMesh mesh;
    mesh.s_values = grid(s_range.value_or(curve.domain()), s_samples);
    mesh.u_values = grid(u_range, u_count);
    mesh.u_range = u_range;

    for (double s : mesh.s_values) {
        const DualVec3 point = curve.position(s);
        const DualScalar g = dot(point, point);
        if (std::abs(g.real - 1.0) > kUnitSphereAdmission ||
            std::abs(g.dual) > kUnitSphereAdmission) {
            std::ostringstream msg;
            msg << "sample s=" << s << " of '" << curve.name() << "' has g(α,α) = " << g
                << " (residual " << max_abs(g - DualScalar(1.0)) << ")";
            throw Error(ErrorCode::NotOnDualUnitSphere, msg.str());
        }
        const Line line = dual_to_line(point, kUnitSphereAdmission);
        mesh.base_curve.push_back(line.point);
        mesh.rulings.push_back(line.direction);
    }

    mesh.vertices.reserve(mesh.s_count() * mesh.u_count());
    for (std::size_t i = 0; i < mesh.s_count(); ++i) {
        for (double u : mesh.u_values) mesh.vertices.push_back(mesh.base_curve[i] + u * mesh.rulings[i]);
    }
    return mesh;
}

void export_obj(const RuledSurfaceMesh& mesh, std::ostream& out) {
    for (const Vec3& v : mesh.vertices) {
        out << "v " << number(v.x()) << ' ' << number(v.y()) << ' ' << number(v.z()) << '\n';
    }
    const std::size_t U = mesh.u_count();
    for (std::size_t i = 0; i + 1 < mesh.s_count(); ++i) {
        for (std::size_t j = 0; j + 1 < U; ++j) {
            const std::size_t a = i * U + j + 1;
            const std::size_t b = (i + 1) * U + j + 1;
            const std::size_t c = b + 1;
            const std::size_t d = a + 1;
            out << "f " << a << ' ' << b << ' ' << c << '\n';
            out << "f " << a << ' ' << c << ' ' << d << '\n';
        }
    }
}

void export_obj(const RuledSurfaceMesh& mesh, const std::filesystem::path& path) {
    write_file(path, [&](std::ostream& out) { export_obj(mesh, out); });
}

void export_csv(const RuledSurfaceMesh& mesh, std::ostream& out) {
    out << "s,u,x,y,z\n";
    for (std::size_t i = 0; i < mesh.s_count(); ++i) {
        for (std::size_t j = 0; j < mesh.u_count(); ++j) {
            const Vec3& v = mesh.vertex(i, j);
            out << number(mesh.s_values[i]) << ',' << number(mesh.u_values[j]) << ','
                << number(v.x()) << ',' << number(v.y()) << ',' << number(v.z()) << '\n';
        }
    }
}

void export_csv(const RuledSurfaceMesh& mesh, const std::filesystem::path& path) {
    write_file(path, [&](std::ostream& out) { export_csv(mesh, out); });
}

}  // namespace dualgeom
