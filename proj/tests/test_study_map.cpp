#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "support.hpp"
#include "dualgeom/line.hpp"
#include "dualgeom/ruled_surface.hpp"

using namespace dualgeom;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

std::size_t count_prefix(const std::vector<std::string>& lines, const std::string& prefix) {
    std::size_t n = 0;
    for (const auto& l : lines) n += l.rfind(prefix, 0) == 0;
    return n;
}

}  // namespace

TEST_CASE("Study image of the study circle is the helicoid") {
    const RuledSurfaceMesh mesh = ruled_surface_from_dual_curve(study_circle(), 64, {-2, 2}, 16);
    REQUIRE(mesh.vertices.size() == 1024);
    double worst = 0;
    for (std::size_t i = 0; i < mesh.s_count(); ++i) {
        for (std::size_t j = 0; j < mesh.u_count(); ++j) {
            const double s = mesh.s_values[i], u = mesh.u_values[j];
            worst = std::max(worst, (mesh.vertex(i, j) - Vec3(u * std::cos(s), u * std::sin(s), s)).norm());
        }
    }
    CHECK(worst < 1e-8);

    const RuledSurfaceMesh one = ruled_surface_from_dual_curve(study_circle(), 2, {1, 2}, 2);
    CHECK((one.vertex(0, 0) - Vec3(1, 0, 0)).norm() < 1e-15);
}

TEST_CASE("mesh invariants") {
    const RuledSurfaceMesh mesh = ruled_surface_from_dual_curve(study_circle(), 20, {-1, 3}, 5);
    for (std::size_t i = 0; i < mesh.s_count(); ++i) {
        const Vec3& base = mesh.base_curve[i];
        const Vec3& l = mesh.rulings[i];
        CHECK(std::abs(l.norm() - 1) < 1e-12);
        CHECK(std::abs(base.dot(l)) < 1e-10);
        CHECK(max_abs(line_to_dual({base, l}) - study_circle().position(mesh.s_values[i])) < 1e-8);
        for (std::size_t j = 0; j < mesh.u_count(); ++j) {
            const Vec3 d = mesh.vertex(i, j) - base;
            CHECK(d.cross(l).norm() < 1e-12);
            CHECK(std::abs(d.norm() - std::abs(mesh.u_values[j])) < 1e-12);
        }
    }
}

TEST_CASE("constant curve sweeps the x-axis in place") {
    const DualCurve c("x-axis", {0, 1}, [](double) { return DualVec3{Vec3(1, 0, 0), Vec3(0, 0, 0)}; });
    const RuledSurfaceMesh mesh = ruled_surface_from_dual_curve(c, 4, {-1, 1}, 3);
    for (std::size_t i = 0; i < mesh.s_count(); ++i) {
        CHECK(mesh.base_curve[i].norm() == 0.0);
        CHECK(mesh.rulings[i] == Vec3(1, 0, 0));
    }
}

TEST_CASE("great circle gives a pencil through the origin") {
    const RuledSurfaceMesh mesh = ruled_surface_from_dual_curve(great_circle(), 8, {-1, 1}, 3);
    for (const Vec3& b : mesh.base_curve) CHECK(b.norm() == 0.0);
}

TEST_CASE("curves off the dual unit sphere are rejected") {
    CHECK_THROWS_CODE(ruled_surface_from_dual_curve(real_helix(1, 0.5), 8, {-1, 1}, 3),
                      ErrorCode::NotOnDualUnitSphere);
}

TEST_CASE("OBJ export") {
    const RuledSurfaceMesh small = ruled_surface_from_dual_curve(study_circle(), 2, {-1, 1}, 2);
    std::ostringstream a;
    export_obj(small, a);
    const auto lines = lines_of(a.str());
    CHECK(count_prefix(lines, "v ") == 4);
    CHECK(count_prefix(lines, "f ") == 2);
    CHECK(lines[4] == "f 1 3 4");
    CHECK(lines[5] == "f 1 4 2");

    const RuledSurfaceMesh helicoid = ruled_surface_from_dual_curve(study_circle(), 64, {-2, 2}, 16);
    std::ostringstream first, second;
    export_obj(helicoid, first);
    export_obj(helicoid, second);
    CHECK(count_prefix(lines_of(first.str()), "v ") == 1024);
    CHECK(count_prefix(lines_of(first.str()), "f ") == 2 * 63 * 15);
    CHECK(first.str() == second.str());

    CHECK_THROWS_CODE(export_obj(small, std::filesystem::path("/nonexistent-dir/mesh.obj")), ErrorCode::IOFailure);
}

TEST_CASE("CSV export") {
    const RuledSurfaceMesh mesh = ruled_surface_from_dual_curve(study_circle(), 5, {-2, 2}, 2);
    std::ostringstream out;
    export_csv(mesh, out);
    const auto lines = lines_of(out.str());
    REQUIRE(lines.size() == 11);
    CHECK(lines[0] == "s,u,x,y,z");

    // Row for s = π/2, u = 2.
    double s, u, x, y, z;
    REQUIRE(std::sscanf(lines[4].c_str(), "%lf,%lf,%lf,%lf,%lf", &s, &u, &x, &y, &z) == 5);
    CHECK(s == doctest::Approx(M_PI / 2));
    CHECK(u == 2.0);
    CHECK(std::abs(x) < 1e-15);
    CHECK(y == doctest::Approx(2.0));
    CHECK(z == doctest::Approx(M_PI / 2));

    for (std::size_t k = 1; k < lines.size(); ++k) {
        REQUIRE(std::sscanf(lines[k].c_str(), "%lf,%lf,%lf,%lf,%lf", &s, &u, &x, &y, &z) == 5);
        const Vec3& v = mesh.vertices[k - 1];
        CHECK(x == v.x());
        CHECK(y == v.y());
        CHECK(z == v.z());
    }

    const RuledSurfaceMesh empty = ruled_surface_from_dual_curve(study_circle(), 3, {-2, 2}, 0);
    std::ostringstream header;
    export_csv(empty, header);
    CHECK(header.str() == "s,u,x,y,z\n");
}
