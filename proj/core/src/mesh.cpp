#include "wlab/mesh.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "wlab/geometry.hpp"

namespace wlab {

namespace {

constexpr double kPoleTol = 1e-9;  // rows this close to the axis weld to a point

bool is_pole_row(const RotationalMesh& mesh, std::size_t i) {
    return mesh.row_k[i] < kPoleTol;
}

}  // namespace

const char* to_string(MeshFormat format) {
    return format == MeshFormat::OBJ ? "obj" : "ply";
}

const char* to_string(Projection projection) {
    switch (projection) {
        case Projection::poincare: return "poincare";
        case Projection::drop_x1: return "drop_x1";
        case Projection::stereographic: return "stereographic";
    }
    return "drop_x1";
}

RotationalMesh immerse(const ProfileCurve& profile, int n_v) {
    if (profile.samples.empty()) throw invalid_data_error("immerse: empty profile");
    if (n_v < 3) throw invalid_data_error("immerse: need n_v >= 3");

    RotationalMesh mesh;
    mesh.epsilon = profile.data.epsilon;
    mesh.n_u = profile.samples.size();
    mesh.n_v = static_cast<std::size_t>(n_v);
    mesh.closed = profile.closed;
    mesh.vertices.resize(mesh.n_u * mesh.n_v);
    mesh.row_k.resize(mesh.n_u);
    mesh.row_curvature.resize(mesh.n_u);

    const bool hyp = mesh.epsilon == -1;
    for (std::size_t i = 0; i < mesh.n_u; ++i) {
        const ProfileSample& s = profile.samples[i];
        mesh.row_k[i] = s.k;
        mesh.row_curvature[i] = curvatures_rotational(s.k, s.kp, s.kpp, profile.data);
        const double c1 = hyp ? std::cosh(s.k) : std::cos(s.k);
        const double r = hyp ? std::sinh(s.k) : std::sin(s.k);
        for (std::size_t j = 0; j < mesh.n_v; ++j) {
            const double v = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(mesh.n_v);
            mesh.vertices[i * mesh.n_v + j] = {c1, r * std::cos(v), r * std::sin(v), s.h};
        }
    }
    return mesh;
}

CurvatureSample curvatures_rotational(double k, double kp, double kpp,
                                      const WeingartenData& data) {
    data.require_sum_nonzero();
    CurvatureSample s;
    s.nu = kp;

    const double hp2 = 1.0 - kp * kp;
    if (k < kPoleTol || hp2 < 1e-24) {
        // umbilic axis limit: K_e -> (c - eps*a)/(a+b), kappa1 = kappa2
        s.K_e = axis_extrinsic(data);
        s.K_i = s.K_e + data.epsilon * kp * kp;
        s.kappa1 = s.kappa2 = std::sqrt(std::max(0.0, s.K_e));
    } else {
        const EpsTrig t = trig_eps(k, data.epsilon);
        s.K_e = -kpp * t.cot_eps;
        s.K_i = data.epsilon * kp * kp + s.K_e;
        const double hp = std::sqrt(hp2);
        s.kappa1 = -kpp / hp;
        s.kappa2 = s.K_e / s.kappa1;
    }
    s.gauss_residual = gauss_residual(s, data.epsilon);
    s.weingarten_residual = weingarten_residual(s, data);
    return s;
}

std::array<double, 3> project_point(const std::array<double, 4>& x, Projection projection,
                                    int epsilon) {
    switch (projection) {
        case Projection::poincare:
            if (epsilon != -1)
                throw invalid_data_error("poincare projection needs epsilon = -1");
            return {x[1] / (1.0 + x[0]), x[2] / (1.0 + x[0]), x[3]};
        case Projection::stereographic:
            if (epsilon != 1)
                throw invalid_data_error("stereographic projection needs epsilon = +1");
            if (x[0] <= -1.0 + 1e-12)
                throw domain_error("stereographic projection undefined at x1 = -1");
            return {x[1] / (1.0 + x[0]), x[2] / (1.0 + x[0]), x[3]};
        case Projection::drop_x1:
            return {x[1], x[2], x[3]};
    }
    return {x[1], x[2], x[3]};
}

TriMesh triangulate(const RotationalMesh& mesh, Projection projection) {
    TriMesh out;
    const std::size_t nu = mesh.n_u, nv = mesh.n_v;

    // vertex ids: pole rows collapse to one vertex
    std::vector<std::int32_t> row_base(nu);
    std::int32_t next = 0;
    for (std::size_t i = 0; i < nu; ++i) {
        row_base[i] = next;
        next += is_pole_row(mesh, i) ? 1 : static_cast<std::int32_t>(nv);
    }
    out.vertices.reserve(static_cast<std::size_t>(next));
    for (std::size_t i = 0; i < nu; ++i) {
        const std::size_t count = is_pole_row(mesh, i) ? 1 : nv;
        for (std::size_t j = 0; j < count; ++j)
            out.vertices.push_back(project_point(mesh.vertex(i, j), projection, mesh.epsilon));
    }

    auto vid = [&](std::size_t i, std::size_t j) -> std::int32_t {
        return is_pole_row(mesh, i) ? row_base[i]
                                    : row_base[i] + static_cast<std::int32_t>(j % nv);
    };

    for (std::size_t i = 0; i + 1 < nu; ++i) {
        const bool p0 = is_pole_row(mesh, i), p1 = is_pole_row(mesh, i + 1);
        if (p0 && p1) continue;
        for (std::size_t j = 0; j < nv; ++j) {
            const std::int32_t a = vid(i, j), b = vid(i + 1, j);
            const std::int32_t c = vid(i + 1, j + 1), d = vid(i, j + 1);
            if (p0) {
                out.triangles.push_back({a, b, c});
            } else if (p1) {
                out.triangles.push_back({a, b, d});
            } else {
                out.triangles.push_back({a, b, c});
                out.triangles.push_back({a, c, d});
            }
        }
    }
    return out;
}

void export_mesh(const RotationalMesh& mesh, MeshFormat format, Projection projection,
                 std::ostream& out) {
    const TriMesh tri = triangulate(mesh, projection);
    if (format == MeshFormat::OBJ) {
        out << "# rotational surface mesh\n# projection: " << to_string(projection) << "\n";
        char buf[128];
        for (const auto& v : tri.vertices) {
            std::snprintf(buf, sizeof(buf), "v %.9g %.9g %.9g\n", v[0], v[1], v[2]);
            out << buf;
        }
        for (const auto& t : tri.triangles)
            out << "f " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
        return;
    }

    // binary little-endian PLY with float64 vertex properties
    out << "ply\nformat binary_little_endian 1.0\n"
        << "comment projection: " << to_string(projection) << "\n"
        << "element vertex " << tri.vertices.size() << "\n"
        << "property float64 x\nproperty float64 y\nproperty float64 z\n"
        << "element face " << tri.triangles.size() << "\n"
        << "property list uchar int32 vertex_indices\nend_header\n";
    for (const auto& v : tri.vertices)
        out.write(reinterpret_cast<const char*>(v.data()), 3 * sizeof(double));
    for (const auto& t : tri.triangles) {
        const unsigned char n = 3;
        out.write(reinterpret_cast<const char*>(&n), 1);
        out.write(reinterpret_cast<const char*>(t.data()), 3 * sizeof(std::int32_t));
    }
}

void export_mesh(const RotationalMesh& mesh, MeshFormat format, Projection projection,
                 const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error("cannot open output file: " + path);
    export_mesh(mesh, format, projection, out);
    if (!out) throw error("write failed: " + path);
}

double max_ambient_residual(const RotationalMesh& mesh) {
    double worst = 0.0;
    const double eps = mesh.epsilon;
    for (const auto& x : mesh.vertices) {
        const double r = eps * x[0] * x[0] + x[1] * x[1] + x[2] * x[2] - eps;
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

double max_gauss_residual(const RotationalMesh& mesh) {
    double worst = 0.0;
    for (const auto& s : mesh.row_curvature) worst = std::max(worst, s.gauss_residual);
    return worst;
}

double max_weingarten_residual(const RotationalMesh& mesh, const WeingartenData& data) {
    double worst = 0.0;
    for (const auto& s : mesh.row_curvature)
        worst = std::max(worst, weingarten_residual(s, data));
    return worst;
}

}  // namespace wlab
