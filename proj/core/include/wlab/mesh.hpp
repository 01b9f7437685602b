#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "wlab/profile.hpp"
#include "wlab/types.hpp"

namespace wlab {

enum class MeshFormat { OBJ, PLY };

/// Maps from the ambient R^4 coordinates to R^3 for viewing. `poincare`
/// sends the hyperboloid factor to the unit disk (epsilon = -1 only),
/// `stereographic` projects the sphere factor from (-1,0,0) (epsilon = +1
/// only), `drop_x1` just forgets the first coordinate. All metric reporting
/// uses intrinsic data; projections are for viewers only.
enum class Projection { poincare, drop_x1, stereographic };

const char* to_string(MeshFormat format);
const char* to_string(Projection projection);

/// Discretized rotational immersion: an n_u x n_v vertex grid in ambient
/// coordinates (x1,x2,x3,x4) plus curvature data, which is constant along
/// each orbit row.
struct RotationalMesh {
    int epsilon = -1;
    std::size_t n_u = 0;
    std::size_t n_v = 0;
    bool closed = false;
    std::vector<std::array<double, 4>> vertices;  // row-major, i*n_v + j
    std::vector<double> row_k;                    // profile radius per row
    std::vector<CurvatureSample> row_curvature;   // per row; constant over v

    const std::array<double, 4>& vertex(std::size_t i, std::size_t j) const {
        return vertices[i * n_v + j];
    }
    /// Curvature sample at grid vertex (i, j); rotational symmetry makes it
    /// independent of j.
    const CurvatureSample& curvature(std::size_t i, std::size_t) const {
        return row_curvature[i];
    }
};

/// Welded, projected triangle mesh ready for writing. Pole rows (k = 0) are
/// collapsed to single vertices so that closed meshes are watertight.
struct TriMesh {
    std::vector<std::array<double, 3>> vertices;
    std::vector<std::array<std::int32_t, 3>> triangles;
};

/// Rotates the profile curve: vertex(i,j) = phi(u_i, 2*pi*j/n_v) where
///   phi = (cosh k, sinh k cos v, sinh k sin v, h)   for epsilon = -1,
///   phi = (cos k,  sin k cos v,  sin k sin v,  h)   for epsilon = +1.
RotationalMesh immerse(const ProfileCurve& profile, int n_v);

/// Curvature data of the rotational surface at a profile point, from the
/// sample triple (k, k', k''). kappa1 is the profile-direction principal
/// curvature -k''/h', kappa2 = K_e/kappa1 the orbit direction, nu = k'.
/// Points with |k'| = 1 are treated by the umbilic axis limit.
CurvatureSample curvatures_rotational(double k, double kp, double kpp,
                                      const WeingartenData& data);

std::array<double, 3> project_point(const std::array<double, 4>& x, Projection projection,
                                    int epsilon);

/// Builds the welded projected triangulation of the grid.
TriMesh triangulate(const RotationalMesh& mesh, Projection projection);

void export_mesh(const RotationalMesh& mesh, MeshFormat format, Projection projection,
                 std::ostream& out);
void export_mesh(const RotationalMesh& mesh, MeshFormat format, Projection projection,
                 const std::string& path);

/// max over vertices of |eps*x1^2 + x2^2 + x3^2 - eps|.
double max_ambient_residual(const RotationalMesh& mesh);
/// max over rows of the Gauss-relation residual.
double max_gauss_residual(const RotationalMesh& mesh);
/// max over rows of the curvature-relation residual |a*Ki + b*Ke - c|.
double max_weingarten_residual(const RotationalMesh& mesh, const WeingartenData& data);

}  // namespace wlab
