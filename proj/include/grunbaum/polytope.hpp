#pragma once

#include <optional>
#include <vector>

#include "grunbaum/geom.hpp"

namespace grunbaum {

// Closed halfspace {x : <normal, x> >= offset} with |normal| = 1.
struct Halfspace {
  Vec normal;
  double offset = 0.0;
};

// Convex body as a vertex list with a cached triangulation. Degenerate
// (lower-dimensional) polytopes carry their intrinsic dimension and measure
// volumes in that dimension. The empty polytope is a value, not an error.
class VPolytope {
 public:
  // Boundary facet as a (d-1)-simplex in chart coordinates.
  // Inside condition: <normal, c> <= offset.
  struct Facet {
    std::vector<int> vtx;
    Vec normal;
    double offset = 0.0;
  };

  // Public hull: requires at least 2 points, not all coincident.
  static VPolytope hull(const std::vector<Vec>& points);
  // Internal-style construction allowing a single point or no points.
  static VPolytope from_points(const std::vector<Vec>& points);
  static VPolytope empty(int ambient_dim);

  bool is_empty() const { return vertices_.empty(); }
  int ambient_dim() const { return ambient_; }
  int intrinsic_dim() const { return intrinsic_; }
  const std::vector<Vec>& vertices() const { return vertices_; }
  const std::vector<std::vector<int>>& triangulation() const { return triangulation_; }
  const std::vector<Facet>& facets() const { return facets_; }

  double volume() const { return volume_; }
  // Ambient coordinates; throws on the empty polytope.
  Vec centroid() const;
  double diameter() const;

  const Vec& chart_origin() const { return chart_origin_; }
  const Mat& chart_basis() const { return chart_basis_; }  // n x d
  Vec to_chart(const Vec& ambient) const;
  Vec from_chart(const Vec& chart) const;
  Vec vertex_chart(int i) const { return verts_chart_[i]; }

  bool contains(const Vec& x, double tolerance = 1e-9) const;

  // max over vertices of <u, v>; throws on empty.
  double support(const Vec& u) const;
  // Largest t >= 0 with t*u in P. Requires a full-dimensional polytope with
  // the origin in its interior (all facet offsets positive).
  double radial(const Vec& u) const;

  // Facets as ambient halfspaces; only meaningful when intrinsic == ambient.
  std::vector<Halfspace> facet_halfspaces() const;

 private:
  int ambient_ = 0;
  int intrinsic_ = 0;
  std::vector<Vec> vertices_;  // ambient coords, extreme points only
  std::vector<Vec> verts_chart_;
  std::vector<std::vector<int>> triangulation_;
  std::vector<Facet> facets_;
  Vec chart_origin_;
  Mat chart_basis_;
  double volume_ = 0.0;
  Vec centroid_;

  static VPolytope build(std::vector<Vec> points, bool allow_degenerate);
};

// P intersect H. Vertices are original vertices inside H plus boundary-edge
// crossings. Empty result is a valid value.
VPolytope clip(const VPolytope& P, const Halfspace& H);

// P intersect (point + S), expressed in S-frame coordinates (<x, s_i>).
// Computed by successive clipping against the 2(n - dim S) halfspaces.
VPolytope section(const VPolytope& P, const Vec& point, const Subspace& S);

// Orthogonal projection, expressed in E-frame coordinates.
VPolytope project(const VPolytope& P, const Subspace& E);

VPolytope translate(const VPolytope& P, const Vec& t);

// d-volume of a d-simplex given d+1 points in R^d.
double simplex_volume(const std::vector<Vec>& pts);

// vol_m of the unit Euclidean ball; vol_0 = 1.
double unit_ball_volume(int m);

// Simplicial mesh over a full-dimensional polytope, used for sampled
// profiles and quadrature. Points live in the polytope's ambient space.
struct Mesh {
  int dim = 0;
  std::vector<Vec> points;
  std::vector<std::vector<int>> simplices;  // (dim+1)-tuples
  std::vector<double> volumes;              // per simplex

  double total_volume() const;
  double max_edge_length() const;
};

Mesh mesh_from_polytope(const VPolytope& P);

// Conforming longest-edge bisection until every edge is <= max_edge or the
// point budget is reached.
void refine_mesh(Mesh& mesh, double max_edge, int max_points = 60000);

// Steiner symmetrization of P with respect to E: each fiber over y in K|E is
// replaced by a centered ball of equal (n-k)-volume with radius r(y).
struct SteinerBody {
  Subspace base;                   // E
  VPolytope profile;               // K|E in E-coordinates
  Mesh profile_mesh;               // refined mesh over K|E
  std::vector<double> radii;       // r(y) per mesh point
  std::vector<double> fiber_vols;  // vol_{n-k}(K cap {y+E_perp}) per mesh point
  int fiber_dim = 0;               // n - k

  // Total mass via the fiber integral of the sampled radii.
  double volume() const;
};

SteinerBody steiner_symmetrize(const VPolytope& P, const Subspace& E,
                               double edge_factor = 0.05);

}  // namespace grunbaum
