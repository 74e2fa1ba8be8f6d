#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "grunbaum/config.hpp"
#include "grunbaum/polytope.hpp"

namespace grunbaum {

// Affine profile p(x) = <a, x> + b.
struct AffineProfile {
  Vec a;
  double b = 0.0;
};

// Cone metadata enabling the exact Beta-sliced integration path: the support
// is conv(apex, base) with the profile vanishing on the base hyperplane and
// constant on slices parallel to it.
struct ConeStructure {
  Vec apex;
  Vec base_centroid;
  double base_volume = 0.0;  // (n-1)-dimensional measure
  Vec xi;                    // unit normal of the base plane, <xi, base> = const
};

// Gamma-concave function f(x) = scale * chi_K(x) * p(x)^(1/gamma) with a
// concave piecewise-linear profile p on the triangulated support K.
class GammaFunction {
 public:
  GammaFunction(double gamma, double scale, VPolytope support, Mesh mesh,
                std::vector<double> values);
  // Cone-affine specialization: p is a single affine form on the support.
  GammaFunction(double gamma, double scale, VPolytope support, AffineProfile affine);

  double gamma() const { return gamma_; }
  double scale() const { return scale_; }
  int dim() const { return support_.ambient_dim(); }
  const VPolytope& support() const { return support_; }
  const Mesh& mesh() const { return mesh_; }
  const std::vector<double>& values() const { return values_; }

  bool is_affine() const { return affine_.has_value(); }
  const AffineProfile& affine() const { return *affine_; }

  const std::optional<ConeStructure>& cone() const { return cone_; }
  void set_cone(ConeStructure c);

  // Profile value p(x); piecewise-linear interpolation without a support test.
  double profile_at(const Vec& x) const;
  double evaluate(const Vec& x) const;

  GammaFunction translated(const Vec& t) const;

  // Affine restriction of p to the simplex with the given mesh index,
  // evaluated at an (ambient) point that may lie on the simplex boundary.
  double simplex_profile(int simplex_index, const Vec& x) const;

  // Lowest-index mesh simplex containing x within the barycentric tolerance,
  // or -1. Boundary points are owned by exactly one simplex.
  int owner_simplex(const Vec& x, double tolerance = 1e-9) const;

 private:
  double gamma_;
  double scale_;
  VPolytope support_;
  Mesh mesh_;
  std::vector<double> values_;
  std::optional<AffineProfile> affine_;
  std::optional<ConeStructure> cone_;
  // Per-simplex barycentric solvers.
  std::vector<Mat> bary_inv_;
  void prepare();
};

// Integral of f along the ray x0 + s*theta for s in [t0, infinity); pieces are
// resolved at simplex boundaries where the profile is affine, so the result is
// a sum of closed-form antiderivatives.
double ray_integral(const GammaFunction& f, const Vec& theta, double t0);
double ray_integral_from(const GammaFunction& f, const Vec& x0, const Vec& theta, double t0);

// Full integral; Grundmann-Moller per simplex with one-level adaptive
// subdivision, or the exact Beta-sliced path for cone-affine functions.
double integrate(const GammaFunction& f,
                 const QuadratureConfig& cfg = default_config().quad);
Vec fn_centroid(const GammaFunction& f,
                const QuadratureConfig& cfg = default_config().quad);

// Exact fiber integral of f over {y + Etilde_perp} for y in Etilde (ambient).
double marginal_value(const GammaFunction& f, const Subspace& Etilde, const Vec& y);

// Marginal of f on Etilde, sampled on a refined mesh of K|Etilde and returned
// in Etilde-frame coordinates with gamma_tilde = gamma / ((k-1) gamma + 1).
GammaFunction marginal(const GammaFunction& f, const Subspace& Etilde,
                       double edge_factor = default_config().mesh_edge_factor);

// Borell-Brascamp-Lieb midpoint slack for the marginal of f on Etilde:
//   F(l y1 + (1-l) y2)^gt - [l F(y1)^gt + (1-l) F(y2)^gt],
// with the marginal values computed exactly on demand.
double bbl_midpoint_check(const GammaFunction& f, const Subspace& Etilde, const Vec& y1,
                          const Vec& y2, double lambda);

// Restriction of f to the subspace E through the origin, in E-coordinates.
GammaFunction restrict_to_subspace(const GammaFunction& f, const Subspace& E);

// Integral of g over {<theta_dir, x> >= 0} within its own space.
double integrate_over_halfspace(const GammaFunction& g, const Vec& theta_dir,
                                const QuadratureConfig& cfg = default_config().quad);

// integral over E cap theta+ of f divided by the integral over E (theta in E).
double halfspace_mass_ratio(const GammaFunction& f, const Subspace& E, const Vec& theta);

// Section function A_{K, Etilde} of the body P for theta in E, returned as a
// GammaFunction on Etilde = span(E_perp, theta) with gamma = 1/(k-1); for
// k = 1 the indicator of K cap Etilde. P is translated internally so that its
// centroid projects to the origin of Etilde.
GammaFunction section_profile(const VPolytope& P, const Vec& theta, const Subspace& E,
                              double edge_factor = default_config().mesh_edge_factor);

// Type-invariant audit: minimum vertex value and minimum in-simplex midpoint
// concavity slack over random sample pairs.
struct GammaValidation {
  double min_value = 0.0;
  double min_midpoint_slack = 0.0;
  bool ok = false;
};
GammaValidation validate(const GammaFunction& f, int samples = 200, std::uint64_t seed = 1);

}  // namespace grunbaum
