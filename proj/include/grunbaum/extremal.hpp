#pragma once

#include "grunbaum/gamma_function.hpp"
#include "grunbaum/polytope.hpp"

namespace grunbaum {

// Parameters of one bound instance; gamma = infinity marks the body case.
struct BoundSpec {
  int n = 1;
  int k = 1;
  double gamma = std::numeric_limits<double>::infinity();
};

// (k/(n+1))^k, the sharp constant for sections and projections.
double grunbaum_bound(int n, int k);

// ((k*gamma+1)/((n+1)*gamma+1))^((k*gamma+1)/gamma).
double functional_bound(int n, int k, double gamma);

// ((gamma+1)/(gamma*n+gamma+1))^((gamma+1)/gamma) = functional_bound(n,1,gamma).
double theorem_bound(int n, double gamma);

// Regular polytopal approximant of the unit ball of the subspace S, returned
// in S's ambient space. dim 1 is the exact segment; dim 2 a regular polygon;
// dim 3 an icosphere. vertex_budget 0 means the config default.
VPolytope ball_approx(const Subspace& S, int vertex_budget = 0,
                      const BallApproxConfig& cfg = default_config().ball);

// f(x) = m chi_K (−<x,xi> + r<theta,xi>)^(1/gamma) on
// K = conv(−(n gamma/(gamma+1)) r theta, r theta + D), D an (n-1)-dimensional
// body in xi-perp with centroid at the origin (the origin point when n = 1).
GammaFunction theorem_equality_function(int n, double gamma, const Vec& theta, const Vec& xi,
                                        double m, double r, const VPolytope& D);

// theta-coordinate of the centroid of the cone-power function on
// conv(r0 theta, r1 theta + D): (n gamma r1 + (gamma+1) r0)/((n+1) gamma + 1).
double closed_form_centroid(int n, double gamma, double r0, double r1);

// K = conv(−((n−k+1)/k) z + D0, z + D1); the section ratio over E = span(D0, z)
// in the direction theta ~ z - proj(z) attains (k/(n+1))^k exactly.
VPolytope sections_equality_body(int n, int k, const Vec& z, const VPolytope& D0,
                                 const VPolytope& D1);

// K = conv((k/(n+1) − 1) theta + B^{k−1}, (k/(n+1)) theta + B^{n−k}) with ball
// factors in E cap theta-perp and E-perp; projection ratio onto E approaches
// (k/(n+1))^k as the approximants refine.
VPolytope projections_equality_body(int n, int k, const Vec& theta, const Subspace& E,
                                    int vertex_budget = 0,
                                    const BallApproxConfig& cfg = default_config().ball);

// f = chi_K (−<x,theta> + 1)^(1/gamma) on the Corollary equality support; the
// k-dimensional halfspace mass ratio over E attains functional_bound(n,k,gamma).
GammaFunction corollary_equality_function(int n, int k, double gamma, const Vec& theta,
                                          const Subspace& E, int vertex_budget = 0,
                                          const BallApproxConfig& cfg = default_config().ball);

}  // namespace grunbaum
