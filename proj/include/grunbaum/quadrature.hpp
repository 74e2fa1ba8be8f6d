#pragma once

#include <functional>
#include <vector>

#include "grunbaum/geom.hpp"

namespace grunbaum {

// Quadrature rule on the d-simplex in barycentric coordinates. Weights are
// normalized to sum to 1, so  integral over sigma f = vol(sigma) * sum w_i f(x_i).
struct SimplexRule {
  int dim;
  // nodes[i] holds d+1 barycentric coordinates.
  std::vector<std::vector<double>> nodes;
  std::vector<double> weights;
};

// Grundmann-Moller rule of degree 2s+1 on the d-simplex.
const SimplexRule& grundmann_moller(int dim, int degree);

// Integrate fn over the simplex with the given ambient vertices using the rule.
double integrate_simplex(const std::vector<Vec>& verts, double volume, const SimplexRule& rule,
                         const std::function<double(const Vec&)>& fn);

// Euler Beta function Gamma(u)Gamma(v)/Gamma(u+v) via log-gamma.
// Throws on nonpositive arguments.
double beta_integral(double u, double v);

// Adaptive 1-D quadrature (nested Gauss-Legendre 7/15 pairs, bisection).
// Integrable endpoint singularities are handled by the subdivision.
double integrate_1d(const std::function<double(double)>& fn, double a, double b,
                    double rel_tol = 1e-11, int max_depth = 52);

}  // namespace grunbaum
