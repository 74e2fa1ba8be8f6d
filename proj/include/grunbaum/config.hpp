#pragma once

#include <cstddef>

namespace grunbaum {

// Numerical tolerances shared across the library. Stated once, reused
// everywhere so tests and implementation cannot drift apart.
namespace tol {

// Residual norm below which a spanning vector is considered dependent.
inline constexpr double rank = 1e-10;

// Maximum allowed orthonormality defect of a produced frame.
inline constexpr double ortho = 1e-12;

// Membership / clipping tolerance for points on hyperplanes.
inline constexpr double clip = 1e-10;

// Simplices below this d-volume are discarded from triangulations.
inline constexpr double simplex_volume = 1e-14;

// Tolerance for "point lies in subspace" checks (coords_in).
inline constexpr double in_subspace = 1e-9;

}  // namespace tol

// Ball approximant vertex budgets per intrinsic dimension, and the widened
// tolerances that go with them. dim 1 is an exact segment.
struct BallApproxConfig {
  int dim2_vertices = 64;   // regular polygon
  int dim3_vertices = 162;  // icosphere, two subdivisions
};

// Quadrature configuration for powered piecewise-linear profiles.
struct QuadratureConfig {
  int gm_degree_lo = 7;   // Grundmann-Moller, exact for degree-7 polynomials
  int gm_degree_hi = 9;   // comparison rule
  double rel_tol = 1e-8;  // disagreement threshold triggering a split
  int max_splits = 1;     // one-level subdivision
};

// Sampling configuration for the slice-affinization construction.
struct AffinizeConfig {
  int max_base_samples = 2000;
  int coarse_grid = 32;       // grid for the inner 1-D maximization
  double golden_tol = 1e-10;  // refinement tolerance in a
};

struct DefaultConfig {
  BallApproxConfig ball;
  QuadratureConfig quad;
  AffinizeConfig affinize;
  double mesh_edge_factor = 0.05;  // refine to edge length <= factor * diam
};

inline const DefaultConfig& default_config() {
  static const DefaultConfig cfg{};
  return cfg;
}

}  // namespace grunbaum
