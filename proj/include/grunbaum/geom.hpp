#pragma once

#include <Eigen/Dense>
#include <vector>

#include "grunbaum/config.hpp"

namespace grunbaum {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// A k-dimensional linear subspace of R^n held as an orthonormal frame.
// Immutable after construction; all operations are pure.
class Subspace {
 public:
  // basis columns must already be orthonormal within tol::ortho.
  Subspace(int ambient_dim, Mat basis);

  static Subspace full(int ambient_dim);
  static Subspace zero(int ambient_dim);

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.cols()); }
  const Mat& basis() const { return basis_; }
  Vec basis_vector(int i) const { return basis_.col(i); }

  // Orthogonal projection of x onto the subspace (ambient coordinates).
  Vec project(const Vec& x) const;
  // Coordinates of x in the frame; throws if x is not in the subspace.
  Vec coords(const Vec& x) const;
  // Frame coordinates without the membership check.
  Vec coords_unchecked(const Vec& x) const { return basis_.transpose() * x; }
  // Ambient point with the given frame coordinates.
  Vec lift(const Vec& c) const;

  bool contains(const Vec& x, double tolerance = tol::in_subspace) const;

  // max |<b_i,b_j> - delta_ij|.
  double orthonormality_defect() const;

 private:
  int ambient_;
  Mat basis_;
};

// Modified Gram-Schmidt with a re-orthogonalization pass. Dependent vectors
// (residual norm < tol::rank) are dropped. Throws on empty input or when all
// vectors are numerically zero.
Subspace orthonormalize(const std::vector<Vec>& spanning);

// Orthogonal complement; k = n yields the zero-dimensional subspace.
Subspace complement(const Subspace& E);

Vec project_point(const Vec& x, const Subspace& E);

// Coordinates of x in E's frame; x must lie in E within tol::in_subspace.
Vec coords_in(const Vec& x, const Subspace& E);

Vec lift(const Vec& c, const Subspace& E);

// span(E u {theta}); dimension is unchanged when theta already lies in E.
Subspace span_with(const Vec& theta, const Subspace& E);

// Convenience: i-th standard basis vector of R^n.
Vec unit_vector(int n, int i);

}  // namespace grunbaum
