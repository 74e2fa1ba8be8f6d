#include "grunbaum/geom.hpp"

#include <cmath>
#include <stdexcept>

namespace grunbaum {

Subspace::Subspace(int ambient_dim, Mat basis) : ambient_(ambient_dim), basis_(std::move(basis)) {
  if (ambient_ < 1) throw std::invalid_argument("Subspace: ambient dimension must be >= 1");
  if (basis_.size() > 0 && basis_.rows() != ambient_)
    throw std::invalid_argument("Subspace: basis rows do not match ambient dimension");
  if (basis_.size() == 0) basis_.resize(ambient_, 0);
  if (orthonormality_defect() > 1e-9)
    throw std::invalid_argument("Subspace: basis is not orthonormal");
}

Subspace Subspace::full(int n) { return Subspace(n, Mat::Identity(n, n)); }

Subspace Subspace::zero(int n) { return Subspace(n, Mat(n, 0)); }

Vec Subspace::project(const Vec& x) const {
  if (x.size() != ambient_) throw std::invalid_argument("Subspace::project: dimension mismatch");
  if (dim() == 0) return Vec::Zero(ambient_);
  return basis_ * (basis_.transpose() * x);
}

Vec Subspace::coords(const Vec& x) const {
  if (x.size() != ambient_) throw std::invalid_argument("Subspace::coords: dimension mismatch");
  Vec c = basis_.transpose() * x;
  double resid = (x - basis_ * c).norm();
  if (resid > tol::in_subspace * std::max(1.0, x.norm()))
    throw std::invalid_argument("Subspace::coords: point does not lie in the subspace");
  return c;
}

Vec Subspace::lift(const Vec& c) const {
  if (c.size() != dim()) throw std::invalid_argument("Subspace::lift: dimension mismatch");
  if (dim() == 0) return Vec::Zero(ambient_);
  return basis_ * c;
}

bool Subspace::contains(const Vec& x, double tolerance) const {
  if (x.size() != ambient_) return false;
  Vec r = x - project(x);
  return r.norm() <= tolerance * std::max(1.0, x.norm());
}

double Subspace::orthonormality_defect() const {
  if (dim() == 0) return 0.0;
  Mat g = basis_.transpose() * basis_ - Mat::Identity(dim(), dim());
  return g.cwiseAbs().maxCoeff();
}

Subspace orthonormalize(const std::vector<Vec>& spanning) {
  if (spanning.empty()) throw std::invalid_argument("orthonormalize: empty input");
  const int n = static_cast<int>(spanning.front().size());
  for (const Vec& v : spanning)
    if (v.size() != n) throw std::invalid_argument("orthonormalize: mixed ambient dimensions");

  std::vector<Vec> basis;
  basis.reserve(spanning.size());
  for (const Vec& v : spanning) {
    double scale = std::max(1.0, v.norm());
    Vec u = v;
    // Two MGS passes keep the defect near machine precision.
    for (int pass = 0; pass < 2; ++pass)
      for (const Vec& b : basis) u -= b.dot(u) * b;
    if (u.norm() < tol::rank * scale) continue;  // dependent, drop
    basis.push_back(u / u.norm());
  }
  if (basis.empty()) throw std::invalid_argument("orthonormalize: all vectors numerically zero");

  Mat B(n, static_cast<int>(basis.size()));
  for (int j = 0; j < B.cols(); ++j) B.col(j) = basis[j];
  return Subspace(n, std::move(B));
}

Subspace complement(const Subspace& E) {
  const int n = E.ambient_dim();
  const int k = E.dim();
  if (k == n) return Subspace::zero(n);
  std::vector<Vec> span;
  span.reserve(n + k);
  for (int j = 0; j < k; ++j) span.push_back(E.basis_vector(j));
  for (int i = 0; i < n; ++i) span.push_back(unit_vector(n, i));
  Subspace extended = orthonormalize(span);
  // Vectors appended after E's basis are orthogonal to E.
  Mat B(n, extended.dim() - k);
  for (int j = k; j < extended.dim(); ++j) B.col(j - k) = extended.basis_vector(j);
  return Subspace(n, std::move(B));
}

Vec project_point(const Vec& x, const Subspace& E) { return E.project(x); }

Vec coords_in(const Vec& x, const Subspace& E) { return E.coords(x); }

Vec lift(const Vec& c, const Subspace& E) { return E.lift(c); }

Subspace span_with(const Vec& theta, const Subspace& E) {
  if (theta.size() != E.ambient_dim())
    throw std::invalid_argument("span_with: dimension mismatch");
  std::vector<Vec> span;
  span.reserve(E.dim() + 1);
  for (int j = 0; j < E.dim(); ++j) span.push_back(E.basis_vector(j));
  span.push_back(theta);
  return orthonormalize(span);
}

Vec unit_vector(int n, int i) {
  Vec e = Vec::Zero(n);
  e[i] = 1.0;
  return e;
}

}  // namespace grunbaum
