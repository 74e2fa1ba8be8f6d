#include "grunbaum/extremal.hpp"

#include <array>
#include <cmath>
#include <map>
#include <stdexcept>

namespace grunbaum {

namespace {

void check_nk(int n, int k) {
  if (n < 1 || k < 1 || k > n)
    throw std::invalid_argument("bound: require 1 <= k <= n");
}

Vec require_unit(const Vec& v, const char* what) {
  if (std::abs(v.norm() - 1.0) > 1e-9)
    throw std::invalid_argument(std::string(what) + ": expected a unit vector");
  return v;
}

// Orthonormal basis of E cap theta-perp (theta in E).
Subspace within_perp(const Subspace& E, const Vec& theta) {
  std::vector<Vec> inside;
  inside.push_back(theta);
  for (int j = 0; j < E.dim(); ++j) inside.push_back(E.basis_vector(j));
  Subspace extended = orthonormalize(inside);
  Mat perp_basis(E.ambient_dim(), extended.dim() - 1);
  for (int j = 1; j < extended.dim(); ++j) perp_basis.col(j - 1) = extended.basis_vector(j);
  return Subspace(E.ambient_dim(), std::move(perp_basis));
}

void icosahedron(std::vector<Vec>& verts, std::vector<std::array<int, 3>>& faces) {
  const double phi = 0.5 * (1.0 + std::sqrt(5.0));
  auto mk = [](double x, double y, double z) {
    Vec v(3);
    v << x, y, z;
    return Vec(v.normalized());
  };
  verts = {mk(-1, phi, 0), mk(1, phi, 0), mk(-1, -phi, 0), mk(1, -phi, 0),
           mk(0, -1, phi), mk(0, 1, phi), mk(0, -1, -phi), mk(0, 1, -phi),
           mk(phi, 0, -1), mk(phi, 0, 1), mk(-phi, 0, -1), mk(-phi, 0, 1)};
  faces = {{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
           {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
           {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
           {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
}

std::vector<Vec> icosphere_vertices(int min_vertices) {
  std::vector<Vec> verts;
  std::vector<std::array<int, 3>> faces;
  icosahedron(verts, faces);
  while (static_cast<int>(verts.size()) < min_vertices) {
    std::map<std::pair<int, int>, int> midpoint;
    auto mid = [&](int a, int b) {
      auto key = std::minmax(a, b);
      auto it = midpoint.find(key);
      if (it != midpoint.end()) return it->second;
      int id = static_cast<int>(verts.size());
      verts.push_back(Vec((0.5 * (verts[a] + verts[b])).normalized()));
      midpoint[key] = id;
      return id;
    };
    std::vector<std::array<int, 3>> next;
    next.reserve(faces.size() * 4);
    for (const auto& f : faces) {
      int ab = mid(f[0], f[1]), bc = mid(f[1], f[2]), ca = mid(f[2], f[0]);
      next.push_back({f[0], ab, ca});
      next.push_back({f[1], bc, ab});
      next.push_back({f[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    faces = std::move(next);
  }
  return verts;
}

}  // namespace

double grunbaum_bound(int n, int k) {
  check_nk(n, k);
  return std::pow(static_cast<double>(k) / (n + 1), k);
}

double functional_bound(int n, int k, double gamma) {
  check_nk(n, k);
  if (!(gamma > 0.0)) throw std::invalid_argument("functional_bound: gamma must be positive");
  const double base = (k * gamma + 1.0) / ((n + 1) * gamma + 1.0);
  return std::pow(base, (k * gamma + 1.0) / gamma);
}

double theorem_bound(int n, double gamma) { return functional_bound(n, 1, gamma); }

VPolytope ball_approx(const Subspace& S, int vertex_budget, const BallApproxConfig& cfg) {
  const int m = S.dim();
  const int n = S.ambient_dim();
  if (m == 0) return VPolytope::from_points({Vec(Vec::Zero(n))});
  if (m == 1) {
    Vec b = S.basis_vector(0);
    return VPolytope::hull({b, Vec(-b)});
  }
  if (m == 2) {
    const int count = vertex_budget > 0 ? vertex_budget : cfg.dim2_vertices;
    std::vector<Vec> pts;
    pts.reserve(count);
    for (int j = 0; j < count; ++j) {
      double a = 2.0 * M_PI * j / count;
      Vec c(2);
      c << std::cos(a), std::sin(a);
      pts.push_back(S.lift(c));
    }
    return VPolytope::hull(pts);
  }
  if (m == 3) {
    const int count = vertex_budget > 0 ? vertex_budget : cfg.dim3_vertices;
    std::vector<Vec> pts;
    for (const Vec& v : icosphere_vertices(count)) pts.push_back(S.lift(v));
    return VPolytope::hull(pts);
  }
  throw std::invalid_argument("ball_approx: only dimensions 0..3 are supported");
}

GammaFunction theorem_equality_function(int n, double gamma, const Vec& theta, const Vec& xi,
                                        double m, double r, const VPolytope& D) {
  if (!(gamma > 0.0) || !(m > 0.0) || !(r > 0.0))
    throw std::invalid_argument("theorem_equality_function: gamma, m, r must be positive");
  require_unit(theta, "theta");
  require_unit(xi, "xi");
  const double tx = theta.dot(xi);
  if (!(tx > 0.0)) throw std::invalid_argument("theorem_equality_function: <theta,xi> <= 0");
  if (theta.size() != n) throw std::invalid_argument("theorem_equality_function: bad dimension");

  std::vector<Vec> pts;
  Vec apex = -(n * gamma / (gamma + 1.0)) * r * theta;
  pts.push_back(apex);
  double base_volume = 1.0;
  if (n == 1) {
    if (!D.is_empty() && D.intrinsic_dim() != 0)
      throw std::invalid_argument("theorem_equality_function: D must be a point when n = 1");
    pts.push_back(r * theta);
  } else {
    if (D.is_empty() || D.intrinsic_dim() != n - 1)
      throw std::invalid_argument("theorem_equality_function: D must be (n-1)-dimensional");
    if (D.centroid().norm() > 1e-6 * std::max(1.0, D.diameter()))
      throw std::invalid_argument("theorem_equality_function: D is not centered");
    for (const Vec& v : D.vertices()) {
      if (std::abs(v.dot(xi)) > 1e-9 * std::max(1.0, v.norm()))
        throw std::invalid_argument("theorem_equality_function: D must lie in xi-perp");
      pts.push_back(r * theta + v);
    }
    base_volume = D.volume();
  }
  VPolytope K = VPolytope::hull(pts);
  GammaFunction f(gamma, m, std::move(K), AffineProfile{Vec(-xi), r * tx});
  f.set_cone(ConeStructure{apex, r * theta, base_volume, xi});
  return f;
}

double closed_form_centroid(int n, double gamma, double r0, double r1) {
  if (!(gamma > 0.0)) throw std::invalid_argument("closed_form_centroid: gamma must be positive");
  if (!(r0 < r1)) throw std::invalid_argument("closed_form_centroid: require r0 < r1");
  return (n * gamma * r1 + (gamma + 1.0) * r0) / ((n + 1) * gamma + 1.0);
}

VPolytope sections_equality_body(int n, int k, const Vec& z, const VPolytope& D0,
                                 const VPolytope& D1) {
  check_nk(n, k);
  if (z.size() != n) throw std::invalid_argument("sections_equality_body: bad dimension");

  // U = span of D0's points (inside E cap theta-perp); theta ~ z - proj_U(z).
  std::vector<Vec> u_span;
  if (!D0.is_empty())
    for (const Vec& v : D0.vertices())
      if (v.norm() > 1e-12) u_span.push_back(v);
  Vec theta = z;
  const int d0 = D0.is_empty() ? 0 : D0.intrinsic_dim();
  if (d0 != k - 1)
    throw std::invalid_argument("sections_equality_body: D0 has the wrong dimension");
  if (!u_span.empty()) {
    Subspace U = orthonormalize(u_span);
    theta = z - U.project(z);
  }
  if (theta.norm() < 1e-10)
    throw std::invalid_argument("sections_equality_body: z lies in the span of D0");
  theta /= theta.norm();

  const int d1 = D1.is_empty() ? 0 : D1.intrinsic_dim();
  if (d1 != n - k)
    throw std::invalid_argument("sections_equality_body: D1 has the wrong dimension");
  if (d1 > 0 && D1.centroid().norm() > 1e-6 * std::max(1.0, D1.diameter()))
    throw std::invalid_argument("sections_equality_body: D1 is not centered");

  // span(E, F) must be all of R^n.
  std::vector<Vec> all_dirs = u_span;
  all_dirs.push_back(z);
  if (!D1.is_empty())
    for (std::size_t i = 1; i < D1.vertices().size(); ++i)
      all_dirs.push_back(D1.vertices()[i] - D1.vertices()[0]);
  if (orthonormalize(all_dirs).dim() != n)
    throw std::invalid_argument("sections_equality_body: span(E, F) is not R^n");

  const double c = static_cast<double>(n - k + 1) / k;
  std::vector<Vec> pts;
  if (D0.is_empty() || d0 == 0) {
    Vec v0 = D0.is_empty() ? Vec(Vec::Zero(n)) : D0.vertices().front();
    pts.push_back(-c * z + v0);
  } else {
    for (const Vec& v : D0.vertices()) pts.push_back(-c * z + v);
  }
  if (D1.is_empty() || d1 == 0) {
    pts.push_back(z);
  } else {
    for (const Vec& v : D1.vertices()) pts.push_back(z + v);
  }
  return VPolytope::hull(pts);
}

VPolytope projections_equality_body(int n, int k, const Vec& theta, const Subspace& E,
                                    int vertex_budget, const BallApproxConfig& cfg) {
  check_nk(n, k);
  require_unit(theta, "theta");
  if (E.dim() != k || E.ambient_dim() != n)
    throw std::invalid_argument("projections_equality_body: E must be a k-subspace of R^n");
  if (!E.contains(theta, 1e-9))
    throw std::invalid_argument("projections_equality_body: theta must lie in E");

  VPolytope Bk = ball_approx(within_perp(E, theta), vertex_budget, cfg);
  VPolytope Bnk = ball_approx(complement(E), vertex_budget, cfg);

  const double t_hi = static_cast<double>(k) / (n + 1);
  const double t_lo = t_hi - 1.0;
  std::vector<Vec> pts;
  for (const Vec& v : Bk.vertices()) pts.push_back(t_lo * theta + v);
  for (const Vec& v : Bnk.vertices()) pts.push_back(t_hi * theta + v);
  return VPolytope::hull(pts);
}

GammaFunction corollary_equality_function(int n, int k, double gamma, const Vec& theta,
                                          const Subspace& E, int vertex_budget,
                                          const BallApproxConfig& cfg) {
  check_nk(n, k);
  if (!(gamma > 0.0))
    throw std::invalid_argument("corollary_equality_function: gamma must be positive");
  require_unit(theta, "theta");
  if (E.dim() != k || !E.contains(theta, 1e-9))
    throw std::invalid_argument("corollary_equality_function: theta must lie in the k-subspace E");

  // The Etilde-marginal is the 1-D equality datum with r = 1 for the induced
  // concavity gt = gamma/((k-1)gamma+1); the apex offset therefore carries
  // (n-k+1) gt/(gt+1) = (n-k+1) gamma/(k gamma + 1).
  const double apex_factor = (n - k + 1) * gamma / (k * gamma + 1.0);
  const double v0 = -apex_factor;

  std::vector<Vec> pts;
  if (k == 1) {
    pts.push_back(v0 * theta);
  } else {
    VPolytope Bk = ball_approx(within_perp(E, theta), vertex_budget, cfg);
    const double delta =
        (1.0 + apex_factor) * std::pow(Bk.volume(), -1.0 / static_cast<double>(k - 1));
    for (const Vec& v : Bk.vertices()) pts.push_back(v0 * theta + delta * v);
  }
  VPolytope Bnk = ball_approx(complement(E), vertex_budget, cfg);
  for (const Vec& v : Bnk.vertices()) pts.push_back(theta + v);

  VPolytope K = VPolytope::hull(pts);
  return GammaFunction(gamma, 1.0, std::move(K), AffineProfile{Vec(-theta), 1.0});
}

}  // namespace grunbaum
