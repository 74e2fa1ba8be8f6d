#include "grunbaum/polytope.hpp"

#include <cmath>
#include <random>

#include "doctest.h"
#include "grunbaum/geom.hpp"
#include "test_helpers.hpp"

using namespace grunbaum;
using grunbaum::testing::gaussian_cloud;
using grunbaum::testing::gaussian_vec;
using grunbaum::testing::random_unit;
using grunbaum::testing::vec;

namespace {

std::vector<Vec> cube_corners(int n, double lo = 0.0, double hi = 1.0) {
  std::vector<Vec> pts;
  for (int mask = 0; mask < (1 << n); ++mask) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = (mask >> i) & 1 ? hi : lo;
    pts.push_back(v);
  }
  return pts;
}

// Hit-or-miss Monte Carlo volume oracle, independent of the triangulation path.
std::pair<double, double> mc_volume(const VPolytope& P, int samples, unsigned seed) {
  std::mt19937_64 rng(seed);
  const int n = P.ambient_dim();
  Vec lo = P.vertices().front(), hi = lo;
  for (const Vec& v : P.vertices()) {
    lo = lo.cwiseMin(v);
    hi = hi.cwiseMax(v);
  }
  double box = 1.0;
  for (int i = 0; i < n; ++i) box *= (hi[i] - lo[i]);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int hits = 0;
  for (int s = 0; s < samples; ++s) {
    Vec x(n);
    for (int i = 0; i < n; ++i) x[i] = lo[i] + (hi[i] - lo[i]) * u(rng);
    if (P.contains(x)) ++hits;
  }
  double p = static_cast<double>(hits) / samples;
  double sigma = box * std::sqrt(std::max(p * (1.0 - p), 1e-12) / samples);
  return {box * p, sigma};
}

}  // namespace

TEST_CASE("hull drops interior points: cube corners plus center") {
  auto pts = cube_corners(3);
  pts.push_back(vec({0.5, 0.5, 0.5}));
  VPolytope P = VPolytope::hull(pts);
  CHECK(P.vertices().size() == 8);
  CHECK(P.intrinsic_dim() == 3);
  CHECK(P.volume() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("hull of collinear points is a segment") {
  VPolytope P = VPolytope::hull({vec({0, 0}), vec({1, 1}), vec({2, 2})});
  CHECK(P.intrinsic_dim() == 1);
  CHECK(P.vertices().size() == 2);
  CHECK(P.volume() == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("hull error cases") {
  CHECK_THROWS_AS(VPolytope::hull({vec({1, 2})}), std::invalid_argument);
  CHECK_THROWS_AS(VPolytope::hull({vec({1, 2}), vec({1, 2})}), std::invalid_argument);
}

TEST_CASE("hull of random points in the unit ball stays in the ball") {
  std::mt19937_64 rng(5);
  std::vector<Vec> pts;
  for (int i = 0; i < 50; ++i) {
    Vec v = gaussian_vec(3, rng);
    double r = std::pow(std::uniform_real_distribution<double>(0, 1)(rng), 1.0 / 3.0);
    pts.push_back(r * v / v.norm());
  }
  VPolytope P = VPolytope::hull(pts);
  CHECK(P.intrinsic_dim() == 3);
  CHECK(P.volume() < unit_ball_volume(3));
  for (const Vec& v : P.vertices()) CHECK(v.norm() <= 1.0 + 1e-12);
  // Monte Carlo containment agreement.
  auto [est, sigma] = mc_volume(P, 200000, 99);
  CHECK(std::abs(est - P.volume()) < 4.0 * sigma);
}

TEST_CASE("cube face-diagonal crossings do not become vertices after clip") {
  VPolytope cube = VPolytope::hull(cube_corners(3));
  VPolytope half = clip(cube, Halfspace{vec({1, 0, 0}), 0.5});
  CHECK(half.volume() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(half.vertices().size() == 8);
}

TEST_CASE("clip keeps the polytope when fully inside") {
  VPolytope cube = VPolytope::hull(cube_corners(3));
  VPolytope same = clip(cube, Halfspace{vec({1, 0, 0}), -1.0});
  CHECK(same.volume() == doctest::Approx(1.0).epsilon(1e-12));
  VPolytope none = clip(cube, Halfspace{vec({1, 0, 0}), 2.0});
  CHECK(none.is_empty());
  CHECK(none.volume() == 0.0);
}

TEST_CASE("equality triangle clip reproduces the 4/9 ratio") {
  VPolytope tri = VPolytope::hull({vec({-1.0 / 3, 1}), vec({-1.0 / 3, -1}), vec({2.0 / 3, 0})});
  CHECK(tri.volume() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(tri.centroid().norm() < 1e-12);
  VPolytope cut = clip(tri, Halfspace{vec({1, 0}), 0.0});
  CHECK(cut.volume() == doctest::Approx(4.0 / 9.0).epsilon(1e-12));
}

TEST_CASE("section: cube by a plane") {
  VPolytope cube = VPolytope::hull(cube_corners(3));
  auto S = orthonormalize({vec({1, 0, 0}), vec({0, 1, 0})});
  VPolytope sq = section(cube, vec({0, 0, 0.5}), S);
  CHECK(sq.ambient_dim() == 2);
  CHECK(sq.intrinsic_dim() == 2);
  CHECK(sq.volume() == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(sq.vertices().size() == 4);
}

TEST_CASE("section: cube by the hexagon plane matches the closed form") {
  VPolytope cube = VPolytope::hull(cube_corners(3));
  Vec normal = vec({1, 1, 1}) / std::sqrt(3.0);
  auto S = complement(orthonormalize({normal}));
  Vec p0 = vec({0.5, 0.5, 0.5});
  VPolytope hex = section(cube, p0, S);
  CHECK(hex.intrinsic_dim() == 2);
  CHECK(hex.vertices().size() == 6);
  // Regular hexagon with side sqrt(2)/2: area = 3*sqrt(3)/2 * s^2 = 3*sqrt(3)/4.
  CHECK(hex.volume() == doctest::Approx(3.0 * std::sqrt(3.0) / 4.0).epsilon(1e-9));
}

TEST_CASE("section through a single vertex is a point of volume zero") {
  VPolytope cube = VPolytope::hull(cube_corners(3));
  auto S = complement(orthonormalize({vec({1, 1, 1}) / std::sqrt(3.0)}));
  VPolytope pt = section(cube, vec({0, 0, 0}), S);
  CHECK(!pt.is_empty());
  CHECK(pt.intrinsic_dim() == 0);
  CHECK(pt.volume() == 0.0);
}

TEST_CASE("volume and centroid basics") {
  VPolytope cube = VPolytope::hull(cube_corners(3));
  CHECK(cube.volume() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK((cube.centroid() - vec({0.5, 0.5, 0.5})).norm() < 1e-12);

  VPolytope tri = VPolytope::hull({vec({0, 0}), vec({1, 0}), vec({0, 1})});
  CHECK(tri.volume() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK((tri.centroid() - vec({1.0 / 3, 1.0 / 3})).norm() < 1e-12);

  CHECK(VPolytope::empty(3).volume() == 0.0);
  CHECK_THROWS_AS(VPolytope::empty(3).centroid(), std::invalid_argument);
}

TEST_CASE("triangulation simplices sum to the volume") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    VPolytope P = VPolytope::hull(gaussian_cloud(4, 20, rng));
    double sum = 0.0;
    for (const auto& s : P.triangulation()) {
      std::vector<Vec> corners;
      for (int v : s) corners.push_back(P.vertex_chart(v));
      sum += simplex_volume(corners);
    }
    CHECK(sum == doctest::Approx(P.volume()).epsilon(1e-9));
  }
}

TEST_CASE("support and radial functions") {
  VPolytope cube = VPolytope::hull(cube_corners(3, -1.0, 1.0));
  CHECK(cube.support(vec({1, 0, 0})) == doctest::Approx(1.0));
  // h is positively homogeneous of degree 1.
  CHECK(cube.support(2.5 * vec({1, 0, 0})) == doctest::Approx(2.5));
  CHECK(cube.radial(vec({1, 0, 0})) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(cube.radial(vec({1, 1, 1}).normalized()) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));

  // Equality cone for the support-function bound in R2.
  Vec theta = vec({1, 0});
  VPolytope cone =
      VPolytope::hull({vec({-2.0 / 3, 1}), vec({-2.0 / 3, -1}), vec({1.0 / 3, 0})});
  double h_plus = cone.support(theta), h_minus = cone.support(-theta);
  CHECK(h_plus == doctest::Approx(1.0 / 3).epsilon(1e-12));
  CHECK(h_minus == doctest::Approx(2.0 / 3).epsilon(1e-12));
  CHECK(h_plus / (h_plus + h_minus) == doctest::Approx(1.0 / 3).epsilon(1e-12));

  // Radial of a regular 64-gon is close to 1 everywhere.
  std::vector<Vec> gon;
  for (int i = 0; i < 64; ++i)
    gon.push_back(vec({std::cos(2 * M_PI * i / 64), std::sin(2 * M_PI * i / 64)}));
  VPolytope ball = VPolytope::hull(gon);
  std::mt19937_64 rng(31);
  for (int i = 0; i < 20; ++i) {
    Vec u = random_unit(2, rng);
    CHECK(ball.radial(u) == doctest::Approx(1.0).epsilon(5e-3));
  }

  VPolytope offcube = VPolytope::hull(cube_corners(3, 1.0, 2.0));
  CHECK_THROWS_AS(offcube.radial(vec({1, 0, 0})), std::invalid_argument);
}

TEST_CASE("projection of bodies") {
  VPolytope cube = VPolytope::hull(cube_corners(3));
  auto E = orthonormalize({vec({1, 0, 0}), vec({0, 1, 0})});
  VPolytope sq = project(cube, E);
  CHECK(sq.ambient_dim() == 2);
  CHECK(sq.volume() == doctest::Approx(1.0).epsilon(1e-12));

  VPolytope simplex = VPolytope::hull({vec({0, 0, 0}), vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})});
  VPolytope seg = project(simplex, orthonormalize({vec({1, 0, 0})}));
  CHECK(seg.intrinsic_dim() == 1);
  CHECK(seg.volume() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("clip partitions volume") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    VPolytope P = VPolytope::hull(gaussian_cloud(n, n + 6 + static_cast<int>(rng() % 8), rng));
    Vec u = random_unit(n, rng);
    double c = 0.3 * std::normal_distribution<double>(0, 1)(rng);
    double vplus = clip(P, Halfspace{u, c}).volume();
    double vminus = clip(P, Halfspace{-u, -c}).volume();
    CHECK(vplus + vminus == doctest::Approx(P.volume()).epsilon(1e-9));
  }
}

TEST_CASE("translation equivariance of the centroid") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    VPolytope P = VPolytope::hull(gaussian_cloud(3, 12, rng));
    Vec t = gaussian_vec(3, rng);
    VPolytope Q = translate(P, t);
    CHECK((Q.centroid() - P.centroid() - t).norm() < 1e-10);
    CHECK(Q.volume() == doctest::Approx(P.volume()).epsilon(1e-10));
  }
}

TEST_CASE("centroid lies inside the body") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    VPolytope P = VPolytope::hull(gaussian_cloud(3, 15, rng));
    CHECK(P.contains(P.centroid()));
    VPolytope C = translate(P, -P.centroid());
    CHECK(C.radial(random_unit(3, rng)) > 0.0);
  }
}

TEST_CASE("Monte Carlo volume and centroid agreement in R3 and R4") {
  std::mt19937_64 rng(53);
  for (int n : {3, 4}) {
    VPolytope P = VPolytope::hull(gaussian_cloud(n, 14, rng));
    auto [est, sigma] = mc_volume(P, 1000000, 101 + n);
    CHECK(std::abs(est - P.volume()) < 4.0 * sigma);
  }
}

TEST_CASE("Brunn-Minkowski: slice volumes^(1/(n-1)) are midpoint concave") {
  std::mt19937_64 rng(59);
  VPolytope P = VPolytope::hull(gaussian_cloud(3, 20, rng));
  Vec theta = random_unit(3, rng);
  auto S = complement(orthonormalize({theta}));
  auto slice_vol = [&](double t) {
    VPolytope s = section(P, t * theta, S);
    return s.is_empty() || s.intrinsic_dim() < 2 ? 0.0 : s.volume();
  };
  double lo = -P.support(-theta), hi = P.support(theta);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  int checked = 0;
  for (int i = 0; i < 50; ++i) {
    double t1 = lo + (hi - lo) * u(rng), t2 = lo + (hi - lo) * u(rng);
    double a = slice_vol(t1), b = slice_vol(t2), m = slice_vol(0.5 * (t1 + t2));
    if (a <= 0.0 || b <= 0.0) continue;
    ++checked;
    double p = 1.0 / 2.0;  // 1/(n-1) with n = 3
    CHECK(std::pow(m, p) >= 0.5 * (std::pow(a, p) + std::pow(b, p)) - 1e-8);
  }
  CHECK(checked > 10);
}

TEST_CASE("steiner symmetrization of a symmetric cube") {
  VPolytope cube = VPolytope::hull(cube_corners(3, -1.0, 1.0));
  auto E = orthonormalize({vec({1, 0, 0}), vec({0, 1, 0})});
  SteinerBody sb = steiner_symmetrize(cube, E);
  CHECK(sb.fiber_dim == 1);
  // Fibers all have length 2, so r = 1 across the interior.
  for (std::size_t i = 0; i < sb.radii.size(); ++i) {
    CHECK(sb.radii[i] == doctest::Approx(1.0).epsilon(1e-9));
  }
  CHECK(sb.volume() == doctest::Approx(cube.volume()).epsilon(1e-6));
}

TEST_CASE("steiner symmetrization preserves mass and the E-slice") {
  std::mt19937_64 rng(61);
  VPolytope P = VPolytope::hull(gaussian_cloud(3, 16, rng));
  auto E = orthonormalize({gaussian_vec(3, rng), gaussian_vec(3, rng)});
  SteinerBody sb = steiner_symmetrize(P, E);

  // The slice of the symmetrized body by E is K|E; clipping both by a random
  // halfspace through the origin of E gives matching areas.
  VPolytope shadow = project(P, E);
  Vec theta2 = random_unit(2, rng);
  double a1 = clip(sb.profile, Halfspace{theta2, 0.0}).volume();
  double a2 = clip(shadow, Halfspace{theta2, 0.0}).volume();
  CHECK(a1 == doctest::Approx(a2).epsilon(1e-6));

  CHECK(sb.volume() == doctest::Approx(P.volume()).epsilon(1e-2));
}

TEST_CASE("mesh refinement stays conforming and preserves volume") {
  VPolytope cube = VPolytope::hull(cube_corners(3));
  Mesh m = mesh_from_polytope(cube);
  double before = m.total_volume();
  refine_mesh(m, 0.3);
  CHECK(m.max_edge_length() <= 0.3 + 1e-12);
  CHECK(m.total_volume() == doctest::Approx(before).epsilon(1e-12));
}
