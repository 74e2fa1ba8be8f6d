#include "grunbaum/gamma_function.hpp"

#include <cmath>

#include "doctest.h"
#include "grunbaum/quadrature.hpp"
#include "test_helpers.hpp"

using namespace grunbaum;
using grunbaum::testing::vec;

namespace {

// 1-D prototype f(s) = (1 - s)_+ on [-1/2, 1] with gamma.
GammaFunction line_function(double gamma) {
  VPolytope seg = VPolytope::hull({vec({-0.5}), vec({1.0})});
  return GammaFunction(gamma, 1.0, seg, AffineProfile{vec({-1.0}), 1.0});
}

GammaFunction cube_indicator(int n, double lo = 0.0, double hi = 1.0) {
  std::vector<Vec> pts;
  for (int mask = 0; mask < (1 << n); ++mask) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = (mask >> i) & 1 ? hi : lo;
    pts.push_back(v);
  }
  VPolytope cube = VPolytope::hull(pts);
  Mesh mesh = mesh_from_polytope(cube);
  std::vector<double> ones(mesh.points.size(), 1.0);
  return GammaFunction(1.0, 1.0, cube, mesh, ones);
}

// Closed-form 1-D oracle for integral of (1-s) over [a, b] within [-1/2, 1].
double line_oracle(double a, double b) {
  a = std::max(a, -0.5);
  b = std::min(b, 1.0);
  if (b <= a) return 0.0;
  auto anti = [](double s) { return s - 0.5 * s * s; };
  return anti(b) - anti(a);
}

}  // namespace

TEST_CASE("evaluate basics") {
  GammaFunction f = line_function(1.0);
  CHECK(f.evaluate(vec({0.0})) == doctest::Approx(1.0));
  CHECK(f.evaluate(vec({0.5})) == doctest::Approx(0.5));
  CHECK(f.evaluate(vec({2.0})) == 0.0);
  CHECK(f.evaluate(vec({-0.6})) == 0.0);

  // gamma = 2: profile 4 evaluates to m * 4^(1/2).
  VPolytope seg = VPolytope::hull({vec({-1.0}), vec({1.0})});
  GammaFunction g(2.0, 3.0, seg, AffineProfile{vec({0.0}), 4.0});
  CHECK(g.evaluate(vec({0.0})) == doctest::Approx(6.0));
}

TEST_CASE("ray_integral against the 1-D closed form") {
  GammaFunction f = line_function(1.0);
  Vec theta = vec({1.0});
  CHECK(ray_integral(f, theta, 0.0) == doctest::Approx(0.5).epsilon(1e-12));
  double full = ray_integral(f, theta, -1e30);
  CHECK(full == doctest::Approx(9.0 / 8).epsilon(1e-12));
  CHECK(ray_integral(f, theta, 0.0) / full == doctest::Approx(4.0 / 9).epsilon(1e-12));
  CHECK(ray_integral(f, theta, 2.0) == 0.0);
  CHECK(full == doctest::Approx(line_oracle(-0.5, 1.0)).epsilon(1e-12));

  // Additivity.
  for (double t1 : {-0.3, 0.2, 0.7}) {
    double split = ray_integral(f, theta, -1e30) - ray_integral(f, theta, t1);
    CHECK(split == doctest::Approx(line_oracle(-0.5, t1)).epsilon(1e-12));
  }
}

TEST_CASE("ray_integral through a 3-D mesh matches fiber volume slices") {
  GammaFunction f = cube_indicator(3);
  Vec start = vec({0.2, 0.3, 0.4});
  Vec dir = vec({1.0, 0.0, 0.0});
  // Indicator along this ray: length of [0.2, 1] from t0 = 0.
  CHECK(ray_integral_from(f, start, dir, 0.0) == doctest::Approx(0.8).epsilon(1e-10));
  Vec diag = vec({1.0, 1.0, 1.0}).normalized();
  double expect = (vec({1, 1, 1}) - vec({0.2, 0.3, 0.4})).norm();
  double got = ray_integral_from(f, vec({0.2, 0.3, 0.4}), diag, 0.0);
  CHECK(got == doctest::Approx(std::min(expect, (1.0 - 0.4) * std::sqrt(3.0))).epsilon(1e-9));
}

TEST_CASE("integrate and fn_centroid") {
  GammaFunction box = cube_indicator(3);
  CHECK(integrate(box) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK((fn_centroid(box) - vec({0.5, 0.5, 0.5})).norm() < 1e-12);

  GammaFunction f = line_function(1.0);
  CHECK(integrate(f) == doctest::Approx(9.0 / 8).epsilon(1e-12));
  CHECK(std::abs(fn_centroid(f)[0]) < 1e-12);
}

TEST_CASE("cone-affine centroid sits at the origin when r0 = -(n g/(g+1)) r1") {
  // n = 2, gamma = 1, r1 = 1, r0 = -1, theta = xi = e1, D = segment.
  VPolytope K = VPolytope::hull({vec({-1, 0}), vec({1, -1}), vec({1, 1})});
  GammaFunction T(1.0, 1.0, K, AffineProfile{vec({-1.0, 0.0}), 1.0});
  Vec g = fn_centroid(T);
  CHECK(g.norm() < 1e-12);

  // The Beta-sliced path agrees with quadrature.
  GammaFunction Tc = T;
  Tc.set_cone(ConeStructure{vec({-1, 0}), vec({1, 0}), 2.0, vec({1, 0})});
  CHECK(integrate(Tc) == doctest::Approx(integrate(T)).epsilon(1e-12));
  CHECK((fn_centroid(Tc) - g).norm() < 1e-12);
}

TEST_CASE("marginal: k = 1 returns f itself") {
  GammaFunction f = cube_indicator(2);
  GammaFunction m = marginal(f, Subspace::full(2));
  CHECK(m.gamma() == f.gamma());
  CHECK(integrate(m) == doctest::Approx(integrate(f)).epsilon(1e-12));
}

TEST_CASE("marginal of the cube indicator onto a plane") {
  GammaFunction f = cube_indicator(3);
  auto Et = orthonormalize({vec({1, 0, 0}), vec({0, 1, 0})});
  GammaFunction F = marginal(f, Et);
  // k = n - dim + 1 = 2, gamma_tilde = 1/2.
  CHECK(F.gamma() == doctest::Approx(0.5));
  CHECK(integrate(F) == doctest::Approx(integrate(f)).epsilon(1e-9));
  Vec gf = fn_centroid(f);
  Vec gF = fn_centroid(F);
  CHECK((gF - Et.coords_unchecked(gf)).norm() < 1e-9);
}

TEST_CASE("marginal values on a sloped profile match direct fiber integrals") {
  // f(x) = (2 - x3)^(1/1) on the unit cube; fibers along e3.
  std::vector<Vec> pts;
  for (int mask = 0; mask < 8; ++mask)
    pts.push_back(vec({double(mask & 1), double((mask >> 1) & 1), double((mask >> 2) & 1)}));
  VPolytope cube = VPolytope::hull(pts);
  GammaFunction f(1.0, 1.0, cube, AffineProfile{vec({0, 0, -1.0}), 2.0});
  auto Et = orthonormalize({vec({1, 0, 0}), vec({0, 1, 0})});
  // F(y) = integral over z of (2 - z) = 1.5 for y inside the square.
  CHECK(marginal_value(f, Et, vec({0.3, 0.6, 0.0})) == doctest::Approx(1.5).epsilon(1e-10));
  CHECK(marginal_value(f, Et, vec({5.0, 0.5, 0.0})) == 0.0);
}

TEST_CASE("bbl midpoint slack") {
  GammaFunction f = cube_indicator(3);
  auto Et = orthonormalize({vec({1, 0, 0}), vec({0, 1, 0})});
  Vec y1 = vec({0.25, 0.5, 0.0}), y2 = vec({0.75, 0.25, 0.0});
  CHECK(bbl_midpoint_check(f, Et, y1, y1, 0.3) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(bbl_midpoint_check(f, Et, y1, y2, 0.0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(bbl_midpoint_check(f, Et, y1, y2, 1.0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(bbl_midpoint_check(f, Et, y1, y2, 0.4) >= -1e-7);

  // Sloped profile on the cube.
  std::vector<Vec> pts;
  for (int mask = 0; mask < 8; ++mask)
    pts.push_back(vec({double(mask & 1), double((mask >> 1) & 1), double((mask >> 2) & 1)}));
  VPolytope cube = VPolytope::hull(pts);
  GammaFunction g(1.0, 1.0, cube, AffineProfile{vec({0.3, -0.2, 0.1}), 1.5});
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.1, 0.9);
  for (int i = 0; i < 100; ++i) {
    Vec a = vec({u(rng), u(rng), 0.0}), b = vec({u(rng), u(rng), 0.0});
    CHECK(bbl_midpoint_check(g, Et, a, b, u(rng)) >= -1e-7);
  }
}

TEST_CASE("halfspace_mass_ratio: symmetric function gives 1/2") {
  GammaFunction f = cube_indicator(3, -1.0, 1.0);
  auto E = orthonormalize({vec({1, 0, 0}), vec({0, 1, 0})});
  double r = halfspace_mass_ratio(f, E, vec({1, 0, 0}));
  CHECK(r == doctest::Approx(0.5).epsilon(1e-10));
  // k = 1 agrees with the ray-integral ratio.
  auto L = orthonormalize({vec({0, 1, 0})});
  double r1 = halfspace_mass_ratio(f, L, vec({0, 1, 0}));
  double rays =
      ray_integral(f, vec({0, 1, 0}), 0.0) / ray_integral(f, vec({0, 1, 0}), -1e30);
  CHECK(r1 == doctest::Approx(rays).epsilon(1e-10));
}

TEST_CASE("section_profile of a cube, k = n") {
  std::vector<Vec> pts;
  for (int mask = 0; mask < 8; ++mask)
    pts.push_back(vec({mask & 1 ? 1.0 : -1.0, (mask >> 1) & 1 ? 1.0 : -1.0,
                       (mask >> 2) & 1 ? 1.0 : -1.0}));
  VPolytope cube = VPolytope::hull(pts);
  Vec theta = vec({1, 0, 0});
  GammaFunction A = section_profile(cube, theta, Subspace::full(3));
  // Etilde = span(theta): the slice-volume function, gamma = 1/(n-1).
  CHECK(A.dim() == 1);
  CHECK(A.gamma() == doctest::Approx(0.5));
  CHECK(A.evaluate(vec({0.0})) == doctest::Approx(4.0).epsilon(1e-8));
  CHECK(integrate(A) == doctest::Approx(cube.volume()).epsilon(1e-8));
  // Centroid of A matches g(K)|Etilde = o.
  CHECK(std::abs(fn_centroid(A)[0]) < 1e-9);
}

TEST_CASE("section_profile of a simplex is piecewise degree-1 in the fiber direction") {
  VPolytope simplex =
      VPolytope::hull({vec({0, 0, 0}), vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})});
  auto E = orthonormalize({vec({1, 0, 0}), vec({0, 1, 0})});
  Vec theta = vec({1, 0, 0});
  GammaFunction A = section_profile(simplex, theta, E, 0.05);
  CHECK(A.dim() == 2);
  CHECK(A.gamma() == doctest::Approx(1.0));  // 1/(k-1), k = 2
  // Sampled profile equals the direct section volume at interior points.
  VPolytope body = translate(simplex, -span_with(theta, complement(E)).project(simplex.centroid()));
  Subspace Et = span_with(theta, complement(E));
  Subspace W = complement(Et);
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int checked = 0;
  for (int i = 0; i < 40; ++i) {
    Vec yc = vec({u(rng) - 0.4, u(rng) - 0.4});
    double direct = 0.0;
    VPolytope fiber = section(body, Et.lift(yc), W);
    if (!fiber.is_empty() && fiber.intrinsic_dim() == 1) direct = fiber.volume();
    if (direct <= 1e-9) continue;
    ++checked;
    CHECK(A.evaluate(yc) == doctest::Approx(direct).epsilon(1e-6));
  }
  CHECK(checked > 5);
}

TEST_CASE("type invariants validate on well-formed instances") {
  GammaFunction box = cube_indicator(3);
  auto v1 = validate(box);
  CHECK(v1.ok);
  GammaFunction f = line_function(2.0);
  auto v2 = validate(f);
  CHECK(v2.ok);
  CHECK_THROWS_AS(GammaFunction(0.0, 1.0, VPolytope::hull({vec({0.}), vec({1.})}),
                                AffineProfile{vec({0.}), 1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(GammaFunction(1.0, 1.0, VPolytope::hull({vec({0.}), vec({1.})}),
                                AffineProfile{vec({0.}), -1.0}),
                  std::invalid_argument);
}

TEST_CASE("integrate agrees with adaptive 1-D quadrature for gamma = 2") {
  GammaFunction f = line_function(2.0);  // sqrt(1 - s) on [-1/2, 1]
  double direct = integrate_1d([](double s) { return std::sqrt(1.0 - s); }, -0.5, 1.0);
  CHECK(ray_integral(f, vec({1.0}), -1e30) == doctest::Approx(direct).epsilon(1e-9));
  // One-level adaptive default is coarse near the root singularity.
  CHECK(integrate(f) == doctest::Approx(direct).epsilon(2e-3));
  QuadratureConfig deep;
  deep.max_splits = 24;
  CHECK(integrate(f, deep) == doctest::Approx(direct).epsilon(1e-7));
}
