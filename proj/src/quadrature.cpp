#include "grunbaum/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace grunbaum {

namespace {

// Enumerate all compositions of total into parts nonnegative integers.
void enumerate_compositions(int total, int parts, std::vector<int>& current,
                            const std::function<void(const std::vector<int>&)>& emit) {
  if (parts == 1) {
    current.push_back(total);
    emit(current);
    current.pop_back();
    return;
  }
  for (int head = 0; head <= total; ++head) {
    current.push_back(head);
    enumerate_compositions(total - head, parts - 1, current, emit);
    current.pop_back();
  }
}

SimplexRule build_grundmann_moller(int dim, int s) {
  const int n = dim;
  const int d = 2 * s + 1;
  std::vector<double> fact(d + n + 2, 1.0);
  for (std::size_t i = 1; i < fact.size(); ++i) fact[i] = fact[i - 1] * static_cast<double>(i);

  SimplexRule rule;
  rule.dim = dim;
  for (int i = 0; i <= s; ++i) {
    double w = std::pow(2.0, -2 * s) * std::pow(static_cast<double>(d + n - 2 * i), d) /
               (fact[i] * fact[d + n - i]);
    if (i % 2) w = -w;
    // Reference weights sum to 1/n!; normalize so they sum to 1.
    w *= fact[n];
    const double denom = static_cast<double>(d + n - 2 * i);
    std::vector<int> current;
    enumerate_compositions(s - i, n + 1, current, [&](const std::vector<int>& beta) {
      std::vector<double> bary(n + 1);
      for (int j = 0; j <= n; ++j) bary[j] = (2.0 * beta[j] + 1.0) / denom;
      rule.nodes.push_back(std::move(bary));
      rule.weights.push_back(w);
    });
  }
  return rule;
}

}  // namespace

const SimplexRule& grundmann_moller(int dim, int degree) {
  if (dim < 1) throw std::invalid_argument("grundmann_moller: dim must be >= 1");
  if (degree < 1) degree = 1;
  const int s = (degree - 1) / 2;  // degree 2s+1 covers requested degree for odd input
  static std::map<std::pair<int, int>, SimplexRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(dim, s);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_grundmann_moller(dim, s)).first;
  return it->second;
}

double integrate_simplex(const std::vector<Vec>& verts, double volume, const SimplexRule& rule,
                         const std::function<double(const Vec&)>& fn) {
  if (static_cast<int>(verts.size()) != rule.dim + 1)
    throw std::invalid_argument("integrate_simplex: vertex count does not match rule dimension");
  double acc = 0.0;
  Vec x(verts.front().size());
  for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
    x.setZero();
    for (int j = 0; j <= rule.dim; ++j) x += rule.nodes[q][j] * verts[j];
    acc += rule.weights[q] * fn(x);
  }
  return volume * acc;
}

double beta_integral(double u, double v) {
  if (!(u > 0.0) || !(v > 0.0))
    throw std::invalid_argument("beta_integral: arguments must be positive");
  return std::exp(std::lgamma(u) + std::lgamma(v) - std::lgamma(u + v));
}

namespace {

// Gauss-Legendre nodes/weights on [-1,1].
const double kG7x[] = {0.0,
                       0.4058451513773971669066064,
                       -0.4058451513773971669066064,
                       0.7415311855993944398638648,
                       -0.7415311855993944398638648,
                       0.9491079123427585245261897,
                       -0.9491079123427585245261897};
const double kG7w[] = {0.4179591836734693877551020, 0.3818300505051189449503698,
                       0.3818300505051189449503698, 0.2797053914892766679014678,
                       0.2797053914892766679014678, 0.1294849661688696932706114,
                       0.1294849661688696932706114};
const double kG15x[] = {0.0,
                        0.2011940939974345223006283,
                        -0.2011940939974345223006283,
                        0.3941513470775633698972074,
                        -0.3941513470775633698972074,
                        0.5709721726085388475372267,
                        -0.5709721726085388475372267,
                        0.7244177313601700474161861,
                        -0.7244177313601700474161861,
                        0.8482065834104272162006483,
                        -0.8482065834104272162006483,
                        0.9372733924007059043077589,
                        -0.9372733924007059043077589,
                        0.9879925180204854284895657,
                        -0.9879925180204854284895657};
const double kG15w[] = {0.2025782419255612728806202, 0.1984314853271115764561183,
                        0.1984314853271115764561183, 0.1861610000155622110268006,
                        0.1861610000155622110268006, 0.1662692058169939335532009,
                        0.1662692058169939335532009, 0.1395706779261543144478048,
                        0.1395706779261543144478048, 0.1071592204671719350118695,
                        0.1071592204671719350118695, 0.0703660474881081247092674,
                        0.0703660474881081247092674, 0.0307532419961172683546284,
                        0.0307532419961172683546284};

double gauss(const std::function<double(double)>& fn, double a, double b, const double* xs,
             const double* ws, int n) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double acc = 0.0;
  for (int i = 0; i < n; ++i) acc += ws[i] * fn(mid + half * xs[i]);
  return half * acc;
}

double integrate_1d_rec(const std::function<double(double)>& fn, double a, double b,
                        double abs_tol, int depth) {
  const double coarse = gauss(fn, a, b, kG7x, kG7w, 7);
  const double fine = gauss(fn, a, b, kG15x, kG15w, 15);
  if (depth <= 0 || std::abs(fine - coarse) <= abs_tol) return fine;
  const double mid = 0.5 * (a + b);
  return integrate_1d_rec(fn, a, mid, 0.5 * abs_tol, depth - 1) +
         integrate_1d_rec(fn, mid, b, 0.5 * abs_tol, depth - 1);
}

}  // namespace

double integrate_1d(const std::function<double(double)>& fn, double a, double b, double rel_tol,
                    int max_depth) {
  if (a == b) return 0.0;
  const double rough = std::abs(gauss(fn, a, b, kG15x, kG15w, 15));
  const double abs_tol = rel_tol * std::max(rough, 1e-300);
  return integrate_1d_rec(fn, a, b, abs_tol, max_depth);
}

}  // namespace grunbaum
