#include "grunbaum/gamma_function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "grunbaum/quadrature.hpp"

namespace grunbaum {

namespace {

constexpr double kValueFloor = -1e-8;

double power_clamped(double p, double inv_gamma) {
  if (p <= 0.0) return 0.0;
  return std::pow(p, inv_gamma);
}

bool is_nonneg_integer(double x, double tol = 1e-12) {
  return std::abs(x - std::round(x)) < tol && x > -0.5;
}

}  // namespace

void GammaFunction::prepare() {
  if (!(gamma_ > 0.0)) throw std::invalid_argument("GammaFunction: gamma must be positive");
  if (!(scale_ > 0.0)) throw std::invalid_argument("GammaFunction: scale must be positive");
  if (support_.is_empty()) throw std::invalid_argument("GammaFunction: empty support");
  if (support_.intrinsic_dim() != support_.ambient_dim())
    throw std::invalid_argument("GammaFunction: support must be full-dimensional");
  if (values_.size() != mesh_.points.size())
    throw std::invalid_argument("GammaFunction: profile size mismatch");
  for (double& v : values_) {
    if (v < kValueFloor)
      throw std::invalid_argument("GammaFunction: negative profile value");
    if (v < 0.0) v = 0.0;
  }
  const int d = mesh_.dim;
  bary_inv_.reserve(mesh_.simplices.size());
  for (const auto& s : mesh_.simplices) {
    Mat M(d, d);
    for (int i = 0; i < d; ++i) M.col(i) = mesh_.points[s[i + 1]] - mesh_.points[s[0]];
    bary_inv_.push_back(M.inverse());
  }
}

GammaFunction::GammaFunction(double gamma, double scale, VPolytope support, Mesh mesh,
                             std::vector<double> values)
    : gamma_(gamma),
      scale_(scale),
      support_(std::move(support)),
      mesh_(std::move(mesh)),
      values_(std::move(values)) {
  prepare();
}

GammaFunction::GammaFunction(double gamma, double scale, VPolytope support, AffineProfile affine)
    : gamma_(gamma), scale_(scale), support_(std::move(support)), affine_(std::move(affine)) {
  mesh_ = mesh_from_polytope(support_);
  values_.reserve(mesh_.points.size());
  for (const Vec& p : mesh_.points) values_.push_back(affine_->a.dot(p) + affine_->b);
  prepare();
}

void GammaFunction::set_cone(ConeStructure c) {
  if (!affine_) throw std::invalid_argument("set_cone: cone structure requires an affine profile");
  cone_ = std::move(c);
}

double GammaFunction::profile_at(const Vec& x) const {
  if (affine_) return affine_->a.dot(x) + affine_->b;
  const int d = mesh_.dim;
  double best_min = -std::numeric_limits<double>::infinity();
  double best_value = 0.0;
  for (std::size_t si = 0; si < mesh_.simplices.size(); ++si) {
    const auto& s = mesh_.simplices[si];
    Vec lam = bary_inv_[si] * (x - mesh_.points[s[0]]);
    double lam0 = 1.0 - lam.sum();
    double mn = lam0;
    for (int i = 0; i < d; ++i) mn = std::min(mn, lam[i]);
    if (mn > best_min) {
      best_min = mn;
      double v = lam0 * values_[s[0]];
      for (int i = 0; i < d; ++i) v += lam[i] * values_[s[i + 1]];
      best_value = v;
      if (mn >= 0.0) break;
    }
  }
  if (best_min < -1e-6) return 0.0;  // outside the meshed region
  return best_value;
}

double GammaFunction::evaluate(const Vec& x) const {
  if (!support_.contains(x, 1e-9)) return 0.0;
  return scale_ * power_clamped(profile_at(x), 1.0 / gamma_);
}

double GammaFunction::simplex_profile(int simplex_index, const Vec& x) const {
  const auto& s = mesh_.simplices[simplex_index];
  Vec lam = bary_inv_[simplex_index] * (x - mesh_.points[s[0]]);
  double lam0 = 1.0 - lam.sum();
  double v = lam0 * values_[s[0]];
  for (int i = 0; i < mesh_.dim; ++i) v += lam[i] * values_[s[i + 1]];
  return v;
}

int GammaFunction::owner_simplex(const Vec& x, double tolerance) const {
  const int d = mesh_.dim;
  for (std::size_t si = 0; si < mesh_.simplices.size(); ++si) {
    const auto& s = mesh_.simplices[si];
    Vec lam = bary_inv_[si] * (x - mesh_.points[s[0]]);
    double mn = 1.0 - lam.sum();
    for (int i = 0; i < d; ++i) mn = std::min(mn, lam[i]);
    if (mn >= -tolerance) return static_cast<int>(si);
  }
  return -1;
}

GammaFunction GammaFunction::translated(const Vec& t) const {
  VPolytope moved_support = translate(support_, t);
  if (affine_) {
    AffineProfile shifted{affine_->a, affine_->b - affine_->a.dot(t)};
    GammaFunction out(gamma_, scale_, std::move(moved_support), std::move(shifted));
    if (cone_) {
      ConeStructure c = *cone_;
      c.apex += t;
      c.base_centroid += t;
      out.set_cone(std::move(c));
    }
    return out;
  }
  Mesh m = mesh_;
  for (Vec& p : m.points) p += t;
  return GammaFunction(gamma_, scale_, std::move(moved_support), std::move(m), values_);
}

namespace {

struct RayPiece {
  double lo, hi;       // parameter interval
  double alpha, beta;  // profile along the ray: p(s) = alpha * s + beta
};

// Intersection of the parametric line x0 + s*theta with one mesh simplex,
// with the affine profile restricted to it.
bool ray_in_simplex(const GammaFunction& f, int si, const Vec& x0, const Vec& theta,
                    RayPiece& piece) {
  const auto& mesh = f.mesh();
  const auto& s = mesh.simplices[si];
  const int d = mesh.dim;
  Mat M(d, d);
  for (int i = 0; i < d; ++i) M.col(i) = mesh.points[s[i + 1]] - mesh.points[s[0]];
  Eigen::PartialPivLU<Mat> lu(M);
  Vec lamA = lu.solve(x0 - mesh.points[s[0]]);
  Vec lamB = lu.solve(theta);

  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  auto apply = [&](double a, double b) {
    // constraint a + s*b >= 0
    if (std::abs(b) < 1e-14) {
      if (a < -1e-12) {
        lo = 1.0;
        hi = 0.0;
      }
      return;
    }
    double bound = -a / b;
    if (b > 0)
      lo = std::max(lo, bound);
    else
      hi = std::min(hi, bound);
  };
  apply(1.0 - lamA.sum(), -lamB.sum());
  for (int i = 0; i < d; ++i) apply(lamA[i], lamB[i]);
  if (!(lo < hi)) return false;

  const auto& vals = f.values();
  double beta = (1.0 - lamA.sum()) * vals[s[0]];
  double alpha = -lamB.sum() * vals[s[0]];
  for (int i = 0; i < d; ++i) {
    beta += lamA[i] * vals[s[i + 1]];
    alpha += lamB[i] * vals[s[i + 1]];
  }
  piece = RayPiece{lo, hi, alpha, beta};
  return true;
}

// Closed-form integral of scale * (alpha*s + beta)_+^(1/gamma) over [lo, hi].
double piece_integral(double scale, double gamma, double alpha, double beta, double lo,
                      double hi) {
  if (!(hi > lo)) return 0.0;
  const double inv_gamma = 1.0 / gamma;
  const double span = std::max(std::abs(lo), std::abs(hi));
  if (std::abs(alpha) * span < 1e-12 * std::max(1.0, std::abs(beta)))
    return scale * power_clamped(beta, inv_gamma) * (hi - lo);
  auto anti = [&](double s) {
    double p = std::max(alpha * s + beta, 0.0);
    return gamma / ((gamma + 1.0) * alpha) * std::pow(p, (gamma + 1.0) / gamma);
  };
  return scale * (anti(hi) - anti(lo));
}

}  // namespace

double ray_integral_from(const GammaFunction& f, const Vec& x0, const Vec& theta, double t0) {
  if (theta.size() != f.dim() || x0.size() != f.dim())
    throw std::invalid_argument("ray_integral: dimension mismatch");
  std::vector<RayPiece> pieces;
  for (std::size_t si = 0; si < f.mesh().simplices.size(); ++si) {
    RayPiece piece;
    if (!ray_in_simplex(f, static_cast<int>(si), x0, theta, piece)) continue;
    piece.lo = std::max(piece.lo, t0);
    if (piece.hi > piece.lo) pieces.push_back(piece);
  }
  // A ray riding along shared mesh faces is reported by several simplices;
  // integrate over the union of intervals (profiles agree on overlaps).
  std::sort(pieces.begin(), pieces.end(),
            [](const RayPiece& a, const RayPiece& b) { return a.lo < b.lo; });
  double total = 0.0;
  double covered = -std::numeric_limits<double>::infinity();
  for (const RayPiece& piece : pieces) {
    double lo = std::max(piece.lo, covered);
    if (piece.hi > lo) {
      total += piece_integral(f.scale(), f.gamma(), piece.alpha, piece.beta, lo, piece.hi);
      covered = piece.hi;
    }
  }
  return total;
}

double ray_integral(const GammaFunction& f, const Vec& theta, double t0) {
  return ray_integral_from(f, Vec::Zero(f.dim()), theta, t0);
}

namespace {

// Quadrature of scale * p^(1/gamma) (and x-moments) over one simplex with an
// affine profile given by corner values.
struct SimplexIntegrand {
  const std::vector<Vec>* corners;
  const std::vector<double>* corner_values;
  double scale, inv_gamma;

  double value(const std::vector<double>& bary) const {
    double p = 0.0;
    for (std::size_t j = 0; j < bary.size(); ++j) p += bary[j] * (*corner_values)[j];
    return scale * power_clamped(p, inv_gamma);
  }
  Vec point(const std::vector<double>& bary) const {
    Vec x = Vec::Zero((*corners)[0].size());
    for (std::size_t j = 0; j < bary.size(); ++j) x += bary[j] * (*corners)[j];
    return x;
  }
};

struct MassMoment {
  double mass = 0.0;
  Vec moment;
};

MassMoment quad_rule_apply(const SimplexIntegrand& ig, double volume, const SimplexRule& rule,
                           bool with_moment) {
  MassMoment out;
  out.moment = Vec::Zero((*ig.corners)[0].size());
  for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
    double fv = ig.value(rule.nodes[q]);
    out.mass += rule.weights[q] * fv;
    if (with_moment) out.moment += rule.weights[q] * fv * ig.point(rule.nodes[q]);
  }
  out.mass *= volume;
  out.moment *= volume;
  return out;
}

void split_simplex(const std::vector<Vec>& corners, const std::vector<double>& values,
                   std::vector<std::vector<Vec>>& child_corners,
                   std::vector<std::vector<double>>& child_values) {
  // Longest-edge bisection.
  std::size_t ea = 0, eb = 1;
  double best = -1.0;
  for (std::size_t a = 0; a < corners.size(); ++a)
    for (std::size_t b = a + 1; b < corners.size(); ++b) {
      double len = (corners[a] - corners[b]).squaredNorm();
      if (len > best) {
        best = len;
        ea = a;
        eb = b;
      }
    }
  Vec mid = 0.5 * (corners[ea] + corners[eb]);
  double midv = 0.5 * (values[ea] + values[eb]);
  for (std::size_t replace : {ea, eb}) {
    std::vector<Vec> c = corners;
    std::vector<double> v = values;
    c[replace] = mid;
    v[replace] = midv;
    child_corners.push_back(std::move(c));
    child_values.push_back(std::move(v));
  }
}

MassMoment integrate_simplex_adaptive(const SimplexIntegrand& ig,
                                      const std::vector<Vec>& corners,
                                      const std::vector<double>& values, double volume,
                                      const QuadratureConfig& cfg, bool with_moment,
                                      bool exact_poly, int splits_left, double abs_tol) {
  SimplexIntegrand local = ig;
  local.corners = &corners;
  local.corner_values = &values;
  const int d = static_cast<int>(corners.size()) - 1;
  const SimplexRule& lo = grundmann_moller(d, cfg.gm_degree_lo);
  MassMoment coarse = quad_rule_apply(local, volume, lo, with_moment);
  if (exact_poly) return coarse;
  const SimplexRule& hi = grundmann_moller(d, cfg.gm_degree_hi);
  MassMoment fine = quad_rule_apply(local, volume, hi, with_moment);
  double disagreement = std::abs(fine.mass - coarse.mass);
  // First call sets the absolute budget; children inherit half of it so the
  // total error stays bounded and refinement concentrates at the zero set.
  if (abs_tol < 0.0) abs_tol = cfg.rel_tol * std::max(std::abs(fine.mass), 1e-300);
  if (splits_left <= 0 || disagreement <= abs_tol) return fine;
  std::vector<std::vector<Vec>> cc;
  std::vector<std::vector<double>> cv;
  split_simplex(corners, values, cc, cv);
  MassMoment out;
  out.moment = Vec::Zero(corners[0].size());
  for (std::size_t i = 0; i < cc.size(); ++i) {
    MassMoment part = integrate_simplex_adaptive(ig, cc[i], cv[i], 0.5 * volume, cfg,
                                                 with_moment, false, splits_left - 1,
                                                 0.5 * abs_tol);
    out.mass += part.mass;
    out.moment += part.moment;
  }
  return out;
}

MassMoment integrate_impl(const GammaFunction& f, const QuadratureConfig& cfg,
                          bool with_moment) {
  const double inv_gamma = 1.0 / f.gamma();
  // Polynomial profiles within the low rule's degree are integrated exactly.
  const bool exact_poly =
      is_nonneg_integer(inv_gamma) && inv_gamma <= static_cast<double>(cfg.gm_degree_lo);
  MassMoment total;
  total.moment = Vec::Zero(f.dim());
  const auto& mesh = f.mesh();
  for (std::size_t si = 0; si < mesh.simplices.size(); ++si) {
    if (mesh.volumes[si] <= 0.0) continue;
    std::vector<Vec> corners;
    std::vector<double> values;
    for (int v : mesh.simplices[si]) {
      corners.push_back(mesh.points[v]);
      values.push_back(f.values()[v]);
    }
    SimplexIntegrand ig{&corners, &values, f.scale(), inv_gamma};
    MassMoment part = integrate_simplex_adaptive(ig, corners, values, mesh.volumes[si], cfg,
                                                 with_moment, exact_poly, cfg.max_splits, -1.0);
    total.mass += part.mass;
    total.moment += part.moment;
  }
  return total;
}

// Exact integral for a cone-affine function via the Beta identity.
double cone_integral(const GammaFunction& f) {
  const ConeStructure& c = *f.cone();
  const int n = f.dim();
  const double s0 = c.xi.dot(c.apex);
  const double s1 = c.xi.dot(c.base_centroid);
  const double height = std::abs(s1 - s0);
  const double p_apex = std::max(f.profile_at(c.apex), 0.0);
  const double inv_gamma = 1.0 / f.gamma();
  return f.scale() * std::pow(p_apex, inv_gamma) * c.base_volume * height *
         beta_integral(static_cast<double>(n), inv_gamma + 1.0);
}

Vec cone_centroid(const GammaFunction& f) {
  const ConeStructure& c = *f.cone();
  const double n = static_cast<double>(f.dim());
  const double g = f.gamma();
  const double mu = n * g / ((n + 1.0) * g + 1.0);
  return c.apex + mu * (c.base_centroid - c.apex);
}

}  // namespace

double integrate(const GammaFunction& f, const QuadratureConfig& cfg) {
  if (f.cone()) return cone_integral(f);
  return integrate_impl(f, cfg, false).mass;
}

Vec fn_centroid(const GammaFunction& f, const QuadratureConfig& cfg) {
  if (f.cone()) return cone_centroid(f);
  MassMoment mm = integrate_impl(f, cfg, true);
  if (!(mm.mass > 0.0)) throw std::invalid_argument("fn_centroid: zero integral");
  return mm.moment / mm.mass;
}

namespace {

// Append the pieces of one mesh simplex sectioned by the affine subspace
// (offset + span W) to the target mesh, with exact restricted profile values.
void append_restricted_pieces(const GammaFunction& f, int si, const Vec& offset,
                              const Subspace& W, Mesh& out_mesh,
                              std::vector<double>& out_values) {
  const auto& mesh = f.mesh();
  std::vector<Vec> corners;
  for (int v : mesh.simplices[si]) corners.push_back(mesh.points[v]);
  VPolytope simplex = VPolytope::from_points(corners);
  if (simplex.intrinsic_dim() < mesh.dim) return;  // degenerate sliver
  VPolytope piece = section(simplex, offset, W);
  const int k = W.dim();
  if (piece.is_empty() || piece.intrinsic_dim() < k) return;
  // W.project(offset) can be nonzero for a general affine anchor.
  Vec anchor = offset - W.project(offset);
  // Pieces that ride along a shared mesh face would be produced by every
  // adjacent simplex; only the lowest-index owner of the piece counts it.
  Vec piece_center = anchor + W.lift(piece.centroid());
  int owner = f.owner_simplex(piece_center);
  if (owner >= 0 && owner != si) return;
  Mesh pm = mesh_from_polytope(piece);
  const int base = static_cast<int>(out_mesh.points.size());
  for (const Vec& c : pm.points) {
    out_mesh.points.push_back(c);
    Vec ambient = anchor + W.lift(c);
    out_values.push_back(f.simplex_profile(si, ambient));
  }
  for (auto s : pm.simplices) {
    for (int& v : s) v += base;
    out_mesh.simplices.push_back(std::move(s));
  }
  for (double v : pm.volumes) out_mesh.volumes.push_back(v);
}

}  // namespace

double marginal_value(const GammaFunction& f, const Subspace& Etilde, const Vec& y) {
  if (Etilde.ambient_dim() != f.dim())
    throw std::invalid_argument("marginal_value: dimension mismatch");
  Subspace W = complement(Etilde);
  if (W.dim() == 0) return f.evaluate(y);

  Mesh fiber_mesh;
  fiber_mesh.dim = W.dim();
  std::vector<double> fiber_values;
  for (std::size_t si = 0; si < f.mesh().simplices.size(); ++si)
    append_restricted_pieces(f, static_cast<int>(si), y, W, fiber_mesh, fiber_values);
  if (fiber_mesh.simplices.empty()) return 0.0;

  const double inv_gamma = 1.0 / f.gamma();
  const QuadratureConfig& cfg = default_config().quad;
  const bool exact_poly =
      is_nonneg_integer(inv_gamma) && inv_gamma <= static_cast<double>(cfg.gm_degree_lo);
  double total = 0.0;
  for (std::size_t si = 0; si < fiber_mesh.simplices.size(); ++si) {
    if (fiber_mesh.volumes[si] <= 0.0) continue;
    std::vector<Vec> corners;
    std::vector<double> values;
    for (int v : fiber_mesh.simplices[si]) {
      corners.push_back(fiber_mesh.points[v]);
      values.push_back(std::max(fiber_values[v], 0.0));
    }
    SimplexIntegrand ig{&corners, &values, f.scale(), inv_gamma};
    total += integrate_simplex_adaptive(ig, corners, values, fiber_mesh.volumes[si], cfg, false,
                                        exact_poly, cfg.max_splits, -1.0)
                 .mass;
  }
  return total;
}

GammaFunction marginal(const GammaFunction& f, const Subspace& Etilde, double edge_factor) {
  const int n = f.dim();
  if (Etilde.ambient_dim() != n) throw std::invalid_argument("marginal: dimension mismatch");
  const int k = n - Etilde.dim() + 1;
  if (k < 1 || k > n) throw std::invalid_argument("marginal: invalid subspace dimension");
  if (k == 1) return f;  // empty fiber

  const double gt = f.gamma() / ((k - 1) * f.gamma() + 1.0);
  VPolytope shadow = project(f.support(), Etilde);
  if (shadow.intrinsic_dim() != Etilde.dim())
    throw std::invalid_argument("marginal: degenerate projection");
  Mesh mesh = mesh_from_polytope(shadow);
  refine_mesh(mesh, edge_factor * shadow.diameter());

  std::vector<double> values;
  values.reserve(mesh.points.size());
  for (const Vec& yc : mesh.points) {
    double F = marginal_value(f, Etilde, Etilde.lift(yc));
    values.push_back(std::pow(std::max(F, 0.0), gt));
  }
  return GammaFunction(gt, 1.0, std::move(shadow), std::move(mesh), std::move(values));
}

double bbl_midpoint_check(const GammaFunction& f, const Subspace& Etilde, const Vec& y1,
                          const Vec& y2, double lambda) {
  const int n = f.dim();
  const int k = n - Etilde.dim() + 1;
  const double gt = (k == 1) ? f.gamma() : f.gamma() / ((k - 1) * f.gamma() + 1.0);
  double f1 = marginal_value(f, Etilde, y1);
  double f2 = marginal_value(f, Etilde, y2);
  if (!(f1 > 0.0) || !(f2 > 0.0))
    throw std::invalid_argument("bbl_midpoint_check: marginal vanishes at an endpoint");
  Vec ym = lambda * y1 + (1.0 - lambda) * y2;
  double fm = marginal_value(f, Etilde, ym);
  return std::pow(fm, gt) - (lambda * std::pow(f1, gt) + (1.0 - lambda) * std::pow(f2, gt));
}

GammaFunction restrict_to_subspace(const GammaFunction& f, const Subspace& E) {
  if (E.ambient_dim() != f.dim())
    throw std::invalid_argument("restrict_to_subspace: dimension mismatch");
  VPolytope sect = section(f.support(), Vec::Zero(f.dim()), E);
  if (sect.is_empty() || sect.intrinsic_dim() < E.dim())
    throw std::invalid_argument("restrict_to_subspace: section misses the support interior");

  Mesh out_mesh;
  out_mesh.dim = E.dim();
  std::vector<double> out_values;
  Vec origin = Vec::Zero(f.dim());
  for (std::size_t si = 0; si < f.mesh().simplices.size(); ++si)
    append_restricted_pieces(f, static_cast<int>(si), origin, E, out_mesh, out_values);
  if (out_mesh.simplices.empty())
    throw std::invalid_argument("restrict_to_subspace: empty restriction");
  for (double& v : out_values) v = std::max(v, 0.0);
  return GammaFunction(f.gamma(), f.scale(), std::move(sect), std::move(out_mesh),
                       std::move(out_values));
}

double integrate_over_halfspace(const GammaFunction& g, const Vec& theta_dir,
                                const QuadratureConfig& cfg) {
  const double inv_gamma = 1.0 / g.gamma();
  const bool exact_poly =
      is_nonneg_integer(inv_gamma) && inv_gamma <= static_cast<double>(cfg.gm_degree_lo);
  double total = 0.0;
  const auto& mesh = g.mesh();
  for (std::size_t si = 0; si < mesh.simplices.size(); ++si) {
    if (mesh.volumes[si] <= 0.0) continue;
    std::vector<Vec> corners;
    for (int v : mesh.simplices[si]) corners.push_back(mesh.points[v]);
    VPolytope simplex = VPolytope::from_points(corners);
    if (simplex.intrinsic_dim() < mesh.dim) continue;
    VPolytope part = clip(simplex, Halfspace{theta_dir, 0.0});
    if (part.is_empty() || part.intrinsic_dim() < mesh.dim) continue;
    Mesh pm = mesh_from_polytope(part);
    for (std::size_t pi = 0; pi < pm.simplices.size(); ++pi) {
      std::vector<Vec> pc;
      std::vector<double> pv;
      for (int v : pm.simplices[pi]) {
        pc.push_back(pm.points[v]);
        pv.push_back(std::max(g.simplex_profile(static_cast<int>(si), pm.points[v]), 0.0));
      }
      SimplexIntegrand ig{&pc, &pv, g.scale(), inv_gamma};
      total += integrate_simplex_adaptive(ig, pc, pv, pm.volumes[pi], cfg, false, exact_poly,
                                          cfg.max_splits, -1.0)
                   .mass;
    }
  }
  return total;
}

double halfspace_mass_ratio(const GammaFunction& f, const Subspace& E, const Vec& theta) {
  if (!E.contains(theta, 1e-8))
    throw std::invalid_argument("halfspace_mass_ratio: theta must lie in E");
  GammaFunction g = restrict_to_subspace(f, E);
  double denom = integrate(g);
  if (!(denom > 0.0)) throw std::invalid_argument("halfspace_mass_ratio: zero mass on E");
  Vec theta_e = E.coords_unchecked(theta);
  theta_e /= theta_e.norm();
  return integrate_over_halfspace(g, theta_e) / denom;
}

GammaFunction section_profile(const VPolytope& P, const Vec& theta, const Subspace& E,
                              double edge_factor) {
  const int k = E.dim();
  if (!E.contains(theta, 1e-8))
    throw std::invalid_argument("section_profile: theta must lie in E");
  Subspace Etilde = span_with(theta / theta.norm(), complement(E));
  // Translate so the centroid projects to the origin of Etilde.
  VPolytope body = translate(P, -Etilde.project(P.centroid()));

  if (k == 1) {
    // Etilde is the whole space; A is the indicator of K.
    Mesh mesh = mesh_from_polytope(body);
    std::vector<double> ones(mesh.points.size(), 1.0);
    return GammaFunction(1.0, 1.0, std::move(body), std::move(mesh), std::move(ones));
  }

  VPolytope shadow = project(body, Etilde);
  if (shadow.intrinsic_dim() != Etilde.dim())
    throw std::invalid_argument("section_profile: degenerate section");
  Mesh mesh = mesh_from_polytope(shadow);
  refine_mesh(mesh, edge_factor * shadow.diameter());

  Subspace W = complement(Etilde);
  const double gamma = 1.0 / static_cast<double>(k - 1);
  std::vector<double> values;
  values.reserve(mesh.points.size());
  for (const Vec& yc : mesh.points) {
    VPolytope fiber = section(body, Etilde.lift(yc), W);
    double vol = (!fiber.is_empty() && fiber.intrinsic_dim() == k - 1) ? fiber.volume() : 0.0;
    values.push_back(std::pow(vol, gamma));
  }
  return GammaFunction(gamma, 1.0, std::move(shadow), std::move(mesh), std::move(values));
}

GammaValidation validate(const GammaFunction& f, int samples, std::uint64_t seed) {
  GammaValidation out;
  out.min_value =
      f.values().empty() ? 0.0 : *std::min_element(f.values().begin(), f.values().end());
  out.min_midpoint_slack = std::numeric_limits<double>::infinity();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const auto& mesh = f.mesh();
  const int d = mesh.dim;
  for (int trial = 0; trial < samples; ++trial) {
    const auto& s = mesh.simplices[rng() % mesh.simplices.size()];
    auto sample_point = [&]() {
      // Uniform-ish barycentric sample via exponential spacings.
      std::vector<double> w(d + 1);
      double tot = 0.0;
      for (double& wi : w) {
        wi = -std::log(std::max(u(rng), 1e-12));
        tot += wi;
      }
      Vec x = Vec::Zero(d);
      for (int j = 0; j <= d; ++j) x += (w[j] / tot) * mesh.points[s[j]];
      return x;
    };
    Vec a = sample_point(), b = sample_point();
    double slack = f.profile_at(0.5 * (a + b)) - 0.5 * (f.profile_at(a) + f.profile_at(b));
    out.min_midpoint_slack = std::min(out.min_midpoint_slack, slack);
  }
  out.ok = out.min_value >= -1e-12 && out.min_midpoint_slack >= -1e-9;
  return out;
}

}  // namespace grunbaum
