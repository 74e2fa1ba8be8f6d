#include "grunbaum/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "grunbaum/config.hpp"
#include "grunbaum/quadrature.hpp"

namespace grunbaum {

namespace {

struct HullFacet {
  std::vector<int> vtx;  // d point indices
  Vec normal;            // unit, chart coords
  double offset = 0.0;   // <normal, c> <= offset inside
  bool dead = false;
};

// Unit normal of the hyperplane through d points in R^d (smallest singular
// vector of the edge matrix), plus the offset.
bool facet_plane(const std::vector<Vec>& pts, const std::vector<int>& idx, Vec& normal,
                 double& offset) {
  const int d = static_cast<int>(pts.front().size());
  Mat edges(static_cast<int>(idx.size()) - 1, d);
  for (int i = 1; i < static_cast<int>(idx.size()); ++i)
    edges.row(i - 1) = (pts[idx[i]] - pts[idx[0]]).transpose();
  Eigen::JacobiSVD<Mat> svd(edges, Eigen::ComputeFullV);
  normal = svd.matrixV().col(d - 1);
  double nn = normal.norm();
  if (!(nn > 0.5)) return false;  // SVD always returns a unit vector; defensive
  normal /= nn;
  offset = normal.dot(pts[idx[0]]);
  return true;
}

// Incremental convex hull in R^d (d >= 2). Points must have full rank d.
// Returns the live boundary facets.
std::vector<HullFacet> incremental_hull(const std::vector<Vec>& pts, double eps) {
  const int d = static_cast<int>(pts.front().size());
  const int npts = static_cast<int>(pts.size());

  // Initial simplex: greedy farthest-point selection.
  std::vector<int> init;
  {
    int first = 0;
    double best = -1.0;
    for (int i = 0; i < npts; ++i) {
      double s = pts[i].norm();
      if (s > best) best = s, first = i;
    }
    init.push_back(first);
    Mat basis(d, 0);
    Vec origin = pts[first];
    while (static_cast<int>(init.size()) < d + 1) {
      int pick = -1;
      double best_resid = -1.0;
      Vec best_dir;
      for (int i = 0; i < npts; ++i) {
        Vec r = pts[i] - origin;
        r -= basis * (basis.transpose() * r);
        double resid = r.norm();
        if (resid > best_resid) {
          best_resid = resid;
          pick = i;
          best_dir = r;
        }
      }
      if (pick < 0 || best_resid <= eps)
        throw std::runtime_error("incremental_hull: input points are rank deficient");
      init.push_back(pick);
      basis.conservativeResize(d, basis.cols() + 1);
      basis.col(basis.cols() - 1) = best_dir / best_dir.norm();
    }
  }

  Vec interior = Vec::Zero(d);
  for (int i : init) interior += pts[i];
  interior /= static_cast<double>(init.size());

  std::vector<HullFacet> facets;
  for (int skip = 0; skip <= d; ++skip) {
    HullFacet f;
    for (int j = 0; j <= d; ++j)
      if (j != skip) f.vtx.push_back(init[j]);
    if (!facet_plane(pts, f.vtx, f.normal, f.offset))
      throw std::runtime_error("incremental_hull: degenerate initial facet");
    if (interior.dot(f.normal) > f.offset) {
      f.normal = -f.normal;
      f.offset = -f.offset;
    }
    facets.push_back(std::move(f));
  }

  // Farthest-first insertion keeps interior points from ever becoming vertices.
  std::vector<int> order;
  order.reserve(npts);
  std::set<int> used(init.begin(), init.end());
  for (int i = 0; i < npts; ++i)
    if (!used.count(i)) order.push_back(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    double na = (pts[a] - interior).norm(), nb = (pts[b] - interior).norm();
    if (na != nb) return na > nb;
    return a < b;
  });

  for (int p : order) {
    std::vector<int> visible;
    for (int fi = 0; fi < static_cast<int>(facets.size()); ++fi) {
      if (facets[fi].dead) continue;
      if (facets[fi].normal.dot(pts[p]) - facets[fi].offset > eps) visible.push_back(fi);
    }
    if (visible.empty()) continue;

    // Horizon ridges appear exactly once among the visible facets.
    std::map<std::vector<int>, int> ridge_count;
    for (int fi : visible) {
      const auto& vs = facets[fi].vtx;
      for (int skip = 0; skip < static_cast<int>(vs.size()); ++skip) {
        std::vector<int> ridge;
        for (int j = 0; j < static_cast<int>(vs.size()); ++j)
          if (j != skip) ridge.push_back(vs[j]);
        std::sort(ridge.begin(), ridge.end());
        ridge_count[ridge] += 1;
      }
    }
    for (int fi : visible) facets[fi].dead = true;

    for (const auto& [ridge, count] : ridge_count) {
      if (count != 1) continue;
      HullFacet f;
      f.vtx = ridge;
      f.vtx.push_back(p);
      if (!facet_plane(pts, f.vtx, f.normal, f.offset)) continue;
      double side = interior.dot(f.normal) - f.offset;
      if (std::abs(side) <= eps * 1e-3)
        throw std::runtime_error("incremental_hull: interior point on a new facet plane");
      if (side > 0) {
        f.normal = -f.normal;
        f.offset = -f.offset;
      }
      facets.push_back(std::move(f));
    }
  }

  std::vector<HullFacet> live;
  for (auto& f : facets)
    if (!f.dead) live.push_back(std::move(f));
  return live;
}

// A boundary point is a vertex iff the normals of its incident facets span
// the full chart dimension.
std::vector<char> extreme_mask(const std::vector<HullFacet>& facets, int npts, int d) {
  std::vector<std::vector<const Vec*>> normals(npts);
  for (const auto& f : facets)
    for (int v : f.vtx) normals[v].push_back(&f.normal);
  std::vector<char> mask(npts, 0);
  for (int v = 0; v < npts; ++v) {
    if (normals[v].empty()) continue;
    Mat basis(d, 0);
    int rank = 0;
    for (const Vec* n : normals[v]) {
      Vec r = *n;
      for (int pass = 0; pass < 2; ++pass) r -= basis * (basis.transpose() * r);
      if (r.norm() > 1e-7) {
        basis.conservativeResize(d, rank + 1);
        basis.col(rank) = r / r.norm();
        ++rank;
        if (rank == d) break;
      }
    }
    mask[v] = (rank == d) ? 1 : 0;
  }
  return mask;
}

}  // namespace

VPolytope VPolytope::build(std::vector<Vec> points, bool allow_degenerate) {
  VPolytope P;
  if (points.empty()) return P;
  P.ambient_ = static_cast<int>(points.front().size());
  for (const Vec& p : points) {
    if (p.size() != P.ambient_)
      throw std::invalid_argument("VPolytope: mixed ambient dimensions");
    if (!p.allFinite()) throw std::invalid_argument("VPolytope: non-finite coordinate");
  }

  double scale = 0.0;
  for (const Vec& p : points) scale = std::max(scale, p.lpNorm<Eigen::Infinity>());
  const double dedupe_tol = 1e-12 * std::max(1.0, scale);

  // Dedupe coincident points.
  std::vector<Vec> pts;
  for (const Vec& p : points) {
    bool dup = false;
    for (const Vec& q : pts)
      if ((p - q).lpNorm<Eigen::Infinity>() <= dedupe_tol) {
        dup = true;
        break;
      }
    if (!dup) pts.push_back(p);
  }

  if (!allow_degenerate && pts.size() < 2)
    throw std::invalid_argument(pts.empty() ? "hull: fewer than 2 points"
                                            : "hull: all points coincident");

  // Affine chart: origin at the mean, basis by greedy residual selection.
  Vec origin = Vec::Zero(P.ambient_);
  for (const Vec& p : pts) origin += p;
  origin /= static_cast<double>(pts.size());
  Mat basis(P.ambient_, 0);
  const double rank_tol = tol::rank * std::max(1.0, scale);
  while (true) {
    double best = -1.0;
    Vec best_dir;
    for (const Vec& p : pts) {
      Vec r = p - origin;
      for (int pass = 0; pass < 2; ++pass) r -= basis * (basis.transpose() * r);
      if (r.norm() > best) {
        best = r.norm();
        best_dir = r;
      }
    }
    if (best <= rank_tol || basis.cols() == P.ambient_) break;
    basis.conservativeResize(P.ambient_, basis.cols() + 1);
    basis.col(basis.cols() - 1) = best_dir / best_dir.norm();
  }
  P.intrinsic_ = static_cast<int>(basis.cols());
  P.chart_origin_ = origin;
  P.chart_basis_ = basis;

  std::vector<Vec> chart(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) chart[i] = basis.transpose() * (pts[i] - origin);

  const int d = P.intrinsic_;
  if (d == 0) {
    P.vertices_ = {pts.front()};
    P.verts_chart_ = {Vec(0)};
    P.centroid_ = pts.front();
    P.volume_ = 0.0;
    return P;
  }

  if (d == 1) {
    int lo = 0, hi = 0;
    for (int i = 1; i < static_cast<int>(chart.size()); ++i) {
      if (chart[i][0] < chart[lo][0]) lo = i;
      if (chart[i][0] > chart[hi][0]) hi = i;
    }
    P.vertices_ = {pts[lo], pts[hi]};
    P.verts_chart_ = {chart[lo], chart[hi]};
    P.triangulation_ = {{0, 1}};
    Facet fa, fb;
    fa.vtx = {0};
    fa.normal = Vec::Constant(1, -1.0);
    fa.offset = -P.verts_chart_[0][0];
    fb.vtx = {1};
    fb.normal = Vec::Constant(1, 1.0);
    fb.offset = P.verts_chart_[1][0];
    P.facets_ = {fa, fb};
    P.volume_ = std::abs(chart[hi][0] - chart[lo][0]);
    P.centroid_ = 0.5 * (pts[lo] + pts[hi]);
    return P;
  }

  const double hull_eps = 1e-10 * std::max(1.0, scale);
  std::vector<HullFacet> facets = incremental_hull(chart, hull_eps);

  // Drop boundary points that are not extreme, then re-run once so facet
  // indices reference only true vertices.
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::vector<char> mask = extreme_mask(facets, static_cast<int>(chart.size()), d);
    std::vector<int> keep;
    std::set<int> on_hull;
    for (const auto& f : facets)
      for (int v : f.vtx) on_hull.insert(v);
    bool all_extreme = true;
    for (int v : on_hull)
      if (!mask[v]) all_extreme = false;
    if (all_extreme && attempt > 0) break;
    if (all_extreme && on_hull.size() == chart.size()) break;
    std::vector<Vec> next_pts, next_chart;
    for (int v : on_hull)
      if (mask[v]) {
        next_pts.push_back(pts[v]);
        next_chart.push_back(chart[v]);
      }
    pts = std::move(next_pts);
    chart = std::move(next_chart);
    facets = incremental_hull(chart, hull_eps);
    if (all_extreme) break;
  }

  // Compact the vertex list.
  std::map<int, int> remap;
  for (const auto& f : facets)
    for (int v : f.vtx)
      if (!remap.count(v)) remap[v] = 0;
  int next = 0;
  for (auto& [old_id, new_id] : remap) new_id = next++;
  P.vertices_.resize(remap.size());
  P.verts_chart_.resize(remap.size());
  for (const auto& [old_id, new_id] : remap) {
    P.vertices_[new_id] = pts[old_id];
    P.verts_chart_[new_id] = chart[old_id];
  }
  P.facets_.reserve(facets.size());
  for (const auto& f : facets) {
    Facet g;
    for (int v : f.vtx) g.vtx.push_back(remap[v]);
    g.normal = f.normal;
    g.offset = f.offset;
    P.facets_.push_back(std::move(g));
  }

  // Fan triangulation from the vertex nearest the vertex mean.
  Vec mean = Vec::Zero(d);
  for (const Vec& c : P.verts_chart_) mean += c;
  mean /= static_cast<double>(P.verts_chart_.size());
  int apex = 0;
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < static_cast<int>(P.verts_chart_.size()); ++i) {
    double dist = (P.verts_chart_[i] - mean).norm();
    if (dist < best) {
      best = dist;
      apex = i;
    }
  }
  double total = 0.0;
  Vec first_moment = Vec::Zero(d);
  for (const auto& f : P.facets_) {
    if (std::find(f.vtx.begin(), f.vtx.end(), apex) != f.vtx.end()) continue;
    std::vector<int> simplex = {apex};
    simplex.insert(simplex.end(), f.vtx.begin(), f.vtx.end());
    std::vector<Vec> corners;
    corners.reserve(simplex.size());
    for (int v : simplex) corners.push_back(P.verts_chart_[v]);
    double vol = simplex_volume(corners);
    if (vol <= tol::simplex_volume) continue;
    P.triangulation_.push_back(std::move(simplex));
    total += vol;
    Vec c = Vec::Zero(d);
    for (const Vec& q : corners) c += q;
    first_moment += vol * (c / static_cast<double>(corners.size()));
  }
  P.volume_ = total;
  if (total > 0.0)
    P.centroid_ = P.from_chart(first_moment / total);
  else
    P.centroid_ = P.from_chart(mean);
  return P;
}

VPolytope VPolytope::hull(const std::vector<Vec>& points) { return build(points, false); }

VPolytope VPolytope::from_points(const std::vector<Vec>& points) { return build(points, true); }

VPolytope VPolytope::empty(int ambient_dim) {
  VPolytope P;
  P.ambient_ = ambient_dim;
  return P;
}

Vec VPolytope::centroid() const {
  if (is_empty()) throw std::invalid_argument("centroid: empty polytope");
  return centroid_;
}

double VPolytope::diameter() const {
  double d2 = 0.0;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    for (std::size_t j = i + 1; j < vertices_.size(); ++j)
      d2 = std::max(d2, (vertices_[i] - vertices_[j]).squaredNorm());
  return std::sqrt(d2);
}

Vec VPolytope::to_chart(const Vec& ambient) const {
  return chart_basis_.transpose() * (ambient - chart_origin_);
}

Vec VPolytope::from_chart(const Vec& chart) const {
  return chart_origin_ + chart_basis_ * chart;
}

bool VPolytope::contains(const Vec& x, double tolerance) const {
  if (is_empty()) return false;
  if (x.size() != ambient_) throw std::invalid_argument("contains: dimension mismatch");
  double scale = std::max(1.0, x.norm());
  Vec rel = x - chart_origin_;
  Vec c = chart_basis_.transpose() * rel;
  if ((rel - chart_basis_ * c).norm() > tolerance * scale) return false;
  if (intrinsic_ == 0) return c.size() == 0 || c.norm() <= tolerance * scale;
  if (intrinsic_ == 1)
    return c[0] >= verts_chart_[0][0] - tolerance * scale &&
           c[0] <= verts_chart_[1][0] + tolerance * scale;
  for (const Facet& f : facets_)
    if (f.normal.dot(c) > f.offset + tolerance * scale) return false;
  return true;
}

double VPolytope::support(const Vec& u) const {
  if (is_empty()) throw std::invalid_argument("support: empty polytope");
  if (u.size() != ambient_) throw std::invalid_argument("support: dimension mismatch");
  double best = -std::numeric_limits<double>::infinity();
  for (const Vec& v : vertices_) best = std::max(best, u.dot(v));
  return best;
}

double VPolytope::radial(const Vec& u) const {
  if (is_empty() || intrinsic_ != ambient_)
    throw std::invalid_argument("radial: polytope is not full-dimensional");
  std::vector<Halfspace> hs = facet_halfspaces();
  for (const Halfspace& h : hs)
    if (!(h.offset < 0.0))
      throw std::invalid_argument("radial: origin is not interior");
  // Halfspaces are {<n,x> >= offset} with offset < 0; along x = t*u we need
  // t <n,u> >= offset for all facets.
  double tmax = std::numeric_limits<double>::infinity();
  for (const Halfspace& h : hs) {
    double du = h.normal.dot(u);
    if (du < 0.0) tmax = std::min(tmax, h.offset / du);
  }
  if (!std::isfinite(tmax)) throw std::runtime_error("radial: unbounded ray");
  return tmax;
}

std::vector<Halfspace> VPolytope::facet_halfspaces() const {
  // Facet in chart: <n, c> <= t. Ambient: <B n, x> <= t + <B n, origin>.
  // Return in the {>= offset} convention by negating.
  std::vector<Halfspace> out;
  out.reserve(facets_.size());
  for (const Facet& f : facets_) {
    Vec na = chart_basis_ * f.normal;
    double oa = f.offset + na.dot(chart_origin_);
    out.push_back(Halfspace{-na, -oa});
  }
  return out;
}

VPolytope clip(const VPolytope& P, const Halfspace& H) {
  if (P.is_empty()) return P;
  if (H.normal.size() != P.ambient_dim())
    throw std::invalid_argument("clip: dimension mismatch");
  const auto& verts = P.vertices();
  std::vector<double> side(verts.size());
  double scale = std::max(1.0, std::abs(H.offset));
  for (std::size_t i = 0; i < verts.size(); ++i) {
    side[i] = H.normal.dot(verts[i]) - H.offset;
    scale = std::max(scale, std::abs(H.normal.dot(verts[i])));
  }
  const double eps = tol::clip * scale;

  bool all_in = true, all_out = true;
  for (double s : side) {
    if (s < -eps) all_in = false;
    if (s > eps) all_out = false;
  }
  if (all_in) return P;

  std::vector<Vec> keep;
  for (std::size_t i = 0; i < verts.size(); ++i)
    if (side[i] >= -eps) keep.push_back(verts[i]);
  if (all_out) return VPolytope::from_points(keep);

  // Crossings on boundary edges. Facet simplex edges cover all true edges.
  std::set<std::pair<int, int>> edges;
  if (P.intrinsic_dim() == 1) {
    edges.insert({0, 1});
  } else {
    for (const auto& f : P.facets()) {
      for (std::size_t a = 0; a < f.vtx.size(); ++a)
        for (std::size_t b = a + 1; b < f.vtx.size(); ++b)
          edges.insert({std::min(f.vtx[a], f.vtx[b]), std::max(f.vtx[a], f.vtx[b])});
    }
  }
  for (const auto& [a, b] : edges) {
    double sa = side[a], sb = side[b];
    if ((sa > eps && sb < -eps) || (sa < -eps && sb > eps)) {
      double t = sa / (sa - sb);
      keep.push_back(verts[a] + t * (verts[b] - verts[a]));
    }
  }
  return VPolytope::from_points(keep);
}

VPolytope section(const VPolytope& P, const Vec& point, const Subspace& S) {
  if (S.ambient_dim() != P.ambient_dim())
    throw std::invalid_argument("section: dimension mismatch");
  const int m = S.dim();
  VPolytope R = P;
  if (m < P.ambient_dim()) {
    Subspace comp = complement(S);
    for (int j = 0; j < comp.dim() && !R.is_empty(); ++j) {
      Vec w = comp.basis_vector(j);
      double c = w.dot(point);
      R = clip(R, Halfspace{w, c});
      if (R.is_empty()) break;
      R = clip(R, Halfspace{-w, -c});
    }
  }
  if (R.is_empty()) return VPolytope::empty(m);
  std::vector<Vec> coords;
  coords.reserve(R.vertices().size());
  for (const Vec& v : R.vertices()) coords.push_back(S.basis().transpose() * v);
  return VPolytope::from_points(coords);
}

VPolytope project(const VPolytope& P, const Subspace& E) {
  if (E.ambient_dim() != P.ambient_dim())
    throw std::invalid_argument("project: dimension mismatch");
  if (P.is_empty()) return VPolytope::empty(E.dim());
  std::vector<Vec> coords;
  coords.reserve(P.vertices().size());
  for (const Vec& v : P.vertices()) coords.push_back(E.basis().transpose() * v);
  return VPolytope::from_points(coords);
}

VPolytope translate(const VPolytope& P, const Vec& t) {
  if (P.is_empty()) return P;
  if (t.size() != P.ambient_dim()) throw std::invalid_argument("translate: dimension mismatch");
  std::vector<Vec> moved;
  moved.reserve(P.vertices().size());
  for (const Vec& v : P.vertices()) moved.push_back(v + t);
  return VPolytope::from_points(moved);
}

double simplex_volume(const std::vector<Vec>& pts) {
  const int d = static_cast<int>(pts.size()) - 1;
  if (d <= 0) return 0.0;
  Mat M(d, d);
  for (int i = 0; i < d; ++i) M.col(i) = pts[i + 1] - pts[0];
  double det = M.determinant();
  double fact = 1.0;
  for (int i = 2; i <= d; ++i) fact *= i;
  return std::abs(det) / fact;
}

double unit_ball_volume(int m) {
  if (m < 0) throw std::invalid_argument("unit_ball_volume: negative dimension");
  if (m == 0) return 1.0;
  return std::pow(M_PI, m / 2.0) / std::exp(std::lgamma(m / 2.0 + 1.0));
}

double Mesh::total_volume() const {
  return std::accumulate(volumes.begin(), volumes.end(), 0.0);
}

double Mesh::max_edge_length() const {
  double best = 0.0;
  for (const auto& s : simplices)
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = a + 1; b < s.size(); ++b)
        best = std::max(best, (points[s[a]] - points[s[b]]).norm());
  return best;
}

Mesh mesh_from_polytope(const VPolytope& P) {
  if (P.is_empty()) throw std::invalid_argument("mesh_from_polytope: empty polytope");
  if (P.intrinsic_dim() != P.ambient_dim())
    throw std::invalid_argument("mesh_from_polytope: polytope is not full-dimensional");
  Mesh m;
  m.dim = P.ambient_dim();
  m.points = P.vertices();
  m.simplices = P.triangulation();
  m.volumes.reserve(m.simplices.size());
  for (const auto& s : m.simplices) {
    std::vector<Vec> corners;
    for (int v : s) corners.push_back(m.points[v]);
    m.volumes.push_back(simplex_volume(corners));
  }
  return m;
}

void refine_mesh(Mesh& mesh, double max_edge, int max_points) {
  if (mesh.simplices.empty()) return;
  std::map<std::pair<int, int>, int> midpoint_of;
  while (static_cast<int>(mesh.points.size()) < max_points) {
    // Globally longest edge.
    double best = 0.0;
    std::pair<int, int> edge{-1, -1};
    for (const auto& s : mesh.simplices)
      for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b) {
          int u = std::min(s[a], s[b]), v = std::max(s[a], s[b]);
          double len = (mesh.points[u] - mesh.points[v]).norm();
          if (len > best) {
            best = len;
            edge = {u, v};
          }
        }
    if (best <= max_edge || edge.first < 0) break;
    int mid;
    auto it = midpoint_of.find(edge);
    if (it != midpoint_of.end()) {
      mid = it->second;
    } else {
      mid = static_cast<int>(mesh.points.size());
      mesh.points.push_back(0.5 * (mesh.points[edge.first] + mesh.points[edge.second]));
      midpoint_of[edge] = mid;
    }
    std::vector<std::vector<int>> next;
    std::vector<double> next_vols;
    next.reserve(mesh.simplices.size() + 8);
    for (std::size_t si = 0; si < mesh.simplices.size(); ++si) {
      const auto& s = mesh.simplices[si];
      bool has_u = std::find(s.begin(), s.end(), edge.first) != s.end();
      bool has_v = std::find(s.begin(), s.end(), edge.second) != s.end();
      if (!(has_u && has_v)) {
        next.push_back(s);
        next_vols.push_back(mesh.volumes[si]);
        continue;
      }
      for (int replace : {edge.first, edge.second}) {
        std::vector<int> child = s;
        std::replace(child.begin(), child.end(), replace, mid);
        std::vector<Vec> corners;
        for (int v : child) corners.push_back(mesh.points[v]);
        next.push_back(std::move(child));
        next_vols.push_back(simplex_volume(corners));
      }
    }
    mesh.simplices = std::move(next);
    mesh.volumes = std::move(next_vols);
  }
}

double SteinerBody::volume() const {
  // Integrate the PL interpolation of the sampled fiber volumes over K|E.
  const SimplexRule& rule = grundmann_moller(profile_mesh.dim, 3);
  double total = 0.0;
  for (std::size_t si = 0; si < profile_mesh.simplices.size(); ++si) {
    const auto& s = profile_mesh.simplices[si];
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
      double fv = 0.0;
      for (std::size_t j = 0; j < s.size(); ++j) fv += rule.nodes[q][j] * fiber_vols[s[j]];
      total += profile_mesh.volumes[si] * rule.weights[q] * fv;
    }
  }
  return total;
}

SteinerBody steiner_symmetrize(const VPolytope& P, const Subspace& E, double edge_factor) {
  const int n = P.ambient_dim();
  const int k = E.dim();
  if (k >= n) throw std::invalid_argument("steiner_symmetrize: dim E must be < n");
  if (P.intrinsic_dim() != n)
    throw std::invalid_argument("steiner_symmetrize: polytope must be full-dimensional");

  SteinerBody body{E, project(P, E), Mesh{}, {}, {}, n - k};
  body.profile_mesh = mesh_from_polytope(body.profile);
  refine_mesh(body.profile_mesh, edge_factor * body.profile.diameter());

  Subspace perp = complement(E);
  const double ball = unit_ball_volume(n - k);
  body.radii.reserve(body.profile_mesh.points.size());
  body.fiber_vols.reserve(body.profile_mesh.points.size());
  for (const Vec& y : body.profile_mesh.points) {
    Vec ambient_y = E.lift(y);
    VPolytope fiber = section(P, ambient_y, perp);
    double vol = 0.0;
    if (!fiber.is_empty() && fiber.intrinsic_dim() == n - k) vol = fiber.volume();
    body.fiber_vols.push_back(vol);
    body.radii.push_back(std::pow(vol / ball, 1.0 / static_cast<double>(n - k)));
  }
  return body;
}

}  // namespace grunbaum
