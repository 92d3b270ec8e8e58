#include "hms/fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace hms {

namespace {

int64_t cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

int64_t cross2(int64_t ax, int64_t ay, int64_t bx, int64_t by) { return ax * by - ay * bx; }

bool on_segment(const LatticePoint& p, const LatticePoint& a, const LatticePoint& b) {
  if (cross(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool strictly_inside_segment(const LatticePoint& p, const LatticePoint& a,
                             const LatticePoint& b) {
  return on_segment(p, a, b) && !(p == a) && !(p == b);
}

int sign(int64_t v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }

// proper crossing: interiors of the two segments intersect in one point
bool segments_cross(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c,
                    const LatticePoint& d) {
  int d1 = sign(cross(a, b, c)), d2 = sign(cross(a, b, d));
  int d3 = sign(cross(c, d, a)), d4 = sign(cross(c, d, b));
  return d1 * d2 < 0 && d3 * d4 < 0;
}

// p strictly inside ccw triangle (scaled test: p and triangle both multiplied by k)
bool strictly_inside_triangle_scaled(int64_t px, int64_t py, const LatticePoint& a,
                                     const LatticePoint& b, const LatticePoint& c, int64_t k) {
  auto side = [&](const LatticePoint& u, const LatticePoint& v) {
    return cross2(k * v.x - k * u.x, k * v.y - k * u.y, px - k * u.x, py - k * u.y);
  };
  return side(a, b) > 0 && side(b, c) > 0 && side(c, a) > 0;
}

std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<LatticePoint> h(2 * pts.size());
  size_t k = 0;
  for (size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (size_t i = pts.size() - 1, lo = k + 1; i-- > 0;) {
    while (k >= lo && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

int64_t hull_doubled_area(const std::vector<LatticePoint>& h) {
  int64_t s = 0;
  for (size_t i = 0; i < h.size(); ++i) {
    const auto& a = h[i];
    const auto& b = h[(i + 1) % h.size()];
    s += a.x * b.y - a.y * b.x;
  }
  return s;
}

bool point_on_hull_boundary(const LatticePoint& p, const std::vector<LatticePoint>& h) {
  for (size_t i = 0; i < h.size(); ++i)
    if (on_segment(p, h[i], h[(i + 1) % h.size()])) return true;
  return false;
}

void exgcd(int64_t a, int64_t b, int64_t& g, int64_t& x, int64_t& y) {
  if (b == 0) {
    g = a >= 0 ? a : -a;
    x = a >= 0 ? 1 : -1;
    y = 0;
    return;
  }
  int64_t x1, y1;
  exgcd(b, a % b, g, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
}

int64_t pos_mod(int64_t a, int64_t m) {
  int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

StackyFan StackyFan::parse(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw FanError(std::string("malformed document: ") + e.what());
  }
  if (!j.is_object() || !j.contains("points") || !j.contains("triangles"))
    throw FanError("malformed document: expected object with \"points\" and \"triangles\"");
  std::vector<LatticePoint> pts;
  std::vector<std::array<int, 3>> tris;
  try {
    for (const auto& p : j.at("points")) {
      if (!p.is_array() || p.size() != 2)
        throw FanError("malformed document: point " + std::to_string(pts.size()) +
                       " is not an [x,y] pair");
      pts.push_back({p.at(0).get<int64_t>(), p.at(1).get<int64_t>()});
    }
    for (const auto& t : j.at("triangles")) {
      if (!t.is_array() || t.size() != 3)
        throw FanError("malformed document: triangle " + std::to_string(tris.size()) +
                       " is not an index triple");
      tris.push_back({t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw FanError(std::string("malformed document: ") + e.what());
  }
  return from_data(std::move(pts), std::move(tris));
}

StackyFan StackyFan::from_data(std::vector<LatticePoint> points,
                               std::vector<std::array<int, 3>> triangles) {
  StackyFan f;
  f.points_ = std::move(points);
  for (const auto& t : triangles) f.triangles_.push_back(Triangle{t});
  f.validate();
  return f;
}

int64_t StackyFan::doubled_area(int t) const {
  const auto& tr = triangles_[t];
  return cross(points_[tr.v[0]], points_[tr.v[1]], points_[tr.v[2]]);
}

void StackyFan::validate() {
  const int np = int(points_.size());
  if (np == 0) throw FanError("malformed document: empty point list");
  for (int i = 0; i < np; ++i)
    for (int j = i + 1; j < np; ++j)
      if (points_[i] == points_[j])
        throw FanError("malformed document: duplicate points " + std::to_string(i) + " and " +
                       std::to_string(j));
  if (triangles_.empty()) throw FanError("malformed document: no triangles");

  std::set<std::array<int, 3>> seen;
  for (size_t t = 0; t < triangles_.size(); ++t) {
    auto& tr = triangles_[t];
    for (int k = 0; k < 3; ++k)
      if (tr.v[k] < 0 || tr.v[k] >= np)
        throw FanError("malformed document: triangle " + std::to_string(t) +
                       " references missing point " + std::to_string(tr.v[k]));
    if (tr.v[0] == tr.v[1] || tr.v[1] == tr.v[2] || tr.v[0] == tr.v[2])
      throw FanError("degenerate triangle " + std::to_string(t) + ": repeated vertex");
    if (doubled_area(int(t)) == 0)
      throw FanError("degenerate triangle " + std::to_string(t) + ": zero area");
    if (doubled_area(int(t)) < 0) std::swap(tr.v[1], tr.v[2]);  // store ccw
    // canonical rotation: smallest index first, orientation kept
    int mi = int(std::min_element(tr.v.begin(), tr.v.end()) - tr.v.begin());
    std::rotate(tr.v.begin(), tr.v.begin() + mi, tr.v.end());
    auto key = tr.v;
    if (!seen.insert(key).second)
      throw FanError("malformed document: duplicate triangle " + std::to_string(t));
  }

  // pairwise disjoint interiors
  for (size_t s = 0; s < triangles_.size(); ++s)
    for (size_t t = s + 1; t < triangles_.size(); ++t) {
      const auto &A = triangles_[s], &B = triangles_[t];
      auto pa = [&](int k) { return points_[A.v[k]]; };
      auto pb = [&](int k) { return points_[B.v[k]]; };
      bool bad = false;
      for (int i = 0; i < 3 && !bad; ++i)
        for (int j = 0; j < 3 && !bad; ++j)
          if (segments_cross(pa(i), pa((i + 1) % 3), pb(j), pb((j + 1) % 3))) bad = true;
      for (int i = 0; i < 3 && !bad; ++i) {
        if (strictly_inside_triangle_scaled(pa(i).x, pa(i).y, pb(0), pb(1), pb(2), 1)) bad = true;
        if (strictly_inside_triangle_scaled(pb(i).x, pb(i).y, pa(0), pa(1), pa(2), 1)) bad = true;
      }
      // centroid containment catches nested triangles sharing all vertices' sides
      int64_t cax = pa(0).x + pa(1).x + pa(2).x, cay = pa(0).y + pa(1).y + pa(2).y;
      int64_t cbx = pb(0).x + pb(1).x + pb(2).x, cby = pb(0).y + pb(1).y + pb(2).y;
      if (strictly_inside_triangle_scaled(cax, cay, pb(0), pb(1), pb(2), 3)) bad = true;
      if (strictly_inside_triangle_scaled(cbx, cby, pa(0), pa(1), pa(2), 3)) bad = true;
      if (bad)
        throw FanError("non-convex union: triangles " + std::to_string(s) + " and " +
                       std::to_string(t) + " overlap");
    }

  // no used point in the interior of another triangle's edge (hanging node)
  std::set<int> used;
  for (const auto& tr : triangles_)
    for (int k = 0; k < 3; ++k) used.insert(tr.v[k]);
  for (size_t t = 0; t < triangles_.size(); ++t)
    for (int k = 0; k < 3; ++k) {
      const auto& a = points_[triangles_[t].v[k]];
      const auto& b = points_[triangles_[t].v[(k + 1) % 3]];
      for (int p : used)
        if (strictly_inside_segment(points_[p], a, b))
          throw FanError("dangling interior edge: point " + std::to_string(p) +
                         " splits an edge of triangle " + std::to_string(t));
    }

  // union must cover the convex hull of the whole point set
  hull_ = convex_hull(points_);
  if (hull_.size() < 3) throw FanError("malformed document: points are collinear");
  int64_t total = 0;
  for (size_t t = 0; t < triangles_.size(); ++t) total += doubled_area(int(t));
  if (total != hull_doubled_area(hull_))
    throw FanError("non-convex union: triangles do not cover the convex hull of the points");

  // derive edges with incidence counts
  std::map<std::array<int, 2>, std::vector<int>> inc;
  for (size_t t = 0; t < triangles_.size(); ++t)
    for (int k = 0; k < 3; ++k) {
      int a = triangles_[t].v[k], b = triangles_[t].v[(k + 1) % 3];
      std::array<int, 2> key{std::min(a, b), std::max(a, b)};
      inc[key].push_back(int(t));
    }
  for (auto& [key, ts] : inc) {
    if (ts.size() > 2)
      throw FanError("malformed document: edge {" + std::to_string(key[0]) + "," +
                     std::to_string(key[1]) + "} used by more than two triangles");
    FanEdge e;
    e.v = key;
    e.interior = ts.size() == 2;
    e.tris = {ts[0], ts.size() == 2 ? ts[1] : -1};
    bool on_boundary = point_on_hull_boundary(points_[key[0]], hull_) &&
                       point_on_hull_boundary(points_[key[1]], hull_) &&
                       on_segment_hull_edge(points_[key[0]], points_[key[1]]);
    if (!e.interior && !on_boundary)
      throw FanError("dangling interior edge {" + std::to_string(key[0]) + "," +
                     std::to_string(key[1]) + "}: single-triangle edge off the boundary");
    edges_.push_back(e);
  }

  // dual graph connectivity
  std::vector<std::vector<int>> adj(triangles_.size());
  for (size_t e = 0; e < edges_.size(); ++e)
    if (edges_[e].interior) {
      adj[edges_[e].tris[0]].push_back(edges_[e].tris[1]);
      adj[edges_[e].tris[1]].push_back(edges_[e].tris[0]);
    }
  std::vector<bool> vis(triangles_.size(), false);
  std::queue<int> q;
  q.push(0);
  vis[0] = true;
  while (!q.empty()) {
    int t = q.front();
    q.pop();
    for (int n : adj[t])
      if (!vis[n]) {
        vis[n] = true;
        q.push(n);
      }
  }
  for (size_t t = 0; t < vis.size(); ++t)
    if (!vis[t])
      throw FanError("malformed document: dual graph disconnected at triangle " +
                     std::to_string(t));
}

// both endpoints on the hull is not enough: the segment itself must lie inside
// one hull edge
bool StackyFan::on_segment_hull_edge(const LatticePoint& a, const LatticePoint& b) const {
  for (size_t i = 0; i < hull_.size(); ++i) {
    const auto& u = hull_[i];
    const auto& v = hull_[(i + 1) % hull_.size()];
    if (on_segment(a, u, v) && on_segment(b, u, v)) return true;
  }
  return false;
}

std::vector<int> StackyFan::interior_edges() const {
  std::vector<int> out;
  for (size_t e = 0; e < edges_.size(); ++e)
    if (edges_[e].interior) out.push_back(int(e));
  return out;
}

int StackyFan::omitted_position(int edge, int t) const {
  const auto& e = edges_[edge];
  const auto& tr = triangles_[t];
  for (int k = 0; k < 3; ++k)
    if (tr.v[k] != e.v[0] && tr.v[k] != e.v[1]) return k;
  throw std::logic_error("omitted_position: edge not in triangle");
}

ConeNormalForm normalize_cone(const LatticePoint& b1, const LatticePoint& b2,
                              const LatticePoint& b3) {
  std::array<LatticePoint, 3> in{b1, b2, b3};
  int64_t area2 = cross(in[0], in[1], in[2]);
  if (area2 == 0) throw FanError("degenerate cone: rays are coplanar through the origin");

  std::optional<ConeNormalForm> best;
  for (int rot = 0; rot < 3; ++rot) {
    std::array<int, 3> order{rot, (rot + 1) % 3, (rot + 2) % 3};
    const LatticePoint &c1 = in[order[0]], &c2 = in[order[1]], &c3 = in[order[2]];
    int64_t w1x = c1.x - c3.x, w1y = c1.y - c3.y;
    int64_t w2x = c2.x - c3.x, w2y = c2.y - c3.y;
    int64_t m = std::gcd(std::abs(w2x), std::abs(w2y));
    // A0 w2 = (0, m), det A0 = 1
    int64_t g, p, q;
    exgcd(w2x, w2y, g, p, q);
    int64_t a11 = w2y / m, a12 = -w2x / m, a21 = p, a22 = q;
    int64_t r0 = a11 * w1x + a12 * w1y;
    int64_t e = a21 * w1x + a22 * w1y;
    if (r0 < 0) {
      a11 = -a11;
      a12 = -a12;
      r0 = -r0;
    }
    int64_t r = r0;
    int64_t s = pos_mod(-e, r);
    int64_t k = -(e + s) / r;  // shear making the second coordinate exactly -s
    a21 += k * a11;
    a22 += k * a12;

    ConeNormalForm cand;
    cand.r = r;
    cand.m = m;
    cand.s = s;
    cand.basis_change = IntMat(3, 3);
    IntMat& T = cand.basis_change;
    T.at(0, 0) = a11;
    T.at(0, 1) = a12;
    T.at(1, 0) = a21;
    T.at(1, 1) = a22;
    T.at(0, 2) = -(a11 * c3.x + a12 * c3.y);
    T.at(1, 2) = -(a21 * c3.x + a22 * c3.y);
    T.at(2, 2) = 1;
    for (int kpos = 0; kpos < 3; ++kpos) cand.slot[order[kpos]] = kpos + 1;

    // verify the transform maps the rays to the normal-form rays
    auto apply = [&](const LatticePoint& pnt) {
      return std::array<int64_t, 3>{
          T.at(0, 0).get_si() * pnt.x + T.at(0, 1).get_si() * pnt.y + T.at(0, 2).get_si(),
          T.at(1, 0).get_si() * pnt.x + T.at(1, 1).get_si() * pnt.y + T.at(1, 2).get_si(), 1};
    };
    auto r1 = apply(c1), r2 = apply(c2), r3 = apply(c3);
    if (r1 != std::array<int64_t, 3>{r, -s, 1} || r2 != std::array<int64_t, 3>{0, m, 1} ||
        r3 != std::array<int64_t, 3>{0, 0, 1} || abs(T.det()) != 1)
      throw std::logic_error("normalize_cone: basis change verification failed");

    if (!best || std::array<int64_t, 3>{cand.r, cand.m, cand.s} <
                     std::array<int64_t, 3>{best->r, best->m, best->s})
      best = cand;
  }
  return *best;
}

std::array<std::pair<int64_t, int64_t>, 3> sequence_data(const ConeNormalForm& nf) {
  const int64_t r = nf.r, m = nf.m, s = nf.s;
  std::array<std::pair<int64_t, int64_t>, 3> out;
  out[0] = {m, r};
  int64_t g2 = std::gcd(r, s);
  out[1] = {g2, m * r / g2};
  int64_t g3 = std::gcd(m + s, r);
  out[2] = {g3, m * r / g3};
  for (const auto& [mi, ri] : out)
    if (mi * ri != r * m) throw std::logic_error("sequence_data: m_i * r_i != r*m");
  return out;
}

GroupData structure_group(const ConeNormalForm& nf) {
  GroupData gd;
  gd.nf = nf;
  const int64_t r = nf.r, m = nf.m, s = nf.s, n = r * m;

  IntMat rel(2, 2);  // relation columns (r, -s) and (0, m) on eta1, eta2 exponents
  rel.at(0, 0) = r;
  rel.at(1, 0) = -s;
  rel.at(0, 1) = 0;
  rel.at(1, 1) = m;
  gd.group = FiniteAbelianGroup::from_relations(rel);
  if (gd.group.order() != n) throw std::logic_error("structure_group: |G| != r*m");

  gd.eta1 = gd.group.reduce(std::vector<int64_t>{1, 0});
  gd.eta2 = gd.group.reduce(std::vector<int64_t>{0, 1});

  // embedding triples in units of 1/(r*m), via the set bijection Z/r x Z/m = G
  gd.embedding.assign(n, {});
  std::vector<bool> hit(n, false);
  for (int64_t a = 0; a < r; ++a)
    for (int64_t b = 0; b < m; ++b) {
      int idx = gd.group.reduce(std::vector<int64_t>{a, b});
      if (hit[idx]) throw std::logic_error("structure_group: eta bijection failed");
      hit[idx] = true;
      int64_t x1 = pos_mod(a * m, n);
      int64_t x2 = pos_mod(s * a + r * b, n);
      int64_t x3 = pos_mod(-(x1 + x2), n);
      gd.embedding[idx] = {x1, x2, x3};
    }
  // ker phi sanity: phi(t) = (t1^r, t1^{-s} t2^m, t1 t2 t3) = 1 on every element
  for (int g = 0; g < n; ++g) {
    const auto& x = gd.embedding[g];
    if (pos_mod(r * x[0], n) != 0 || pos_mod(-s * x[0] + m * x[1], n) != 0 ||
        pos_mod(x[0] + x[1] + x[2], n) != 0)
      throw std::logic_error("structure_group: embedding does not lie in ker phi");
  }

  // coordinate characters as residue tuples
  const auto& fac = gd.group.factors();
  for (int i = 0; i < 3; ++i) {
    std::vector<int64_t> c(fac.size(), 0);
    for (size_t k = 0; k < fac.size(); ++k) {
      std::vector<int64_t> t(fac.size(), 0);
      t[k] = 1;
      int gidx = gd.group.index_of_tuple(t);
      int64_t val = gd.embedding[gidx][i];  // in units of 1/n
      if (val * fac[k] % n != 0)
        throw std::logic_error("structure_group: rho not integral on generator");
      c[k] = pos_mod(val * fac[k] / n, fac[k]);
    }
    gd.rho[i] = gd.group.index_of_tuple(c);
  }
  // rho1 rho2 rho3 = 1 exactly as residue tuples
  if (gd.group.mul(gd.group.mul(gd.rho[0], gd.rho[1]), gd.rho[2]) != gd.group.identity())
    throw std::logic_error("structure_group: rho1 rho2 rho3 != 1");
  // character evaluation agrees with the embedding triples everywhere
  for (int g = 0; g < n; ++g)
    for (int i = 0; i < 3; ++i) {
      int64_t lhs = gd.group.pair(gd.rho[i], g);  // units 1/exponent
      int64_t rhs = gd.embedding[g][i];           // units 1/n
      if (lhs * n != rhs * gd.group.exponent())
        throw std::logic_error("structure_group: representations disagree");
    }

  gd.seq = sequence_data(nf);
  return gd;
}

CokernelModel stacky_picard(const StackyFan& fan, const std::vector<int>& ray_subset) {
  if (ray_subset.empty()) throw FanError("stacky_picard: empty ray subset");
  IntMat pres(int(ray_subset.size()), 3);
  for (size_t i = 0; i < ray_subset.size(); ++i) {
    const auto& p = fan.points().at(ray_subset[i]);
    pres.at(int(i), 0) = p.x;
    pres.at(int(i), 1) = p.y;
    pres.at(int(i), 2) = 1;
  }
  return CokernelModel(pres);
}

std::vector<int64_t> picard_project(const CokernelModel& from, const std::vector<int>& from_rays,
                                    const CokernelModel& to, const std::vector<int>& to_rays,
                                    const std::vector<int64_t>& elem) {
  std::vector<int64_t> amb = from.ambient_rep(elem);
  std::vector<int64_t> restricted(to_rays.size(), 0);
  for (size_t k = 0; k < to_rays.size(); ++k) {
    auto it = std::find(from_rays.begin(), from_rays.end(), to_rays[k]);
    if (it == from_rays.end()) throw std::logic_error("picard_project: rays not nested");
    restricted[k] = amb[size_t(it - from_rays.begin())];
  }
  return to.canon(restricted);
}

PicardCharTable picard_char_table(const StackyFan& fan, int tri, const GroupData& gd) {
  PicardCharTable t;
  const auto& tv = fan.triangles().at(tri).v;
  t.rays.assign(tv.begin(), tv.end());
  t.coker = stacky_picard(fan, t.rays);
  if (t.coker.free_rank() != 0 || t.coker.torsion_order() != gd.order())
    throw std::logic_error("picard_char_table: cone Picard model has wrong shape");
  t.elems = t.coker.torsion_elements();
  t.elem_to_char.assign(t.elems.size(), -1);
  t.char_to_elem.assign(size_t(gd.order()), {});
  std::vector<bool> hit(size_t(gd.order()), false);
  for (size_t e = 0; e < t.elems.size(); ++e) {
    std::vector<int64_t> amb = t.coker.ambient_rep(t.elems[e]);
    int chi = gd.group.identity();
    for (int k = 0; k < 3; ++k)
      chi = gd.chi_mul(chi, gd.chi_pow(gd.rho[gd.nf.slot[k] - 1], amb[k]));
    if (hit[chi]) throw std::logic_error("picard_char_table: character map not injective");
    hit[chi] = true;
    t.elem_to_char[e] = chi;
    t.char_to_elem[chi] = t.elems[e];
  }
  return t;
}

std::vector<int64_t> restrict_char_to_edge(const StackyFan& fan, const PicardCharTable& pct,
                                           int edge, const CokernelModel& edge_coker, int chi) {
  const auto& e = fan.edges().at(edge);
  std::vector<int> edge_rays{e.v[0], e.v[1]};
  return picard_project(pct.coker, pct.rays, edge_coker, edge_rays, pct.char_to_elem.at(chi));
}

}  // namespace hms
