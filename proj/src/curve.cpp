#include "hms/curve.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hms {

namespace {

int64_t cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool on_segment(const LatticePoint& p, const LatticePoint& a, const LatticePoint& b) {
  if (cross(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

}  // namespace

AffineCurveModel affine_curve(const ConeNormalForm& nf) {
  AffineCurveModel c;
  c.r = nf.r;
  c.m = nf.m;
  c.s = nf.s;
  c.group_order = nf.r * nf.m;
  auto seq = sequence_data(nf);
  for (int i = 0; i < 3; ++i) c.punctures[i] = seq[i].first;
  c.chi_bar = -c.group_order + c.total_punctures();
  if ((2 - c.chi_bar) % 2 != 0) throw std::logic_error("affine_curve: odd Euler defect");
  c.genus = (2 - c.chi_bar) / 2;
  if (c.genus < 0) throw std::logic_error("affine_curve: negative genus");
  return c;
}

PickCounts pick_counts(const std::vector<LatticePoint>& polygon) {
  if (polygon.size() < 3) throw FanError("pick_counts: empty polygon");
  std::vector<LatticePoint> poly = polygon;
  int64_t area2 = 0;
  for (size_t i = 0; i < poly.size(); ++i) {
    const auto& a = poly[i];
    const auto& b = poly[(i + 1) % poly.size()];
    area2 += a.x * b.y - a.y * b.x;
  }
  if (area2 == 0) throw FanError("pick_counts: degenerate polygon");
  if (area2 < 0) std::reverse(poly.begin(), poly.end());

  int64_t xmin = poly[0].x, xmax = poly[0].x, ymin = poly[0].y, ymax = poly[0].y;
  for (const auto& p : poly) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  PickCounts out;
  for (int64_t x = xmin; x <= xmax; ++x)
    for (int64_t y = ymin; y <= ymax; ++y) {
      LatticePoint p{x, y};
      bool boundary = false, inside = true;
      for (size_t i = 0; i < poly.size() && !boundary; ++i) {
        const auto& a = poly[i];
        const auto& b = poly[(i + 1) % poly.size()];
        if (on_segment(p, a, b)) boundary = true;
        else if (cross(a, b, p) < 0) inside = false;
      }
      if (boundary) ++out.boundary;
      else if (inside) ++out.interior;
    }
  return out;
}

std::pair<int64_t, int64_t> character_orbits(const FiniteAbelianGroup& g, int chi) {
  std::vector<bool> seen(size_t(g.order()), false);
  int64_t orbits = 0, size = -1;
  for (int start = 0; start < g.order(); ++start) {
    if (seen[start]) continue;
    ++orbits;
    int cur = start;
    int64_t len = 0;
    do {
      seen[cur] = true;
      ++len;
      cur = g.mul(cur, chi);
    } while (cur != start);
    if (size < 0) size = len;
    else if (size != len)
      throw std::logic_error("character_orbits: translation orbits of unequal size");
  }
  return {orbits, size};
}

MonodromyData monodromy(const GroupData& gd) {
  const int64_t r = gd.nf.r, m = gd.nf.m, s = gd.nf.s, n = r * m;
  const int64_t exp = gd.group.exponent();
  MonodromyData md;

  // displacement of the lifted loop around X = 0: multiply X by a primitive
  // r-th root; around Y = 0: multiply (X, Y) by (exp(2 pi i s/(rm)), exp(2 pi i/m))
  auto find_char = [&](int64_t on_eta1_num, int64_t on_eta2_num) {
    // arguments in units of 1/n
    if ((on_eta1_num * exp) % n != 0 || (on_eta2_num * exp) % n != 0)
      throw std::logic_error("monodromy: displacement is not a character value");
    int64_t v1 = on_eta1_num * exp / n % exp, v2 = on_eta2_num * exp / n % exp;
    int found = -1;
    for (int chi = 0; chi < n; ++chi)
      if (gd.eval(chi, gd.eta1) == v1 && gd.eval(chi, gd.eta2) == v2) {
        if (found >= 0) throw std::logic_error("monodromy: displacement character not unique");
        found = chi;
      }
    if (found < 0) throw std::logic_error("monodromy: displacement character not found");
    return found;
  };
  md.sigma_x = find_char(m % n, 0);            // 1/r = m/n
  md.sigma_y = find_char(s % n, r % n);        // s/(rm), 1/m = r/n

  // deck group Z^2 / <(r,0), (-s,m)> must be isomorphic to G^dual via
  // (p,q) -> rho1^p rho2^q; verify the presentation and that rho1, rho2 generate
  IntMat rel(2, 2);
  rel.at(0, 0) = r;
  rel.at(1, 0) = 0;
  rel.at(0, 1) = -s;
  rel.at(1, 1) = m;
  FiniteAbelianGroup deck = FiniteAbelianGroup::from_relations(rel);
  if (deck.order() != n) throw std::logic_error("monodromy: deck group has wrong order");
  if (gd.chi_pow(gd.rho[0], r) != gd.group.identity() ||
      gd.chi_mul(gd.chi_pow(gd.rho[0], -s), gd.chi_pow(gd.rho[1], m)) != gd.group.identity())
    throw std::logic_error("monodromy: deck relations do not die in G^dual");
  std::vector<bool> image(size_t(n), false);
  image[gd.group.identity()] = true;
  int64_t count = 1;
  std::vector<int> frontier{gd.group.identity()};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int c : frontier)
      for (int g : {gd.chi_mul(c, gd.rho[0]), gd.chi_mul(c, gd.rho[1])})
        if (!image[g]) {
          image[g] = true;
          ++count;
          next.push_back(g);
        }
    frontier = std::move(next);
  }
  if (count != n) throw std::logic_error("monodromy: rho1, rho2 do not generate G^dual");

  auto [ox, sx] = character_orbits(gd.group, md.sigma_x);
  auto [oy, sy] = character_orbits(gd.group, md.sigma_y);
  md.orbits_x = ox;
  md.orbit_size_x = sx;
  md.orbits_y = oy;
  md.orbit_size_y = sy;
  return md;
}

GlobalCurveModel glue_curve(const StackyFan& fan) {
  GlobalCurveModel gc;
  std::vector<GroupData> gds;
  std::vector<PicardCharTable> pcts;
  for (size_t t = 0; t < fan.triangles().size(); ++t) {
    const auto& tv = fan.triangles()[t].v;
    ConeNormalForm nf = normalize_cone(fan.points()[tv[0]], fan.points()[tv[1]],
                                       fan.points()[tv[2]]);
    GroupData gd = structure_group(nf);
    gc.cones.push_back(affine_curve(nf));
    pcts.push_back(picard_char_table(fan, int(t), gd));
    gds.push_back(std::move(gd));
  }

  for (int e : fan.interior_edges()) {
    const auto& fe = fan.edges()[e];
    std::vector<int> edge_rays{fe.v[0], fe.v[1]};
    CokernelModel ck = stacky_picard(fan, edge_rays);
    EdgeIdentification id;
    id.edge = e;
    id.circles = ck.torsion_order();
    int64_t len = std::gcd(std::abs(fan.points()[fe.v[0]].x - fan.points()[fe.v[1]].x),
                           std::abs(fan.points()[fe.v[0]].y - fan.points()[fe.v[1]].y));
    if (id.circles != len)
      throw std::logic_error("glue_curve: |G_tau| differs from the edge lattice length");
    id.labels = ck.torsion_elements();

    for (int side = 0; side < 2; ++side) {
      int t = fe.tris[side];
      const GroupData& gd = gds[t];
      int slot = gd.nf.slot[fan.omitted_position(e, t)];
      int rho = gd.rho[slot - 1];
      // boundary circles on this side = orbits of rho on the characters;
      // each orbit must restrict to a single edge label, bijectively
      std::vector<int> rep_of_label(id.labels.size(), -1);
      std::vector<bool> seen(size_t(gd.order()), false);
      int64_t orbits = 0;
      for (int chi = 0; chi < gd.order(); ++chi) {
        if (seen[chi]) continue;
        ++orbits;
        std::vector<int64_t> label = restrict_char_to_edge(fan, pcts[t], e, ck, chi);
        int cur = chi;
        do {
          seen[cur] = true;
          auto l2 = restrict_char_to_edge(fan, pcts[t], e, ck, cur);
          if (l2 != label)
            throw std::logic_error("glue_curve: edge label not constant on a circle");
          cur = gd.chi_mul(cur, rho);
        } while (cur != chi);
        auto it = std::find(id.labels.begin(), id.labels.end(), label);
        if (it == id.labels.end()) throw std::logic_error("glue_curve: unknown edge label");
        size_t pos = size_t(it - id.labels.begin());
        if (rep_of_label[pos] >= 0)
          throw std::logic_error("glue_curve: two circles share an edge label");
        rep_of_label[pos] = chi;
      }
      if (orbits != id.circles)
        throw std::logic_error("glue_curve: circle count differs between the two cones");
      id.orbit_reps[side].assign(rep_of_label.begin(), rep_of_label.end());
    }
    gc.interior.push_back(std::move(id));
  }

  PickCounts pc = pick_counts(fan.hull());
  gc.genus = pc.interior;
  gc.punctures = pc.boundary;
  gc.chi = 2 - 2 * gc.genus - gc.punctures;
  int64_t chi_sum = 0;
  for (size_t t = 0; t < fan.triangles().size(); ++t) chi_sum -= fan.doubled_area(int(t));
  if (chi_sum != gc.chi)
    throw std::logic_error("glue_curve: additive Euler characteristic disagrees with Pick");
  return gc;
}

}  // namespace hms
