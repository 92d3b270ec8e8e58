#include "hms/hmscheck.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace hms {

namespace {

nlohmann::json fan_json(const StackyFan& fan) {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : fan.points()) pts.push_back({p.x, p.y});
  nlohmann::json tris = nlohmann::json::array();
  for (const auto& t : fan.triangles()) tris.push_back({t.v[0], t.v[1], t.v[2]});
  return {{"points", pts}, {"triangles", tris}};
}

nlohmann::json gen_json(const GroupData& gd, const GeneratorId& g) {
  return {{"axis", g.axis}, {"theta", gd.group.tuple_str(g.theta)}};
}

nlohmann::json mismatch_json(const GroupData& gd, const GeneratorId& a, const GeneratorId& b,
                             Parity p, int w, int64_t lhs, int64_t rhs,
                             const std::string& lhs_route, const std::string& rhs_route) {
  return {{"from", gen_json(gd, a)},      {"to", gen_json(gd, b)},
          {"parity", p == Parity::Even ? "even" : "odd"},
          {"weight", w},                  {"lhs", lhs},
          {"rhs", rhs},                   {"lhs_route", lhs_route},
          {"rhs_route", rhs_route}};
}

// first entrywise disagreement between two tables, as a counterexample
bool tables_equal(const GroupData& gd, const HomTable& x, const HomTable& y,
                  const std::string& xr, const std::string& yr, nlohmann::json& cex) {
  for (int64_t i = 0; i < x.size(); ++i)
    for (int64_t j = 0; j < x.size(); ++j) {
      GeneratorId a = x.unflat(i), b = x.unflat(j);
      Parity p;
      int w;
      if (GradedSeries::first_mismatch(x.at(a, b), y.at(a, b), p, w)) {
        cex = mismatch_json(gd, a, b, p, w, x.at(a, b).at(p, w), y.at(a, b).at(p, w), xr, yr);
        return false;
      }
    }
  return true;
}

struct ConeContext {
  ConeNormalForm nf;
  GroupData gd;
  PicardCharTable pct;
};

std::vector<ConeContext> cone_contexts(const StackyFan& fan) {
  std::vector<ConeContext> out;
  for (size_t t = 0; t < fan.triangles().size(); ++t) {
    const auto& tv = fan.triangles()[t].v;
    ConeContext c;
    c.nf = normalize_cone(fan.points()[tv[0]], fan.points()[tv[1]], fan.points()[tv[2]]);
    c.gd = structure_group(c.nf);
    c.pct = picard_char_table(fan, int(t), c.gd);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<int> used_rays(const StackyFan& fan) {
  std::set<int> used;
  for (const auto& t : fan.triangles())
    for (int v : t.v) used.insert(v);
  return {used.begin(), used.end()};
}

void run_section(HmsReport& rep, const std::string& name,
                 const std::function<void(CheckResult&)>& body) {
  CheckResult res;
  res.name = name;
  try {
    body(res);
  } catch (const std::exception& e) {
    res.pass = false;
    if (res.counterexample.is_null()) res.counterexample = {{"error", e.what()}};
  }
  rep.checks.push_back(std::move(res));
}

void fail(CheckResult& res, nlohmann::json cex) {
  res.pass = false;
  if (res.counterexample.is_null()) res.counterexample = std::move(cex);
}

}  // namespace

bool HmsReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

void HmsReport::append(const HmsReport& other, const std::string& prefix) {
  for (const auto& c : other.checks) {
    CheckResult r = c;
    r.name = prefix + r.name;
    checks.push_back(std::move(r));
  }
}

nlohmann::json HmsReport::to_json() const {
  nlohmann::json jchecks = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json jc = {{"name", c.name}, {"status", c.pass ? "pass" : "fail"}};
    if (!c.detail.empty()) jc["detail"] = c.detail;
    if (!c.counterexample.is_null()) jc["counterexample"] = c.counterexample;
    jchecks.push_back(std::move(jc));
  }
  return {{"schema", 1},
          {"input", input},
          {"truncate", trunc},
          {"checks", jchecks},
          {"topology",
           {{"genus", topology.genus}, {"punctures", topology.punctures},
            {"chi", topology.chi}}}};
}

std::string HmsReport::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << "\n";
    if (!c.pass && !c.counterexample.is_null())
      os << "       counterexample: " << c.counterexample.dump() << "\n";
  }
  os << "topology: genus " << topology.genus << ", punctures " << topology.punctures
     << ", chi " << topology.chi << "\n";
  os << (all_pass() ? "ALL CHECKS PASSED" : "CHECKS FAILED") << "\n";
  return os.str();
}

HmsReport check_affine(const ConeNormalForm& nf, int N) {
  HmsReport rep;
  rep.trunc = N;
  rep.input = {{"r", nf.r}, {"m", nf.m}, {"s", nf.s}};
  AffineCurveModel curve = affine_curve(nf);
  rep.topology = {curve.genus, curve.total_punctures(),
                  2 - 2 * curve.genus - curve.total_punctures()};

  GroupData gd = structure_group(nf);

  run_section(rep, "group_law", [&](CheckResult& res) {
    const int64_t n = nf.r * nf.m;
    if (gd.order() != n) fail(res, {{"error", "|G| != r*m"}, {"order", gd.order()}});
    if (gd.chi_mul(gd.chi_mul(gd.rho[0], gd.rho[1]), gd.rho[2]) != gd.group.identity())
      fail(res, {{"error", "rho1 rho2 rho3 != 1"}});
    for (int i = 0; i < 3; ++i) {
      int64_t ker = 0;
      for (int g = 0; g < gd.order(); ++g)
        if (gd.eval(gd.rho[i], g) == 0) ++ker;
      int64_t ord = gd.group.element_order(gd.rho[i]);
      auto [mi, ri] = gd.seq[i];
      if (ker != mi || ord != ri || mi * ri != n)
        fail(res, {{"error", "gcd formula disagrees with kernel enumeration"},
                   {"i", i + 1},
                   {"formula", {mi, ri}},
                   {"enumerated", {ker, ord}}});
    }
    res.detail = "|G| = " + std::to_string(gd.order());
  });

  run_section(rep, "hurwitz_pick", [&](CheckResult& res) {
    std::vector<LatticePoint> delta{{0, 0}, {0, nf.m}, {nf.r, -nf.s}};
    PickCounts pick = pick_counts(delta);
    if (curve.genus != pick.interior)
      fail(res, {{"error", "Hurwitz genus != interior lattice count"},
                 {"hurwitz", curve.genus},
                 {"pick", pick.interior}});
    if (curve.total_punctures() != pick.boundary)
      fail(res, {{"error", "puncture count != boundary lattice count"},
                 {"punctures", curve.total_punctures()},
                 {"pick", pick.boundary}});
    // m_i is the lattice length of the i-th edge of the moment triangle
    int64_t e1 = nf.m;
    int64_t e2 = std::gcd(nf.r, nf.s);
    int64_t e3 = std::gcd(nf.r, nf.m + nf.s);
    if (curve.punctures != std::array<int64_t, 3>{e1, e2, e3})
      fail(res, {{"error", "m_i differs from moment-triangle edge lengths"}});
    res.detail = "genus " + std::to_string(curve.genus);
  });

  run_section(rep, "monodromy_matching", [&](CheckResult& res) {
    MonodromyData md = monodromy(gd);
    // global sign convention: sigma_X = rho_1 and sigma_Y = rho_2 on the nose
    if (md.sigma_x != gd.rho[0])
      fail(res, {{"error", "sigma_X != rho_1"},
                 {"sigma_x", gd.group.tuple_str(md.sigma_x)},
                 {"rho_1", gd.group.tuple_str(gd.rho[0])}});
    if (md.sigma_y != gd.rho[1])
      fail(res, {{"error", "sigma_Y != rho_2"},
                 {"sigma_y", gd.group.tuple_str(md.sigma_y)},
                 {"rho_2", gd.group.tuple_str(gd.rho[1])}});
    if (md.orbits_x != gd.seq[0].first || md.orbit_size_x != gd.seq[0].second)
      fail(res, {{"error", "sigma_X orbits differ from (m_1, r_1)"},
                 {"orbits", {md.orbits_x, md.orbit_size_x}}});
    if (md.orbits_y != gd.seq[1].first || md.orbit_size_y != gd.seq[1].second)
      fail(res, {{"error", "sigma_Y orbits differ from (m_2, r_2)"},
                 {"orbits", {md.orbits_y, md.orbit_size_y}}});
  });

  LabeledSkeleton sk = LabeledSkeleton::build(gd);

  run_section(rep, "skeleton_structure", [&](CheckResult& res) {
    for (int side = 0; side < 2; ++side) {
      int slot = sk.slots()[side];
      auto circles = sk.circles_at_slot(slot);
      auto [mi, ri] = gd.seq[slot - 1];
      if (int64_t(circles.size()) != mi)
        fail(res, {{"error", "circle count != m_i"}, {"slot", slot}});
      for (const auto* c : circles)
        if (int64_t(c->labels.size()) != ri)
          fail(res, {{"error", "interval count != r_i"}, {"slot", slot}});
    }
    int64_t expect = 2 - 2 * curve.genus - curve.total_punctures();
    if (sk.chi() != expect)
      fail(res, {{"error", "skeleton Euler characteristic"},
                 {"chi", sk.chi()},
                 {"expected", expect}});
    res.detail = "chi = " + std::to_string(sk.chi());
  });

  run_section(rep, "affine_hms", [&](CheckResult& res) {
    HomTable a = affine_hom_table(sk, N);
    HomTable b = ext_table(gd, N, ExtRoute::Affine);
    HomTable b2 = ext_table(gd, N, ExtRoute::Mf);
    nlohmann::json cex;
    if (!tables_equal(gd, a, b, "skeleton", "ext_affine", cex)) fail(res, cex);
    else if (!tables_equal(gd, b, b2, "ext_affine", "ext_mf", cex)) fail(res, cex);
    res.detail = std::to_string(a.size() * a.size()) + " pair comparisons";
  });

  return rep;
}

DescentDiagram build_descent(const StackyFan& fan, int N) {
  (void)N;
  DescentDiagram d;
  auto ctx = cone_contexts(fan);
  for (size_t t = 0; t < ctx.size(); ++t)
    d.vertices.push_back({int(t), ctx[t].nf, ctx[t].gd.order()});

  std::vector<CokernelModel> edge_models;
  for (size_t e = 0; e < fan.edges().size(); ++e) {
    const auto& fe = fan.edges()[e];
    CokernelModel ck = stacky_picard(fan, {fe.v[0], fe.v[1]});
    DescentEdge de;
    de.edge = int(e);
    de.group_order = ck.torsion_order();
    de.labels = ck.torsion_elements();
    d.edges.push_back(std::move(de));
    edge_models.push_back(std::move(ck));
  }

  for (size_t e = 0; e < fan.edges().size(); ++e) {
    const auto& fe = fan.edges()[e];
    for (int side = 0; side < 2; ++side) {
      int t = fe.tris[side];
      if (t < 0) continue;
      DescentArrow ar;
      ar.edge = int(e);
      ar.tri = t;
      ar.slot = ctx[t].gd.nf.slot[fan.omitted_position(int(e), t)];
      for (const auto& g : generator_set(ctx[t].gd)) {
        if (g.axis == ar.slot) {
          ar.gen_to_label.push_back(-1);  // the axis is removed from this chart
          continue;
        }
        auto label = restrict_char_to_edge(fan, ctx[t].pct, int(e), edge_models[e], g.theta);
        auto it = std::find(d.edges[e].labels.begin(), d.edges[e].labels.end(), label);
        if (it == d.edges[e].labels.end())
          throw std::logic_error("build_descent: restriction hit an unknown edge label");
        ar.gen_to_label.push_back(int(it - d.edges[e].labels.begin()));
      }
      d.arrows.push_back(std::move(ar));
    }
  }

  // the two routes whole -> cone -> edge must agree element by element
  std::vector<int> rays = used_rays(fan);
  CokernelModel whole = stacky_picard(fan, rays);
  std::vector<std::vector<int64_t>> sample = whole.torsion_elements();
  for (int i = 0; i < whole.ambient_rank(); ++i) {
    std::vector<int64_t> basis(whole.ambient_rank(), 0);
    basis[i] = 1;
    sample.push_back(whole.canon(basis));
  }
  for (int e : fan.interior_edges()) {
    const auto& fe = fan.edges()[e];
    std::vector<int> edge_rays{fe.v[0], fe.v[1]};
    for (const auto& elem : sample) {
      std::vector<std::vector<int64_t>> via;
      for (int side = 0; side < 2; ++side) {
        int t = fe.tris[side];
        auto in_cone = picard_project(whole, rays, ctx[t].pct.coker, ctx[t].pct.rays, elem);
        via.push_back(picard_project(ctx[t].pct.coker, ctx[t].pct.rays, edge_models[e],
                                     edge_rays, in_cone));
      }
      if (via[0] != via[1])
        throw std::logic_error(
            "build_descent: the two restriction routes to an interior edge disagree");
    }
  }
  return d;
}

HmsReport check_global(const StackyFan& fan, int N) {
  HmsReport rep;
  rep.trunc = N;
  rep.input = fan_json(fan);

  auto ctx = cone_contexts(fan);

  run_section(rep, "curve_gluing", [&](CheckResult& res) {
    GlobalCurveModel gc = glue_curve(fan);
    rep.topology = {gc.genus, gc.punctures, gc.chi};
    res.detail = "genus " + std::to_string(gc.genus) + ", punctures " +
                 std::to_string(gc.punctures);
  });

  // (i) per-cone affine suites
  for (size_t t = 0; t < ctx.size(); ++t) {
    HmsReport sub = check_affine(ctx[t].nf, N);
    rep.append(sub, "cone" + std::to_string(t) + ":");
  }

  // (ii) descent diagram: restriction routes and label bookkeeping
  run_section(rep, "descent_squares", [&](CheckResult& res) {
    DescentDiagram d = build_descent(fan, N);
    // generator circles on the canonical skeleton carry the same labels as the
    // chart restriction, wherever the skeleton exposes them
    for (size_t t = 0; t < ctx.size(); ++t) {
      LabeledSkeleton sk = LabeledSkeleton::build(ctx[t].gd);
      for (const auto& ar : d.arrows) {
        if (ar.tri != int(t) || ar.slot > 2) continue;
        CokernelModel ck = stacky_picard(
            fan, {fan.edges()[ar.edge].v[0], fan.edges()[ar.edge].v[1]});
        int j = 3 - ar.slot;  // generators whose circles sit at this edge
        for (int theta = 0; theta < ctx[t].gd.order(); ++theta) {
          GeneratorId g{j, theta};
          int interval = generator_interval(ctx[t].gd, g);
          auto [ci, pos] = sk.locate(ar.slot, interval);
          (void)pos;
          auto skel_label = circle_edge_label(fan, ctx[t].pct, ar.edge, ck, ctx[t].gd,
                                              sk.circles()[ci]);
          auto chart_label =
              restrict_char_to_edge(fan, ctx[t].pct, ar.edge, ck, theta);
          if (skel_label != chart_label) {
            fail(res, {{"error", "skeleton circle label differs from chart restriction"},
                       {"cone", t},
                       {"edge", ar.edge},
                       {"generator", gen_json(ctx[t].gd, g)}});
            return;
          }
        }
      }
    }
    res.detail = std::to_string(d.arrows.size()) + " restriction arrows";
  });

  // (iii) edge data: A-side circle series vs B-side chart series, both routes
  run_section(rep, "edge_match", [&](CheckResult& res) {
    for (int e : fan.interior_edges()) {
      const auto& fe = fan.edges()[e];
      std::vector<int> edge_rays{fe.v[0], fe.v[1]};
      CokernelModel ck = stacky_picard(fan, edge_rays);
      for (int side = 0; side < 2; ++side) {
        int t = fe.tris[side];
        const GroupData& gd = ctx[t].gd;
        int slot = gd.nf.slot[fan.omitted_position(e, t)];
        int acting = gd.rho[slot - 1];
        int64_t r_i = gd.seq[slot - 1].second;
        for (int theta = 0; theta < gd.order(); ++theta)
          for (int theta_p = 0; theta_p < gd.order(); ++theta_p) {
            GradedSeries chart = ext_chart(gd.group, acting, theta, theta_p, N);
            GradedSeries circ = circle_hom_series(gd.group, acting, gd.chi_inv(theta),
                                                  gd.chi_inv(theta_p), N);
            Parity p;
            int w;
            if (GradedSeries::first_mismatch(chart, circ, p, w)) {
              fail(res, {{"error", "chart series differs from circle series"},
                         {"edge", e},
                         {"cone", t},
                         {"theta", gd.group.tuple_str(theta)},
                         {"theta_p", gd.group.tuple_str(theta_p)},
                         {"weight", w}});
              return;
            }
            // support: nonzero exactly when both restrict to the same circle
            bool same_label =
                restrict_char_to_edge(fan, ctx[t].pct, e, ck, theta) ==
                restrict_char_to_edge(fan, ctx[t].pct, e, ck, theta_p);
            if (same_label == chart.is_zero()) {
              fail(res, {{"error", "chart support differs from the circle labels"},
                         {"edge", e},
                         {"cone", t},
                         {"theta", gd.group.tuple_str(theta)},
                         {"theta_p", gd.group.tuple_str(theta_p)}});
              return;
            }
            // a nonzero series is one full progression of gap r_i, dims 1
            if (!chart.is_zero()) {
              int64_t nonzero = 0;
              for (int a = -N; a <= N; ++a) {
                int64_t v = chart.at(Parity::Even, a);
                if (v != 0 && v != 1) {
                  fail(res, {{"error", "chart entry above one"}, {"edge", e}});
                  return;
                }
                if (v == 1 && chart.at(Parity::Even, int(a - r_i)) != 1 && a - r_i >= -N) {
                  fail(res, {{"error", "chart progression gap differs from r_i"},
                             {"edge", e},
                             {"cone", t}});
                  return;
                }
                nonzero += v;
              }
              if (nonzero == 0) {
                fail(res, {{"error", "empty progression"}, {"edge", e}});
                return;
              }
            }
          }
      }
    }
    res.detail = std::to_string(fan.interior_edges().size()) + " interior edges";
  });

  // (iv) glued skeleton Euler characteristic
  run_section(rep, "global_chi", [&](CheckResult& res) {
    std::vector<GroupData> gds;
    std::vector<PicardCharTable> pcts;
    for (auto& c : ctx) {
      gds.push_back(c.gd);
      pcts.push_back(c.pct);
    }
    auto placements = choose_placements(fan, gds);
    std::vector<LabeledSkeleton> skels;
    for (size_t t = 0; t < ctx.size(); ++t)
      skels.push_back(LabeledSkeleton::build(gds[t], placements[t]));
    GlobalSkeleton gs = glue_skeletons(fan, gds, skels, pcts);
    PickCounts pick = pick_counts(fan.hull());
    int64_t expect = 2 - 2 * pick.interior - pick.boundary;
    if (gs.chi != expect)
      fail(res, {{"error", "glued skeleton chi != 2 - 2g - b"},
                 {"chi", gs.chi},
                 {"expected", expect}});
    res.detail = "chi = " + std::to_string(gs.chi);
  });

  // (v) triple chart overlaps keep at least two invertible coordinates
  run_section(rep, "triple_overlap", [&](CheckResult& res) {
    const auto& tris = fan.triangles();
    for (size_t a = 0; a < tris.size(); ++a)
      for (size_t b = a + 1; b < tris.size(); ++b)
        for (size_t c = b + 1; c < tris.size(); ++c) {
          std::set<int> sa(tris[a].v.begin(), tris[a].v.end());
          int shared = 0;
          for (int v : tris[b].v)
            if (sa.count(v) && std::find(tris[c].v.begin(), tris[c].v.end(), v) !=
                                   tris[c].v.end())
              ++shared;
          if (shared > 1)
            fail(res, {{"error", "triple overlap cone has dimension above one"},
                       {"triangles", {a, b, c}}});
        }
  });

  return rep;
}

HmsReport crepant_compare(const StackyFan& a, const StackyFan& b, int N) {
  HmsReport rep;
  rep.trunc = N;
  rep.input = {{"first", fan_json(a)}, {"second", fan_json(b)}};

  run_section(rep, "polygon_match", [&](CheckResult& res) {
    auto canon = [](std::vector<LatticePoint> h) {
      auto mn = std::min_element(h.begin(), h.end());
      std::rotate(h.begin(), mn, h.end());
      return h;
    };
    if (canon(a.hull()) != canon(b.hull()))
      fail(res, {{"error", "fans triangulate different polygons"}});
  });

  GlobalCurveModel ga, gb;
  run_section(rep, "crepant_invariants", [&](CheckResult& res) {
    ga = glue_curve(a);
    gb = glue_curve(b);
    rep.topology = {ga.genus, ga.punctures, ga.chi};
    if (ga.genus != gb.genus || ga.punctures != gb.punctures || ga.chi != gb.chi)
      fail(res, {{"error", "mirror curve topology differs"},
                 {"first", {ga.genus, ga.punctures, ga.chi}},
                 {"second", {gb.genus, gb.punctures, gb.chi}}});
    else
      res.detail = "genus " + std::to_string(ga.genus) + ", punctures " +
                   std::to_string(ga.punctures) + ", chi " + std::to_string(ga.chi);
  });

  run_section(rep, "boundary_punctures", [&](CheckResult& res) {
    auto per_hull_edge = [](const StackyFan& f) {
      std::vector<int64_t> out;
      const auto& h = f.hull();
      auto mn = std::min_element(h.begin(), h.end());
      size_t start = size_t(mn - h.begin());
      for (size_t i = 0; i < h.size(); ++i) {
        const auto& u = h[(start + i) % h.size()];
        const auto& v = h[(start + i + 1) % h.size()];
        out.push_back(std::gcd(std::abs(u.x - v.x), std::abs(u.y - v.y)));
      }
      return out;
    };
    if (per_hull_edge(a) != per_hull_edge(b))
      fail(res, {{"error", "per-boundary-edge puncture counts differ"}});
  });

  rep.append(check_global(a, N), "A:");
  rep.append(check_global(b, N), "B:");
  return rep;
}

std::string export_dual_graph(const StackyFan& fan) {
  std::ostringstream os;
  os << "graph dual {\n";
  for (size_t t = 0; t < fan.triangles().size(); ++t) {
    const auto& tv = fan.triangles()[t].v;
    os << "  t" << t << " [label=\"cone " << t << " (" << tv[0] << "," << tv[1] << ","
       << tv[2] << ")\"];\n";
  }
  for (int e : fan.interior_edges()) {
    const auto& fe = fan.edges()[e];
    os << "  t" << fe.tris[0] << " -- t" << fe.tris[1] << " [label=\"edge {" << fe.v[0]
       << "," << fe.v[1] << "}\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string export_global_skeleton(const StackyFan& fan) {
  auto ctx = cone_contexts(fan);
  std::vector<GroupData> gds;
  std::vector<PicardCharTable> pcts;
  for (auto& c : ctx) {
    gds.push_back(c.gd);
    pcts.push_back(c.pct);
  }
  auto placements = choose_placements(fan, gds);
  std::vector<LabeledSkeleton> skels;
  for (size_t t = 0; t < ctx.size(); ++t)
    skels.push_back(LabeledSkeleton::build(gds[t], placements[t]));
  GlobalSkeleton gs = glue_skeletons(fan, gds, skels, pcts);
  std::map<int, std::string> vn, en;
  for (const auto& [key, vid] : gs.foot_of)
    vn[vid] = "t" + std::to_string(key[0]) + ":s" + std::to_string(key[1]) + ":" +
              gds[key[0]].group.tuple_str(key[2]);
  return gs.graph.to_dot(vn, en);
}

std::string export_descent(const StackyFan& fan, int N) {
  DescentDiagram d = build_descent(fan, N);
  std::ostringstream os;
  os << "digraph descent {\n";
  for (const auto& v : d.vertices)
    os << "  cone" << v.tri << " [shape=box,label=\"cone " << v.tri << " (r,m,s)=("
       << v.nf.r << "," << v.nf.m << "," << v.nf.s << ") |G|=" << v.group_order
       << "\"];\n";
  for (const auto& e : d.edges)
    os << "  edge" << e.edge << " [label=\"edge " << e.edge << " |G|=" << e.group_order
       << "\"];\n";
  for (const auto& ar : d.arrows)
    os << "  cone" << ar.tri << " -> edge" << ar.edge << " [label=\"slot " << ar.slot
       << "\"];\n";
  os << "}\n";
  return os.str();
}

nlohmann::json analyze_fan(const StackyFan& fan) {
  nlohmann::json out;
  out["input"] = fan_json(fan);
  nlohmann::json cones = nlohmann::json::array();
  for (size_t t = 0; t < fan.triangles().size(); ++t) {
    const auto& tv = fan.triangles()[t].v;
    ConeNormalForm nf =
        normalize_cone(fan.points()[tv[0]], fan.points()[tv[1]], fan.points()[tv[2]]);
    AffineCurveModel c = affine_curve(nf);
    cones.push_back({{"triangle", {tv[0], tv[1], tv[2]}},
                     {"normal_form", {nf.r, nf.m, nf.s}},
                     {"group_order", c.group_order},
                     {"punctures", {c.punctures[0], c.punctures[1], c.punctures[2]}},
                     {"genus", c.genus}});
  }
  out["cones"] = cones;
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : fan.edges()) {
    int64_t len = std::gcd(std::abs(fan.points()[e.v[0]].x - fan.points()[e.v[1]].x),
                           std::abs(fan.points()[e.v[0]].y - fan.points()[e.v[1]].y));
    edges.push_back(
        {{"points", {e.v[0], e.v[1]}}, {"interior", e.interior}, {"lattice_length", len}});
  }
  out["edges"] = edges;
  PickCounts pick = pick_counts(fan.hull());
  out["topology"] = {{"genus", pick.interior},
                     {"punctures", pick.boundary},
                     {"chi", 2 - 2 * pick.interior - pick.boundary}};
  return out;
}

}  // namespace hms
