#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hms/curve.hpp"
#include "hms/fan.hpp"
#include "hms/fukaya.hpp"
#include "hms/mfside.hpp"
#include "hms/ribbon.hpp"

namespace hms {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;                // short human-readable note
  nlohmann::json counterexample;     // structured coordinates on failure
};

struct Topology {
  int64_t genus = 0, punctures = 0, chi = 0;
};

struct HmsReport {
  nlohmann::json input;
  int trunc = 30;
  std::vector<CheckResult> checks;
  Topology topology;

  bool all_pass() const;
  void append(const HmsReport& other, const std::string& prefix);
  nlohmann::json to_json() const;  // stable schema, version field 1
  std::string to_text() const;
};

// affine suite for one normal form: both sides of the Hom tables plus the
// orbit, Euler characteristic, lattice-count and monodromy invariants
HmsReport check_affine(const ConeNormalForm& nf, int N);

struct DescentVertex {
  int tri = -1;
  ConeNormalForm nf;
  int64_t group_order = 1;
};

struct DescentEdge {
  int edge = -1;
  int64_t group_order = 1;  // |G_tau^dual|
  std::vector<std::vector<int64_t>> labels;
};

struct DescentArrow {
  int edge = -1, tri = -1;
  int slot = 0;  // the chart slot: rho_slot becomes invertible
  // per generator of the cone: index into the edge labels, -1 when the
  // generator restricts to zero on this chart
  std::vector<int> gen_to_label;
};

struct DescentDiagram {
  std::vector<DescentVertex> vertices;
  std::vector<DescentEdge> edges;    // one per fan edge, interior and boundary
  std::vector<DescentArrow> arrows;  // one per (edge, adjacent cone)
};

// Throws std::logic_error when the two restriction routes to an interior edge
// disagree; that is a theorem-level failure and aborts the run.
DescentDiagram build_descent(const StackyFan& fan, int N);

HmsReport check_global(const StackyFan& fan, int N);

HmsReport crepant_compare(const StackyFan& a, const StackyFan& b, int N);

// DOT exports for the CLI
std::string export_dual_graph(const StackyFan& fan);
std::string export_global_skeleton(const StackyFan& fan);
std::string export_descent(const StackyFan& fan, int N);

// topology-only summary (hms analyze)
nlohmann::json analyze_fan(const StackyFan& fan);

}  // namespace hms
