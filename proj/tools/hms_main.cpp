#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hms/hmscheck.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

int default_truncate() {
  if (const char* env = std::getenv("HMS_TRUNCATE")) {
    try {
      int n = std::stoi(env);
      if (n >= 0) return n;
    } catch (...) {
    }
    std::cerr << "hms: ignoring invalid HMS_TRUNCATE value\n";
  }
  return 30;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw hms::FanError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

hms::StackyFan load_fan(const std::string& path) {
  return hms::StackyFan::parse(read_file(path));
}

int emit(const hms::HmsReport& rep, const std::string& format) {
  if (format == "json") std::cout << rep.to_json().dump(2) << "\n";
  else std::cout << rep.to_text();
  return rep.all_pass() ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"homological mirror symmetry checks for toric Calabi-Yau 3-orbifolds"};
  app.require_subcommand(1);

  int trunc = default_truncate();
  std::string format = "text";

  auto* affine = app.add_subcommand("affine", "affine suite for one cone normal form");
  int64_t r = 1, m = 1, s = 0;
  affine->add_option("--r", r, "normal form r")->required();
  affine->add_option("--m", m, "normal form m")->required();
  affine->add_option("--s", s, "normal form s");
  affine->add_option("--truncate", trunc, "series truncation");
  affine->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* check = app.add_subcommand("check", "full local-to-global suite for a fan");
  std::string fan_path;
  check->add_option("fan", fan_path, "fan JSON file")->required();
  check->add_option("--truncate", trunc, "series truncation");
  check->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* crepant = app.add_subcommand("crepant", "compare two triangulations of one polygon");
  std::string fan_a, fan_b;
  crepant->add_option("fan1", fan_a)->required();
  crepant->add_option("fan2", fan_b)->required();
  crepant->add_option("--truncate", trunc, "series truncation");
  crepant->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* exp = app.add_subcommand("export", "DOT export of derived structures");
  std::string what = "skeleton", out_path, exp_fan;
  exp->add_option("--what", what)->check(CLI::IsMember({"skeleton", "dual", "descent"}));
  exp->add_option("fan", exp_fan)->required();
  exp->add_option("--out", out_path, "output DOT file")->required();

  auto* analyze = app.add_subcommand("analyze", "topology only, no series");
  std::string an_fan;
  analyze->add_option("fan", an_fan)->required();
  analyze->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (*affine) {
      if (r < 1 || m < 1 || s < 0 || s >= r)
        throw hms::FanError("normal form requires r, m >= 1 and 0 <= s < r");
      hms::ConeNormalForm nf;
      nf.r = r;
      nf.m = m;
      nf.s = s;
      return emit(hms::check_affine(nf, trunc), format);
    }
    if (*check) return emit(hms::check_global(load_fan(fan_path), trunc), format);
    if (*crepant)
      return emit(hms::crepant_compare(load_fan(fan_a), load_fan(fan_b), trunc), format);
    if (*exp) {
      hms::StackyFan fan = load_fan(exp_fan);
      std::string dot;
      if (what == "dual") dot = hms::export_dual_graph(fan);
      else if (what == "descent") dot = hms::export_descent(fan, trunc);
      else dot = hms::export_global_skeleton(fan);
      std::ofstream out(out_path);
      if (!out) throw hms::FanError("cannot write " + out_path);
      out << dot;
      return kExitPass;
    }
    if (*analyze) {
      nlohmann::json j = hms::analyze_fan(load_fan(an_fan));
      if (format == "json") {
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "topology: genus " << j["topology"]["genus"] << ", punctures "
                  << j["topology"]["punctures"] << ", chi " << j["topology"]["chi"] << "\n";
        for (const auto& c : j["cones"])
          std::cout << "cone " << c["triangle"].dump() << ": (r,m,s) = "
                    << c["normal_form"].dump() << ", |G| = " << c["group_order"]
                    << ", genus " << c["genus"] << "\n";
        for (const auto& e : j["edges"])
          std::cout << "edge " << e["points"].dump() << ": "
                    << (e["interior"].get<bool>() ? "interior" : "boundary")
                    << ", lattice length " << e["lattice_length"] << "\n";
      }
      return kExitPass;
    }
  } catch (const hms::FanError& e) {
    std::cerr << "hms: input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "hms: check aborted: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitInputError;
}
