#pragma once

// Command-line front end. run_cli() is the whole program minus process
// setup so it can be driven in-process by tests.
//
// Exit codes: 0 success, 1 internal invariant violation, 2 usage or
// precondition error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rcone/criterion.hpp"
#include "rcone/json_io.hpp"
#include "rcone/reproduction.hpp"
#include "rcone/search.hpp"

namespace rcone::cli {

inline constexpr const char* kToolName = "rcone";
inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int { kOk = 0, kInternal = 1, kUsage = 2 };

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline SurfaceClass parse_pair(const std::string& text, const char* flag) {
  const auto comma = text.find(',');
  if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos)
    throw UsageError(std::string(flag) + " expects a pair 'a,b', got '" + text + "'");
  auto parse_one = [&](const std::string& part) {
    std::size_t used = 0;
    Int v = 0;
    try {
      v = std::stoll(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (part.empty() || used != part.size())
      throw UsageError(std::string(flag) + ": '" + part + "' is not an integer");
    return v;
  };
  return {parse_one(text.substr(0, comma)), parse_one(text.substr(comma + 1))};
}

struct RunConfig {
  Int genus = 0;
  std::string mode = "generic";
  std::optional<std::string> surface_class;
  std::optional<Int> curve_n;
  std::string L = "1,1";
  std::optional<std::string> D;
  std::optional<std::string> grid;
  std::string format = "text";
  std::optional<std::string> output_path;

  CurveModel model() const {
    if (genus < 0) throw UsageError("--genus must be >= 0");
    return CurveModel(genus, point_mode_from_string(mode));
  }
};

inline std::string describe(const CurveModel& m) {
  return "genus " + std::to_string(m.genus()) + ", " + std::string(to_string(m.mode())) + " point";
}

// "h1 = 2" or "h0 in [2,3]"
inline std::string render_dim(const std::string& label, const DimValue& d) {
  if (d.is_exact()) return label + " = " + std::to_string(d.value());
  return label + " in [" + std::to_string(d.lo()) + "," + std::to_string(d.hi()) + "]";
}

inline Json envelope(const std::string& command, Json result) {
  Json j = Json::object();
  j["header"] = Json{{"tool", kToolName}, {"version", kVersion}, {"command", command}};
  j["result"] = std::move(result);
  return j;
}

inline std::string render_certificate_text(const Certificate& c) {
  std::ostringstream os;
  os << "problem: " << describe(c.problem.model) << ", L=" << c.problem.L << ", D=" << c.problem.D << "\n";
  switch (c.verdict) {
    case Verdict::AllVanish:
      os << "verdict: all-vanish (H^i(X, L^m(-D)) = 0 for i=1,2 and all m >= 0)\n";
      break;
    case Verdict::Witness:
      os << "verdict: witness i=" << c.witness->degree << " m=" << c.witness->m << " "
         << render_dim("h" + std::to_string(c.witness->degree), c.witness->dim) << "\n";
      break;
    case Verdict::Indeterminate:
      os << "verdict: indeterminate at";
      for (const auto& p : c.indeterminate) os << " (i=" << p.degree << ",m=" << p.m << ")";
      os << "\n";
      break;
  }
  os << "bound_m0: " << c.bound_m0 << "\n";
  os << "assumptions:\n";
  for (const auto& a : c.assumptions) os << "  - " << a << "\n";
  return os.str();
}

inline std::string cmd_cohomology(const RunConfig& cfg) {
  const CurveModel model = cfg.model();
  if (cfg.surface_class.has_value() == cfg.curve_n.has_value())
    throw UsageError("cohomology needs exactly one of --class a,b or --curve-n n");
  const bool json = cfg.format == "json";
  std::ostringstream os;
  if (cfg.surface_class) {
    const SurfaceClass c = parse_pair(*cfg.surface_class, "--class");
    if (json) {
      Json r{{"genus", model.genus()}, {"mode", std::string(to_string(model.mode()))}, {"class", Json::array({c.a, c.b})}};
      Json h = Json::array();
      for (int i = 0; i <= 2; ++i) h.push_back(to_json(kunneth_h(model, c, i)));
      r["h"] = h;
      return envelope("cohomology", r).dump(2) + "\n";
    }
    os << "X = C x P1, " << describe(model) << ", class " << c << "\n";
    for (int i = 0; i <= 2; ++i) os << render_dim("h" + std::to_string(i), kunneth_h(model, c, i)) << "\n";
  } else {
    const Int n = *cfg.curve_n;
    const DimValue h0 = h0_curve(model, n), h1 = h1_curve(model, n);
    if (json) {
      Json r{{"genus", model.genus()}, {"mode", std::string(to_string(model.mode()))}, {"curve_n", n},
             {"h", Json::array({to_json(h0), to_json(h1)})}};
      return envelope("cohomology", r).dump(2) + "\n";
    }
    os << "C, " << describe(model) << ", O_C(" << n << "Q)\n";
    os << render_dim("h0", h0) << "\n" << render_dim("h1", h1) << "\n";
  }
  return os.str();
}

inline std::string cmd_cone_check(const RunConfig& cfg) {
  if (!cfg.D) throw UsageError("cone-check needs --D a,b");
  const ConeProblem p{cfg.model(), parse_pair(cfg.L, "--L"), parse_pair(*cfg.D, "--D")};
  const Certificate cert = cone_check(p);
  if (auto check = verify_certificate(cert); !check) throw InvariantViolation("certificate failed self-check: " + check.reason);
  if (cfg.format == "json") return envelope("cone-check", to_json(cert)).dump(2) + "\n";
  return render_certificate_text(cert);
}

inline std::string render_search_text(const SearchReport& r) {
  const SearchSummary s = summarize(r);
  std::ostringstream os;
  os << "search: " << describe(r.model) << ", L=" << r.L << ", grid [0," << r.grid_a << "]x[0," << r.grid_b << "]\n";
  for (const auto& cell : r.cells) {
    os << "  D=" << cell.D << " ";
    const Certificate& c = cell.certificate;
    if (c.verdict == Verdict::Witness)
      os << "witness i=" << c.witness->degree << " m=" << c.witness->m << " dim=" << c.witness->dim.to_string();
    else
      os << to_string(c.verdict);
    os << " pattern=" << (cell.pattern_check ? "yes" : "no") << "\n";
  }
  os << "cells: " << s.cells << ", witnesses: " << s.witnesses << ", valid certificates: " << s.valid_certificates
     << "/" << s.cells << ", pattern match: " << s.pattern_matches << "/" << s.cells << "\n";
  switch (r.verdict) {
    case SearchVerdict::NonexistenceProved:
      os << "verdict: nonexistence proved (closed form valid for all a,b >= 0 and g >= " << r.proof->genus_min << ")\n";
      break;
    case SearchVerdict::RationalizerFound:
      os << "verdict: rationalizer " << *r.rationalizer << "\n";
      break;
    case SearchVerdict::GridOnly:
      os << "verdict: grid only (no rationalizer on the grid; no closed form for this polarization)\n";
      break;
  }
  return os.str();
}

inline std::string cmd_search(const RunConfig& cfg) {
  const CurveModel model = cfg.model();
  const SurfaceClass L = parse_pair(cfg.L, "--L");
  const SurfaceClass grid = cfg.grid ? parse_pair(*cfg.grid, "--grid") : SurfaceClass{10, 10};
  if (grid.a < 0 || grid.b < 0) throw UsageError("--grid limits must be >= 0");
  const SearchReport report = search_grid(model, L, grid.a, grid.b);
  if (cfg.format == "json") return envelope("search", to_json(report)).dump(2) + "\n";
  return render_search_text(report);
}

inline std::string cmd_reproduce(const RunConfig& cfg, bool& pass) {
  const Reproduction r = reproduce();
  pass = r.pass();
  if (cfg.format == "json") {
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    Json top{{"pass", r.top.pass}, {"bound_m0", r.top.bound_m0}, {"failing_m", detail::optional_int(r.top.failing_m)}};
    Json result{{"pass", pass},
                {"summary", r.headline()},
                {"checks", checks},
                {"cone_point", to_json(r.cone_point)},
                {"h1_of_L", to_json(r.h1_of_L)},
                {"top_cohomology", top},
                {"search", to_json(r.search)}};
    return envelope("reproduce", result).dump(2) + "\n";
  }
  std::ostringstream os;
  os << "reproduce: X = C x P1, " << describe(r.model) << ", L=" << r.L << ", grid [0," << r.grid << "]^2\n";
  for (const auto& c : r.checks) os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << "\n";
  os << r.headline() << "\n";
  if (pass)
    os << "top cohomology vanishes (necessary condition holds), yet no rationalizing divisor exists\n";
  os << "reproduce: " << (pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cohomology and cone-rationality certificates for X = C x P1", kToolName};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  RunConfig cfg;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--output", cfg.output_path, "Write output to this file instead of stdout");
  };
  auto add_model = [&](CLI::App* sub) {
    sub->add_option("--genus", cfg.genus, "Genus of the curve C")->required();
    sub->add_option("--mode", cfg.mode, "Assumption on the point Q")->check(CLI::IsMember({"generic", "arbitrary"}));
  };

  auto* cohomology = app.add_subcommand("cohomology", "h^i of a class (a,b) on C x P1, or of O_C(nQ)");
  add_model(cohomology);
  cohomology->add_option("--class", cfg.surface_class, "Class a,b = a C0 + b f (use --class=-1,2 for negatives)");
  cohomology->add_option("--curve-n", cfg.curve_n, "Degree n of O_C(nQ)");
  add_common(cohomology);

  auto* cone = app.add_subcommand("cone-check", "Decide H^i(X, L^m(-D)) = 0 for i > 0, m >= 0");
  add_model(cone);
  cone->add_option("--L", cfg.L, "Ample polarization a,b")->required();
  cone->add_option("--D", cfg.D, "Effective divisor class a,b")->required();
  add_common(cone);

  auto* search = app.add_subcommand("search", "Search effective classes for a rationalizing divisor");
  add_model(search);
  search->add_option("--L", cfg.L, "Ample polarization a,b")->required();
  search->add_option("--grid", cfg.grid, "Grid limits A,B (default 10,10)");
  add_common(search);

  auto* repro = app.add_subcommand("reproduce", "Genus-2 counterexample: non-rational cone point, no rationalizer");
  add_common(repro);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  std::string text;
  int code = kOk;
  try {
    if (*cohomology) {
      text = cmd_cohomology(cfg);
    } else if (*cone) {
      text = cmd_cone_check(cfg);
    } else if (*search) {
      text = cmd_search(cfg);
    } else {
      bool pass = false;
      text = cmd_reproduce(cfg, pass);
      if (!pass) code = kInternal;
    }
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (cfg.output_path) {
    std::ofstream file(*cfg.output_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open output file '" << *cfg.output_path << "'\n";
      return kUsage;
    }
    file << text;
  } else {
    out << text;
  }
  return code;
}

}  // namespace rcone::cli
