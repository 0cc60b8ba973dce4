#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "render.hpp"

namespace {

using namespace kuc;
using render::Format;
using render::Json;

constexpr int kExitOk = 0;
constexpr int kExitCap = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCheckFailed = 3;
constexpr int kExitPremiseNotMet = 4;

struct Options {
  std::string format = "table";
  int max_n = 0;

  std::string model_path;
  std::string formula_text;

  std::string property = "";
  bool check_all = false;
  std::string op = "k";

  std::string claim;
  std::string event_text;

  int n = 2;
  bool serial = false, reflexive = false, transitive = false, euclidean = false;
  bool partitional = false, non_partitional = false;
  bool sweep = false;
  std::string count_target, first_target, all_target;
  int jobs = 1;
};

Format format_of(const Options& o) { return o.format == "json" ? Format::Json : Format::Table; }

Caps caps_of(const Options& o) {
  Caps caps;
  if (o.max_n > 0) {
    caps.all_events_cap = o.max_n;
    caps.enum_cap = o.max_n;
    caps.max_states = std::max(caps.max_states, o.max_n);
  }
  return caps;
}

Model load_model(const std::string& path, const Caps& caps) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open model file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str(), caps);
}

OperatorKind kind_of(const std::string& id) {
  if (auto k = operator_from_id(id)) return *k;
  throw UsageError("unknown operator '" + id + "' (use k or kprime)");
}

int run_eval(const Options& o) {
  const Caps caps = caps_of(o);
  Model m = load_model(o.model_path, caps);
  auto ast = formula::parse_formula(o.formula_text);
  auto result = formula::eval_formula(m, *ast, caps);
  if (format_of(o) == Format::Json) {
    Json rec = {{"kind", "summary"}, {"command", "eval"}, {"formula", formula::print_formula(*ast)}};
    if (const Event* e = std::get_if<Event>(&result))
      rec["result"] = render::event_json(m, *e);
    else
      rec["result"] = std::get<bool>(result);
    std::cout << rec.dump() << '\n';
  } else {
    if (const Event* e = std::get_if<Event>(&result))
      std::cout << format_event(m, *e) << '\n';
    else
      std::cout << (std::get<bool>(result) ? "true" : "false") << '\n';
  }
  return kExitOk;
}

int run_check(const Options& o, bool op_given) {
  const Caps caps = caps_of(o);
  Model m = load_model(o.model_path, caps);

  std::vector<PropertyReport> reports;
  if (o.check_all) {
    reports = property_matrix(m, caps);
    if (op_given) {
      OperatorKind kind = kind_of(o.op);
      std::erase_if(reports, [&](const PropertyReport& r) { return r.op != kind; });
    }
  } else {
    auto p = property_from_string(o.property);
    if (!p) throw UsageError("unknown property '" + o.property + "'");
    reports.push_back(check_property(m, kind_of(o.op), *p, caps));
  }

  int failed = 0;
  int exit_failures = 0;
  for (const auto& r : reports) {
    if (r.holds) continue;
    ++failed;
    // The existential property is informational and never trips the exit code.
    if (r.property != PropertyId::NontrivialUnawareness) ++exit_failures;
  }

  if (format_of(o) == Format::Json) {
    for (const auto& r : reports) std::cout << render::property_record(m, r).dump() << '\n';
    Json summary = {{"kind", "summary"},
                    {"command", "check"},
                    {"total", reports.size()},
                    {"holds", reports.size() - static_cast<std::size_t>(failed)},
                    {"fails", failed}};
    std::cout << summary.dump() << '\n';
  } else {
    render::print_property_table(std::cout, m, reports);
  }
  return exit_failures > 0 ? kExitCheckFailed : kExitOk;
}

int run_verify(const Options& o) {
  const Caps caps = caps_of(o);
  Model m = load_model(o.model_path, caps);
  auto c = claim_from_string(o.claim);
  if (!c) throw UsageError("unknown claim '" + o.claim + "'");

  std::optional<Event> chosen;
  if (!o.event_text.empty()) {
    auto ast = formula::parse_formula(o.event_text);
    auto value = formula::eval_formula(m, *ast, caps);
    const Event* e = std::get_if<Event>(&value);
    if (!e) throw UsageError("--event must evaluate to a set, not a predicate");
    chosen = *e;
  }

  ClaimReport report = verify_claim(m, *c, chosen, caps);
  if (format_of(o) == Format::Json)
    std::cout << render::claim_record(m, report).dump() << '\n';
  else
    render::print_claim_table(std::cout, m, report);

  if (report.verdict == Verdict::RefutedStep) return kExitCheckFailed;
  if (report.verdict == Verdict::PremiseNotMet) return kExitPremiseNotMet;
  return kExitOk;
}

SearchTarget parse_target(const std::string& text) {
  if (text.starts_with("claim:")) {
    std::string rest = text.substr(6);
    Verdict verdict = Verdict::Verified;
    if (auto eq = rest.find('='); eq != std::string::npos) {
      auto v = verdict_from_string(rest.substr(eq + 1));
      if (!v) throw UsageError("unknown verdict '" + rest.substr(eq + 1) + "'");
      verdict = *v;
      rest = rest.substr(0, eq);
    }
    auto c = claim_from_string(rest);
    if (!c) throw UsageError("unknown claim '" + rest + "'");
    return ClaimTarget{*c, verdict};
  }
  if (text.starts_with("formula:")) {
    auto ast = formula::parse_formula(text.substr(8));
    if (!formula::is_predicate(*ast))
      throw UsageError("formula target must be a predicate (=, <= or <)");
    return FormulaTarget{ast};
  }
  std::string rest = text;
  OperatorKind kind = OperatorKind::StandardK;
  if (rest.starts_with("kprime:")) {
    kind = OperatorKind::GeneralisedKPrime;
    rest = rest.substr(7);
  } else if (rest.starts_with("k:")) {
    rest = rest.substr(2);
  }
  bool expect_holds = true;
  if (auto eq = rest.find('='); eq != std::string::npos) {
    std::string want = rest.substr(eq + 1);
    if (want == "fails")
      expect_holds = false;
    else if (want != "holds")
      throw UsageError("expected '=holds' or '=fails' in target '" + text + "'");
    rest = rest.substr(0, eq);
  }
  auto p = property_from_string(rest);
  if (!p) throw UsageError("unknown property '" + rest + "'");
  return PropertyTarget{*p, kind, expect_holds};
}

std::string model_inline(const Model& m) {
  std::string out;
  for (int s = 0; s < m.size(); ++s) {
    if (s) out += ' ';
    out += "P(" + m.label(s) + ")=" + format_event(m, m.possibility(s));
  }
  return out;
}

int run_enumerate(const Options& o) {
  const Caps caps = caps_of(o);
  EnumSpec spec;
  spec.n = o.n;
  spec.serial = o.serial;
  spec.reflexive = o.reflexive;
  spec.transitive = o.transitive;
  spec.euclidean = o.euclidean;
  spec.partitional = o.partitional;
  spec.non_partitional = o.non_partitional;
  spec.worker_count = o.jobs;
  spec.validate(caps);

  const bool json = format_of(o) == Format::Json;
  int actions = (o.sweep ? 1 : 0) + (!o.count_target.empty() ? 1 : 0) +
                (!o.first_target.empty() ? 1 : 0) + (!o.all_target.empty() ? 1 : 0);
  if (actions != 1)
    throw UsageError("enumerate needs exactly one of --sweep, --count, --first, --all");

  if (o.sweep) {
    SweepReport report = invariant_sweep(spec, caps);
    if (json) {
      for (const auto& v : report.violations)
        std::cout << render::violation_record(v).dump() << '\n';
      Json counts = Json::object();
      for (PropertyId p : all_properties())
        counts[property_id_string(p)] = report.counts[static_cast<std::size_t>(p)];
      Json summary = {{"kind", "summary"},        {"command", "enumerate"},
                      {"mode", "sweep"},          {"n", spec.n},
                      {"scanned", report.models_scanned},
                      {"violations", report.violations.size()},
                      {"counts", counts}};
      std::cout << summary.dump() << '\n';
    } else {
      for (const auto& v : report.violations)
        std::cout << "violation #" << v.index << " [" << v.check << "]: "
                  << model_inline(v.model) << '\n';
      std::cout << "scanned: " << report.models_scanned << '\n';
      std::cout << "violations: " << report.violations.size() << '\n';
      std::cout << "counts:\n";
      for (PropertyId p : all_properties())
        std::cout << "  " << property_id_string(p) << ": "
                  << report.counts[static_cast<std::size_t>(p)] << '\n';
    }
    return report.violations.empty() ? kExitOk : kExitCheckFailed;
  }

  SearchMode mode = SearchMode::Count;
  std::string target_text = o.count_target;
  if (!o.first_target.empty()) {
    mode = SearchMode::First;
    target_text = o.first_target;
  } else if (!o.all_target.empty()) {
    mode = SearchMode::All;
    target_text = o.all_target;
  }
  SearchTarget target = parse_target(target_text);
  SearchResult result = search(spec, target, mode, caps);

  const char* mode_name = mode == SearchMode::Count ? "count"
                          : mode == SearchMode::First ? "first"
                                                      : "all";
  if (json) {
    for (const auto& match : result.matches)
      std::cout << render::match_record(match).dump() << '\n';
    Json summary = {{"kind", "summary"},   {"command", "enumerate"},
                    {"mode", mode_name},   {"n", spec.n},
                    {"target", target_text},
                    {"scanned", result.models_scanned},
                    {"matches", result.match_count}};
    std::cout << summary.dump() << '\n';
  } else {
    for (const auto& match : result.matches)
      std::cout << "match #" << match.index << ": " << model_inline(match.model) << '\n';
    std::cout << "scanned: " << result.models_scanned << '\n';
    std::cout << "matches: " << result.match_count << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Model checker and explorer for knowledge and unawareness operators on finite state spaces"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"table", "json"}));
    sub->add_option("--max-n", o.max_n,
                    "Raise the all-events / enumeration caps (and max states) to N");
  };

  auto* eval = app.add_subcommand("eval", "Evaluate a formula against a model");
  eval->add_option("-m,--model", o.model_path, "Model file (text or JSON)")->required();
  eval->add_option("formula", o.formula_text, "Formula to evaluate")->required();
  add_common(eval);

  auto* check = app.add_subcommand("check", "Check properties on a model");
  check->add_option("-m,--model", o.model_path, "Model file (text or JSON)")->required();
  auto* prop_opt = check->add_option("-p,--property", o.property, "Property id");
  auto* all_opt = check->add_flag("--all", o.check_all, "Check the full property matrix");
  auto* op_opt = check->add_option("--operator", o.op, "Operator kind: k or kprime");
  prop_opt->excludes(all_opt);
  add_common(check);

  auto* verify = app.add_subcommand("verify", "Verify a claim on a model");
  verify->add_option("-m,--model", o.model_path, "Model file (text or JSON)")->required();
  verify->add_option("--claim", o.claim, "Claim id")->required();
  verify->add_option("--event", o.event_text,
                     "Event expression overriding the claim's default event");
  add_common(verify);

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate models, search or sweep");
  enumerate->add_option("-n", o.n, "Number of states")->required();
  enumerate->add_flag("--serial", o.serial, "Require P(s) nonempty everywhere");
  enumerate->add_flag("--reflexive", o.reflexive, "Require s in P(s)");
  enumerate->add_flag("--transitive", o.transitive, "Require transitivity");
  enumerate->add_flag("--euclidean", o.euclidean, "Require the euclidean condition");
  enumerate->add_flag("--partitional", o.partitional, "Require a partitional correspondence");
  enumerate->add_flag("--non-partitional", o.non_partitional, "Exclude partitional models");
  enumerate->add_flag("--sweep", o.sweep, "Run the unconditional invariant suite");
  enumerate->add_option("--count", o.count_target, "Count models matching a target");
  enumerate->add_option("--first", o.first_target, "Report the minimal-index match");
  enumerate->add_option("--all", o.all_target, "Report every match");
  enumerate->add_option("--jobs", o.jobs, "Worker count (does not affect output bytes)");
  add_common(enumerate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  auto emit_error = [&](const std::string& message) {
    std::cerr << "error: " << message << '\n';
    if (format_of(o) == Format::Json)
      std::cout << render::error_record(message).dump() << '\n';
  };

  try {
    if (eval->parsed()) return run_eval(o);
    if (check->parsed()) {
      if (!o.check_all && o.property.empty())
        throw UsageError("check needs -p <property> or --all");
      return run_check(o, op_opt->count() > 0);
    }
    if (verify->parsed()) return run_verify(o);
    if (enumerate->parsed()) return run_enumerate(o);
  } catch (const CapError& e) {
    emit_error(e.what());
    return kExitCap;
  } catch (const UsageError& e) {
    emit_error(e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    emit_error(std::string("internal error: ") + e.what());
    return kExitCap;
  }
  return kExitUsage;
}
