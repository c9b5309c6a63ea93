#include "realform/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "realform/errors.hpp"
#include "realform/json_io.hpp"

namespace realform::cli {

namespace {

constexpr std::size_t kAutomorphismLimit = 10000;
constexpr std::size_t kSampledInvolutions = 100;
constexpr std::uint64_t kSampleSeed = 1;

Json read_json(const std::string& path, std::istream& in) {
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(path);
    if (!f) throw InvalidInput("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput("malformed JSON in '" + path + "': " + e.what());
  }
}

Json parse_inline_json(const std::string& text, const char* flag) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string(flag) + ": malformed JSON: " + e.what());
  }
}

std::string format_vector(const IntVector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + "]";
}

/// Family spec for decide/count, from --input or the inline flags.
Json decision_spec(const RunConfig& c, std::istream& in) {
  if (c.input_path) return read_json(*c.input_path, in);
  if (!c.family) throw InvalidInput("decide/count need --input or --family");
  Json spec{{"family", *c.family}};
  if (*c.family == "sl-symplectic") {
    if (!c.n || !c.r || !c.s) throw InvalidInput("--family sl-symplectic needs --n, --r and --s");
    spec["n"] = *c.n;
    spec["r"] = *c.r;
    spec["s"] = *c.s;
  } else if (*c.family == "sl-pair") {
    if (!c.n) throw InvalidInput("--family sl-pair needs --n");
    spec["n"] = *c.n;
    spec["h_gens"] = c.h_gens ? parse_inline_json(*c.h_gens, "--h-gens") : Json::array();
  } else {
    throw InvalidInput("--family must be sl-symplectic or sl-pair (use --input for generic data)");
  }
  return spec;
}

Json module_spec(const RunConfig& c, std::istream& in) {
  if (c.input_path) return read_json(*c.input_path, in);
  if (c.orders.empty()) throw InvalidInput("cohom/verify need --input or --orders");
  Json orders = Json::array();
  for (const std::string& o : c.orders) orders.push_back(o);
  Json action = "identity";
  if (c.action) {
    if (*c.action == "identity" || *c.action == "inversion") action = *c.action;
    else action = parse_inline_json(*c.action, "--action");
  }
  return Json{{"orders", orders}, {"action", action}};
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

const char* mark(bool ok) { return ok ? "[pass]" : "[FAIL]"; }

void print_decision_human(std::ostream& out, const Decision& d, const Json& spec) {
  out << "input: " << spec.dump() << '\n';
  out << "  " << mark(d.compatible) << " sigma o theta o sigma is inner-conjugate to theta\n";
  out << "  " << mark(d.stable) << " induced Gamma-action stabilizes H/G^theta\n";
  if (d.delta_zero) {
    out << "  " << mark(*d.delta_zero) << " Delta_H(sigma) = 0\n";
  } else {
    out << "  [ -- ] Delta_H(sigma) = 0 (undefined: H/G^theta not stable)\n";
  }
  if (d.exists) {
    out << "verdict: an equivariant real structure exists; " << *d.num_classes << " equivalence class"
        << (*d.num_classes == 1 ? "" : "es") << "; A = Z/" << format_vector(d.a_canonical()) << '\n';
  } else {
    out << "verdict: no equivariant real structure (" << to_string(d.failed_condition) << ")\n";
  }
}

int run_cohom(const RunConfig& c, std::istream& in, std::ostream& out) {
  const GammaModule m = module_from_json(module_spec(c, in));
  const Json report = cohomology_to_json(m);
  if (c.format == OutputFormat::Json) {
    print_json(out, report);
    return kExitOk;
  }
  out << "group: Z/" << format_vector(m.group().orders()) << " (invariant factors "
      << format_vector(m.group().canonical()) << ")\n";
  out << "H^1: rank " << report["h1_rank"] << ", order " << report["h1_order"] << ", representatives";
  for (const Json& r : report["h1_representatives"]) out << ' ' << r.dump();
  out << '\n';
  out << "H^2: Z/" << report["h2"].dump() << " (order " << report["h2_order"] << ")\n";
  return kExitOk;
}

int run_decide(const RunConfig& c, std::istream& in, std::ostream& out) {
  Json spec;
  Decision d;
  if (c.replay_path) {
    const Json report = read_json(*c.replay_path, in);
    d = replay_decision(report);
    spec = report.at("input");
  } else {
    spec = decision_spec(c, in);
    d = decide_existence(engine_input_from_json(spec));
  }
  if (c.format == OutputFormat::Json) print_json(out, decision_to_json(d, spec));
  else print_decision_human(out, d, spec);
  return kExitOk;
}

int run_count(const RunConfig& c, std::istream& in, std::ostream& out) {
  const Json spec = decision_spec(c, in);
  const Integer count = count_classes(engine_input_from_json(spec));
  if (c.format == OutputFormat::Json) print_json(out, Json{{"num_classes", integer_to_json(count)}, {"input", spec}});
  else out << count << '\n';
  return kExitOk;
}

int run_sweep(const RunConfig& c, std::ostream& out) {
  if (!c.n_min || !c.n_max) throw InvalidInput("sweep needs --n-min and --n-max");
  const auto records = sweep_sl(*c.n_min, *c.n_max);
  if (c.format == OutputFormat::Json) {
    print_json(out, sweep_to_json(*c.n_min, *c.n_max, records));
    return kExitOk;
  }
  out << "   n    r    s    t  exists  failed_condition  classes\n";
  for (const SweepRecord& r : records) {
    char line[128];
    std::snprintf(line, sizeof line, "%4lld %4lld %4lld %4lld  %-6s  %-16s  %s\n", static_cast<long long>(r.n),
                  static_cast<long long>(r.r), static_cast<long long>(r.s), static_cast<long long>(r.t),
                  r.exists ? "yes" : "no", to_string(r.failed_condition).c_str(),
                  r.num_classes ? r.num_classes->get_str().c_str() : "-");
    out << line;
  }
  return kExitOk;
}

Json verify_module(const GammaModule& m, const EnumerationBudget& budget) {
  const oracle::Enumerated e1 = oracle::h1_enumerate(m, budget);
  const oracle::Enumerated e2 = oracle::h2_enumerate(m, budget);
  const Integer nf1 = h1(m).order();
  const Integer formula = h1_count_formula(m);
  const Integer nf2 = h2(m).group.order();
  const bool agree = e1.count == nf1 && e1.count == formula && e2.count == nf2;
  return Json{{"action", module_to_json(m)["action"]},
              {"h1_enumerated", integer_to_json(e1.count)},
              {"h1_normal_form", integer_to_json(nf1)},
              {"h1_formula", integer_to_json(formula)},
              {"h2_enumerated", integer_to_json(e2.count)},
              {"h2_normal_form", integer_to_json(nf2)},
              {"agree", agree}};
}

int run_verify(const RunConfig& c, std::istream& in, std::ostream& out) {
  const GammaModule base = module_from_json(module_spec(c, in));
  std::vector<GammaModule> modules;
  std::string coverage = "single";
  if (c.all_involutions) {
    const FinAbGroup& g = base.group();
    auto all = oracle::involutive_automorphisms(g, kAutomorphismLimit, c.budget);
    std::vector<Homomorphism> actions;
    if (all) {
      actions = std::move(*all);
      coverage = "exhaustive";
    } else {
      actions = oracle::sample_involutions(g, kSampledInvolutions, kSampleSeed, c.budget);
      actions.push_back(Homomorphism::identity(g));
      actions.push_back(Homomorphism::scalar(g, Integer(-1)));
      coverage = "sampled";
    }
    for (const Homomorphism& a : actions) modules.push_back(GammaModule::create(g, a));
  } else {
    modules.push_back(base);
  }
  Json results = Json::array();
  bool all_agree = true;
  for (const GammaModule& m : modules) {
    Json r = verify_module(m, c.budget);
    all_agree = all_agree && r["agree"].get<bool>();
    results.push_back(std::move(r));
  }
  if (c.format == OutputFormat::Json) {
    print_json(out, Json{{"group", integers_to_json(base.group().orders())},
                         {"coverage", coverage},
                         {"modules", results},
                         {"all_agree", all_agree}});
  } else {
    for (const Json& r : results) {
      out << (r["agree"].get<bool>() ? "[pass]" : "[FAIL]") << " action " << r["action"].dump()
          << ": |H^1| enumerated " << r["h1_enumerated"] << ", normal form " << r["h1_normal_form"] << ", formula "
          << r["h1_formula"] << "; |H^2| enumerated " << r["h2_enumerated"] << ", normal form "
          << r["h2_normal_form"] << '\n';
    }
    out << results.size() << " module(s), coverage " << coverage << ": " << (all_agree ? "all agree" : "MISMATCH")
        << '\n';
  }
  return all_agree ? kExitOk : kExitVerifyFailed;
}

int report_error(const RunConfig& c, std::ostream& out, std::ostream& err, int code, const char* kind,
                 const std::string& message) {
  err << "error (" << kind << "): " << message << '\n';
  if (c.format == OutputFormat::Json) {
    print_json(out, Json{{"error", {{"exit_code", code}, {"kind", kind}, {"message", message}}}});
  }
  return code;
}

}  // namespace

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    config.budget.validate();
    switch (config.subcommand) {
      case Subcommand::Cohom: return run_cohom(config, in, out);
      case Subcommand::Decide: return run_decide(config, in, out);
      case Subcommand::Count: return run_count(config, in, out);
      case Subcommand::Sweep: return run_sweep(config, out);
      case Subcommand::Verify: return run_verify(config, in, out);
    }
  } catch (const BudgetExceeded& e) {
    return report_error(config, out, err, kExitBudget, e.kind(), e.what());
  } catch (const PreconditionViolation& e) {
    return report_error(config, out, err, kExitPrecondition, e.kind(), e.what());
  } catch (const Error& e) {
    return report_error(config, out, err, kExitInvalidInput, e.kind(), e.what());
  } catch (const nlohmann::json::exception& e) {
    return report_error(config, out, err, kExitInvalidInput, "invalid_input", e.what());
  } catch (const std::overflow_error& e) {
    return report_error(config, out, err, kExitInvalidInput, "invalid_input", e.what());
  }
  return kExitInvalidInput;
}

int main(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide and count equivariant real structures on complex symmetric spaces"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  std::string format = "human";
  std::optional<std::uint64_t> budget;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "json"}));
  app.add_option("--budget", budget, "Largest group order the oracle enumerates (default 4096, env REALFORM_BUDGET)");

  auto add_module_flags = [&](CLI::App* sub) {
    sub->add_option("--input", config.input_path, "JSON module {orders, action}; '-' for stdin");
    sub->add_option("--orders", config.orders, "Cyclic orders, comma separated")->delimiter(',');
    sub->add_option("--action", config.action, "identity | inversion | JSON matrix of generator images");
  };
  auto add_family_flags = [&](CLI::App* sub) {
    sub->add_option("--input", config.input_path, "JSON family spec; '-' for stdin");
    sub->add_option("--family", config.family, "sl-symplectic | sl-pair");
    sub->add_option("--n", config.n, "Family parameter n");
    sub->add_option("--r", config.r, "sl-symplectic: r dividing 2n");
    sub->add_option("--s", config.s, "sl-symplectic: s in [0, n]");
    sub->add_option("--h-gens", config.h_gens, "sl-pair: JSON list of generators, e.g. [[1,1]]");
  };

  CLI::App* cohom = app.add_subcommand("cohom", "H^1 and H^2 of a Gamma-module");
  add_module_flags(cohom);
  CLI::App* decide = app.add_subcommand("decide", "Decide existence of an equivariant real structure");
  add_family_flags(decide);
  decide->add_option("--replay", config.replay_path, "Re-decide a previous JSON report");
  CLI::App* count = app.add_subcommand("count", "Count equivalence classes of equivariant real structures");
  add_family_flags(count);
  CLI::App* sweep = app.add_subcommand("sweep", "Classify the SL_2n symplectic family over a range of n");
  sweep->add_option("--n-min", config.n_min)->required();
  sweep->add_option("--n-max", config.n_max)->required();
  CLI::App* verify = app.add_subcommand("verify", "Check normal-form cohomology against enumeration");
  add_module_flags(verify);
  verify->add_flag("--all-involutions", config.all_involutions, "Check every involution of the group");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  config.format = format == "json" ? OutputFormat::Json : OutputFormat::Human;
  if (cohom->parsed()) config.subcommand = Subcommand::Cohom;
  else if (decide->parsed()) config.subcommand = Subcommand::Decide;
  else if (count->parsed()) config.subcommand = Subcommand::Count;
  else if (sweep->parsed()) config.subcommand = Subcommand::Sweep;
  else config.subcommand = Subcommand::Verify;

  try {
    config.budget = EnumerationBudget::from_environment();
  } catch (const Error& e) {
    return report_error(config, out, err, kExitInvalidInput, e.kind(), e.what());
  }
  if (budget) config.budget.max_order = *budget;
  return run(config, in, out, err);
}

}  // namespace realform::cli
