#include "realform/json_io.hpp"

#include "realform/errors.hpp"
#include "realform/families.hpp"

namespace realform {

namespace {

const Json& require(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw InvalidInput(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw InvalidInput(where + ": missing field '" + key + "'");
  return *it;
}

const Json& require_array(const Json& obj, const char* key, const std::string& where) {
  const Json& v = require(obj, key, where);
  if (!v.is_array()) throw InvalidInput(where + ": field '" + key + "' must be an array");
  return v;
}

std::int64_t small_int(const Json& j, const std::string& where) {
  try {
    return to_int64(integer_from_json(j));
  } catch (const std::overflow_error&) {
    throw InvalidInput(where + ": integer out of range");
  }
}

IntVector int_vector(const Json& j, const std::string& where) {
  if (!j.is_array()) throw InvalidInput(where + ": expected an array of integers");
  IntVector out;
  for (const Json& v : j) out.push_back(integer_from_json(v));
  return out;
}

IntMatrix int_matrix(const Json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!j.is_array() || j.size() != rows) {
    throw InvalidInput(where + ": expected " + std::to_string(rows) + " rows");
  }
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const IntVector row = int_vector(j[r], where);
    if (row.size() != cols) throw InvalidInput(where + ": row " + std::to_string(r) + " must have " +
                                               std::to_string(cols) + " entries");
    m.set_row(r, row);
  }
  return m;
}

Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(integers_to_json(m.row(r)));
  return rows;
}

GroupElement element_from_json(const FinAbGroup& g, const Json& j, const std::string& where) {
  const IntVector c = int_vector(j, where);
  if (c.size() != g.rank()) {
    throw InvalidInput(where + ": expected " + std::to_string(g.rank()) + " coordinates, got " +
                       std::to_string(c.size()));
  }
  return g.element(c);
}

}  // namespace

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    Integer v;
    if (s.empty() || v.set_str(s, 10) != 0) throw InvalidInput("not a decimal integer: '" + s + "'");
    return v;
  }
  throw InvalidInput("expected an integer, got " + j.dump());
}

Json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

Json integers_to_json(const IntVector& v) {
  Json out = Json::array();
  for (const Integer& x : v) out.push_back(integer_to_json(x));
  return out;
}

GammaModule module_from_json(const Json& j) {
  const FinAbGroup g = FinAbGroup::canonicalize(int_vector(require_array(j, "orders", "module"), "module.orders"));
  const Json& action = require(j, "action", "module");
  if (action.is_string()) {
    const std::string name = action.get<std::string>();
    if (name == "identity") return GammaModule::trivial(g);
    if (name == "inversion") return GammaModule::inversion(g);
    throw InvalidInput("module.action: unknown action '" + name + "' (identity, inversion, or a matrix)");
  }
  return GammaModule::create(g, Homomorphism(g, g, int_matrix(action, g.rank(), g.rank(), "module.action")));
}

Json module_to_json(const GammaModule& m) {
  return Json{{"orders", integers_to_json(m.group().orders())}, {"action", matrix_to_json(m.action().matrix())}};
}

FactorGraph factor_graph_from_json(const Json& j) {
  FactorGraph fg;
  for (const Json& f : require_array(j, "factors", "factor_graph")) {
    const Json& family = require(f, "family", "factor_graph.factors");
    if (!family.is_string()) throw InvalidInput("factor_graph.factors: family must be a string");
    fg.factors.push_back({family.get<std::string>(),
                          static_cast<int>(small_int(require(f, "n", "factor_graph.factors"), "factor n"))});
  }
  auto perm = [&](const char* key) {
    std::vector<std::size_t> p;
    for (const Json& v : require_array(j, key, "factor_graph")) {
      const std::int64_t x = small_int(v, std::string("factor_graph.") + key);
      if (x < 0) throw InvalidInput(std::string("factor_graph.") + key + ": negative index");
      p.push_back(static_cast<std::size_t>(x));
    }
    return p;
  };
  fg.sigma_perm = perm("sigma_perm");
  fg.theta_perm = perm("theta_perm");
  for (const Json& l : require_array(j, "sigma_labels", "factor_graph")) {
    if (l.is_null()) fg.sigma_labels.emplace_back();
    else if (l.is_string()) fg.sigma_labels.emplace_back(parse_real_form_label(l.get<std::string>()));
    else throw InvalidInput("factor_graph.sigma_labels: entries must be strings or null");
  }
  for (const Json& l : require_array(j, "theta_labels", "factor_graph")) {
    if (l.is_null()) fg.theta_labels.emplace_back();
    else if (l.is_string()) fg.theta_labels.emplace_back(parse_involution_label(l.get<std::string>()));
    else throw InvalidInput("factor_graph.theta_labels: entries must be strings or null");
  }
  return fg;
}

Json factor_graph_to_json(const FactorGraph& fg) {
  Json factors = Json::array();
  for (const SimpleFactor& f : fg.factors) factors.push_back({{"family", f.family}, {"n", f.n}});
  Json sl = Json::array(), tl = Json::array();
  for (const auto& l : fg.sigma_labels) sl.push_back(l ? Json(to_string(*l)) : Json(nullptr));
  for (const auto& l : fg.theta_labels) tl.push_back(l ? Json(to_string(*l)) : Json(nullptr));
  return Json{{"factors", factors},           {"sigma_perm", fg.sigma_perm}, {"sigma_labels", sl},
              {"theta_perm", fg.theta_perm}, {"theta_labels", tl}};
}

EngineInput engine_input_from_json(const Json& spec) {
  try {
    const Json& family_j = require(spec, "family", "input");
    if (!family_j.is_string()) throw InvalidInput("input: family must be a string");
    const std::string family = family_j.get<std::string>();
    if (family == "sl-symplectic") {
      return build_sl_symplectic({small_int(require(spec, "n", "sl-symplectic"), "sl-symplectic.n"),
                                  small_int(require(spec, "r", "sl-symplectic"), "sl-symplectic.r"),
                                  small_int(require(spec, "s", "sl-symplectic"), "sl-symplectic.s")});
    }
    if (family == "sl-pair") {
      SlPairSpec p;
      p.n = small_int(require(spec, "n", "sl-pair"), "sl-pair.n");
      if (spec.contains("h_gens")) {
        for (const Json& g : require_array(spec, "h_gens", "sl-pair")) {
          if (!g.is_array() || g.size() != 2) throw InvalidInput("sl-pair.h_gens: each generator is a pair [a, b]");
          p.h_gens.push_back({small_int(g[0], "sl-pair.h_gens"), small_int(g[1], "sl-pair.h_gens")});
        }
      }
      return build_sl_pair(p);
    }
    if (family == "generic") {
      const GammaModule q = module_from_json(require(spec, "Q", "generic"));
      const GammaModule z = module_from_json(require(spec, "Z", "generic"));
      std::vector<GroupElement> gens;
      if (spec.contains("h_gens")) {
        for (const Json& g : require_array(spec, "h_gens", "generic")) {
          gens.push_back(element_from_json(q.group(), g, "generic.h_gens"));
        }
      }
      Homomorphism chi(z.group(), q.group(),
                       int_matrix(require(spec, "chi", "generic"), z.group().rank(), q.group().rank(), "generic.chi"));
      GroupElement delta = spec.contains("delta") ? element_from_json(z.group(), spec["delta"], "generic.delta")
                                                  : z.group().zero();
      const Json& compat_j = require(spec, "compat", "generic");
      std::variant<bool, FactorGraph> compat;
      if (compat_j.is_boolean()) compat = compat_j.get<bool>();
      else if (compat_j.is_object()) compat = factor_graph_from_json(compat_j);
      else throw InvalidInput("generic.compat: expected a boolean or a factor graph object");
      return build_generic({q, std::move(gens), z, std::move(chi), std::move(delta), std::move(compat)});
    }
    throw InvalidInput("input: unknown family '" + family + "' (sl-symplectic, sl-pair, generic)");
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("input: ") + e.what());
  }
}

Json decision_to_json(const Decision& d, const Json& spec) {
  Json conditions{{"compatible", d.compatible},
                  {"stable", d.stable},
                  {"delta_zero", d.delta_zero ? Json(*d.delta_zero) : Json(nullptr)}};
  return Json{{"exists", d.exists},
              {"failed_condition", to_string(d.failed_condition)},
              {"num_classes", d.num_classes ? integer_to_json(*d.num_classes) : Json(nullptr)},
              {"A_canonical", d.quotient_module ? integers_to_json(d.a_canonical()) : Json(nullptr)},
              {"conditions", conditions},
              {"input", spec}};
}

Decision replay_decision(const Json& report) {
  const Json& spec = require(report, "input", "report");
  const Decision d = decide_existence(engine_input_from_json(spec));
  const Json fresh = decision_to_json(d, spec);
  for (const char* key : {"exists", "failed_condition", "num_classes", "A_canonical"}) {
    const Json& recorded = require(report, key, "report");
    if (recorded != fresh[key]) {
      throw InvalidInput(std::string("replay mismatch on '") + key + "': report has " + recorded.dump() +
                         ", recomputed " + fresh[key].dump());
    }
  }
  return d;
}

Json sweep_to_json(std::int64_t n_min, std::int64_t n_max, const std::vector<SweepRecord>& records) {
  Json rows = Json::array();
  for (const SweepRecord& r : records) {
    rows.push_back({{"n", r.n},
                    {"r", r.r},
                    {"s", r.s},
                    {"t", r.t},
                    {"exists", r.exists},
                    {"failed_condition", to_string(r.failed_condition)},
                    {"num_classes", r.num_classes ? integer_to_json(*r.num_classes) : Json(nullptr)}});
  }
  return Json{{"n_min", n_min}, {"n_max", n_max}, {"records", rows}};
}

Json cohomology_to_json(const GammaModule& m) {
  const H1Result one = h1(m);
  const H2Result two = h2(m);
  Json reps = Json::array();
  for (const GroupElement& x : one.representatives) reps.push_back(integers_to_json(x.coords()));
  Json norm_gens = Json::array();
  for (const GroupElement& x : two.norm_subgroup.generators()) norm_gens.push_back(integers_to_json(x.coords()));
  return Json{{"group", {{"orders", integers_to_json(m.group().orders())},
                         {"canonical", integers_to_json(m.group().canonical())}}},
              {"action", matrix_to_json(m.action().matrix())},
              {"h1_rank", one.rank},
              {"h1_order", integer_to_json(one.order())},
              {"h1_representatives", reps},
              {"h1_count_formula", integer_to_json(h1_count_formula(m))},
              {"h2", integers_to_json(two.group.canonical())},
              {"h2_order", integer_to_json(two.group.order())},
              {"fixed_order", integer_to_json(two.fixed.order())},
              {"norm_generators", norm_gens}};
}

}  // namespace realform
