#include "realform/factor_graph.hpp"

#include <regex>

#include "realform/errors.hpp"

namespace realform {

std::string to_string(const RealFormLabel& l) {
  switch (l.kind) {
    case RealFormLabel::Kind::Split: return "split";
    case RealFormLabel::Kind::QuasiSplitSU: return "quasi_split_su";
    case RealFormLabel::Kind::SUInnerTwist: return "su_inner_twist(" + std::to_string(l.s) + ")";
    case RealFormLabel::Kind::Custom: return l.tag;
  }
  return l.tag;
}

std::string to_string(const InvolutionLabel& l) {
  switch (l.kind) {
    case InvolutionLabel::Kind::TransposeInverse: return "transpose_inverse";
    case InvolutionLabel::Kind::Symplectic: return "symplectic";
    case InvolutionLabel::Kind::InnerPQ: return "inner_pq(" + std::to_string(l.p) + "," + std::to_string(l.q) + ")";
    case InvolutionLabel::Kind::Custom: return l.tag;
  }
  return l.tag;
}

RealFormLabel parse_real_form_label(const std::string& text) {
  static const std::regex twist(R"(su_inner_twist\((\d+)\))");
  RealFormLabel l;
  std::smatch m;
  if (text == "split") {
    l.kind = RealFormLabel::Kind::Split;
  } else if (text == "quasi_split_su") {
    l.kind = RealFormLabel::Kind::QuasiSplitSU;
  } else if (std::regex_match(text, m, twist)) {
    l.kind = RealFormLabel::Kind::SUInnerTwist;
    l.s = std::stoi(m[1]);
  } else {
    if (text.empty()) throw InvalidInput("empty real form label");
    l.kind = RealFormLabel::Kind::Custom;
    l.tag = text;
  }
  return l;
}

InvolutionLabel parse_involution_label(const std::string& text) {
  static const std::regex pq(R"(inner_pq\((\d+),(\d+)\))");
  InvolutionLabel l;
  std::smatch m;
  if (text == "transpose_inverse") {
    l.kind = InvolutionLabel::Kind::TransposeInverse;
  } else if (text == "symplectic") {
    l.kind = InvolutionLabel::Kind::Symplectic;
  } else if (std::regex_match(text, m, pq)) {
    l.kind = InvolutionLabel::Kind::InnerPQ;
    l.p = std::stoi(m[1]);
    l.q = std::stoi(m[2]);
  } else {
    if (text.empty()) throw InvalidInput("empty involution label");
    l.kind = InvolutionLabel::Kind::Custom;
    l.tag = text;
  }
  return l;
}

namespace {

bool is_permutation(const std::vector<std::size_t>& perm) {
  std::vector<bool> hit(perm.size(), false);
  for (std::size_t v : perm) {
    if (v >= perm.size() || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

template <typename Label>
void check_permutation(const char* name, const std::vector<std::size_t>& perm,
                       const std::vector<std::optional<Label>>& labels, const std::vector<SimpleFactor>& factors,
                       ValidationReport& report) {
  const std::size_t n = factors.size();
  if (perm.size() != n) {
    report.issues.push_back(std::string(name) + "_perm has " + std::to_string(perm.size()) + " entries for " +
                            std::to_string(n) + " factors");
    return;
  }
  if (!is_permutation(perm)) {
    report.issues.push_back(std::string(name) + "_perm is not a permutation of the factor indices");
    return;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (perm[perm[i]] != i) {
      report.issues.push_back(std::string(name) + "_perm is not an involution at factor " + std::to_string(i));
      return;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (perm[i] > i && !(factors[i] == factors[perm[i]])) {
      report.issues.push_back(std::string(name) + " exchanges non-isomorphic factors " + std::to_string(i) +
                              " and " + std::to_string(perm[i]));
    }
  }
  if (labels.size() != n) {
    report.issues.push_back(std::string(name) + "_labels has " + std::to_string(labels.size()) + " entries for " +
                            std::to_string(n) + " factors");
    return;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const bool fixed = perm[i] == i;
    if (fixed && !labels[i]) {
      report.issues.push_back(std::string(name) + "-fixed factor " + std::to_string(i) + " has no label");
    } else if (!fixed && labels[i]) {
      report.issues.push_back(std::string(name) + "-moved factor " + std::to_string(i) + " carries a label");
    }
  }
}

bool has_rule(const InvolutionLabel& l) {
  return l.kind == InvolutionLabel::Kind::TransposeInverse || l.kind == InvolutionLabel::Kind::Symplectic;
}

bool has_rule(const RealFormLabel& l) { return l.kind != RealFormLabel::Kind::Custom; }

}  // namespace

ValidationReport validate(const FactorGraph& fg) {
  ValidationReport report;
  if (fg.factors.empty()) report.issues.push_back("factor graph has no factors");
  for (std::size_t i = 0; i < fg.factors.size(); ++i) {
    if (fg.factors[i].family.empty()) report.issues.push_back("factor " + std::to_string(i) + " has no family");
    if (fg.factors[i].n < 1) report.issues.push_back("factor " + std::to_string(i) + " has rank parameter < 1");
  }
  check_permutation("sigma", fg.sigma_perm, fg.sigma_labels, fg.factors, report);
  check_permutation("theta", fg.theta_perm, fg.theta_labels, fg.factors, report);
  if (fg.theta_labels.size() == fg.factors.size()) {
    for (std::size_t i = 0; i < fg.factors.size(); ++i) {
      const auto& l = fg.theta_labels[i];
      if (l && l->kind == InvolutionLabel::Kind::Symplectic && fg.factors[i].family == "SL" && fg.factors[i].n % 2) {
        report.issues.push_back("symplectic involution on SL_" + std::to_string(fg.factors[i].n) +
                                " requires even n (factor " + std::to_string(i) + ")");
      }
    }
  }
  return report;
}

bool is_theta_sigma_compatible(const FactorGraph& fg) {
  const ValidationReport report = validate(fg);
  if (!report.ok()) {
    std::string msg = "invalid factor graph:";
    for (const auto& issue : report.issues) msg += " " + issue + ";";
    throw InvalidInput(msg);
  }
  const auto& sigma = fg.sigma_perm;
  const auto& theta = fg.theta_perm;
  const std::size_t n = fg.factors.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (sigma[theta[sigma[i]]] != theta[i]) return false;
  }

  // theta-swapped pairs normalize to the plain exchange, so once the
  // permutations commute only theta-fixed factors constrain the verdict.
  std::string unsupported;
  for (std::size_t i = 0; i < n; ++i) {
    if (theta[i] != i) continue;
    const InvolutionLabel& li = *fg.theta_labels[i];
    const std::size_t j = sigma[i];
    if (!has_rule(li) || fg.factors[i].family != "SL") {
      unsupported += " factor " + std::to_string(i) + " (" + fg.factors[i].family + ", " + to_string(li) + ");";
      continue;
    }
    if (j == i) {
      const RealFormLabel& form = *fg.sigma_labels[i];
      if (!has_rule(form)) unsupported += " factor " + std::to_string(i) + " real form " + to_string(form) + ";";
      continue;
    }
    const InvolutionLabel& lj = *fg.theta_labels[j];
    if (!has_rule(lj)) continue;  // reported when the loop reaches j
    if (!(li == lj)) return false;
  }
  if (!unsupported.empty()) {
    throw UnsupportedLabels("no bundled conjugation rule for" + unsupported +
                            " supply compat explicitly in generic mode");
  }
  return true;
}

FactorGraph relabel(const FactorGraph& fg, const std::vector<std::size_t>& perm) {
  const std::size_t n = fg.factors.size();
  if (perm.size() != n || !is_permutation(perm)) throw InvalidInput("relabel: not a permutation of the factors");
  FactorGraph out;
  out.factors.resize(n);
  out.sigma_perm.resize(n);
  out.theta_perm.resize(n);
  out.sigma_labels.resize(n);
  out.theta_labels.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.factors[perm[i]] = fg.factors[i];
    out.sigma_perm[perm[i]] = perm[fg.sigma_perm[i]];
    out.theta_perm[perm[i]] = perm[fg.theta_perm[i]];
    out.sigma_labels[perm[i]] = fg.sigma_labels[i];
    out.theta_labels[perm[i]] = fg.theta_labels[i];
  }
  return out;
}

}  // namespace realform
