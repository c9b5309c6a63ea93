#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace realform {

/// Simple factor of a simply-connected semisimple group, e.g. {"SL", 3}.
struct SimpleFactor {
  std::string family;
  int n = 0;

  bool operator==(const SimpleFactor&) const = default;
};

/// Real form carried by a sigma-stable factor.
struct RealFormLabel {
  enum class Kind { Split, QuasiSplitSU, SUInnerTwist, Custom };
  Kind kind = Kind::Split;
  int s = 0;           // SUInnerTwist only
  std::string tag;     // Custom only

  bool operator==(const RealFormLabel&) const = default;
};

/// Conjugacy class of the involution on a theta-stable factor.
struct InvolutionLabel {
  enum class Kind { TransposeInverse, Symplectic, InnerPQ, Custom };
  Kind kind = Kind::TransposeInverse;
  int p = 0;  // InnerPQ only
  int q = 0;
  std::string tag;  // Custom only

  bool operator==(const InvolutionLabel&) const = default;
};

/// Textual forms: split, quasi_split_su, su_inner_twist(s), anything else is
/// a custom tag; transpose_inverse, symplectic, inner_pq(p,q), custom.
std::string to_string(const RealFormLabel& l);
std::string to_string(const InvolutionLabel& l);
RealFormLabel parse_real_form_label(const std::string& text);
InvolutionLabel parse_involution_label(const std::string& text);

/// The factors of G with the permutations sigma and theta induce on them.
/// Labels sit exactly on the fixed points of the matching permutation.
struct FactorGraph {
  std::vector<SimpleFactor> factors;
  std::vector<std::size_t> sigma_perm;
  std::vector<std::optional<RealFormLabel>> sigma_labels;
  std::vector<std::size_t> theta_perm;
  std::vector<std::optional<InvolutionLabel>> theta_labels;

  bool operator==(const FactorGraph&) const = default;
};

struct ValidationReport {
  std::vector<std::string> issues;
  bool ok() const { return issues.empty(); }
};

ValidationReport validate(const FactorGraph& fg);

/// Decides sigma o theta o sigma ~ theta at the level of permutations and
/// supported labels. Throws InvalidInput if validate() fails and
/// UnsupportedLabels when the verdict depends on a label without a bundled
/// rule; the caller must then assert compatibility explicitly.
bool is_theta_sigma_compatible(const FactorGraph& fg);

/// Renumbers factors: factor i moves to position perm[i].
FactorGraph relabel(const FactorGraph& fg, const std::vector<std::size_t>& perm);

}  // namespace realform
