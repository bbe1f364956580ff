#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cartan.hpp"

namespace kmc {

/// One row of a rigged partition: a length i >= 1 carrying an integer rigging.
struct RiggedString {
  Int length = 1;
  Int rigging = 0;

  bool operator==(const RiggedString& o) const {
    return length == o.length && rigging == o.rigging;
  }
};

/// Multiset of strings kept in weakly decreasing lexicographic order on
/// (length, rigging).
class RiggedPartition {
 public:
  RiggedPartition() = default;
  explicit RiggedPartition(std::vector<RiggedString> strings);

  const std::vector<RiggedString>& strings() const { return strings_; }
  bool empty() const { return strings_.empty(); }
  size_t size() const { return strings_.size(); }

  /// Total number of boxes |nu|.
  Int boxes() const;
  /// Number of strings of length i.
  Int multiplicity(Int length) const;
  /// Smallest rigging; nullopt for the empty partition.
  std::optional<Int> min_rigging() const;

  bool operator==(const RiggedPartition& o) const {
    return strings_ == o.strings_;
  }

 private:
  friend class RiggedConfiguration;
  void normalize();
  std::vector<RiggedString> strings_;
};

/// A rigged configuration (nu, J): one rigged partition per Dynkin index,
/// together with the Cartan datum and the highest weight it lives over
/// (a dominant lambda, or nullopt for B(infinity)).  Immutable value type;
/// the crystal operators return fresh configurations.
class RiggedConfiguration {
 public:
  static RiggedConfiguration empty(CartanPtr cartan,
                                   std::optional<std::vector<Int>> lambda);

  /// Assembles a configuration from explicit parts (used by serialization
  /// and by the virtualization map).  Parts are canonically re-sorted.
  RiggedConfiguration(CartanPtr cartan, std::optional<std::vector<Int>> lambda,
                      std::vector<RiggedPartition> parts);

  const CartanPtr& cartan() const { return cartan_; }
  const std::optional<std::vector<Int>>& highest_weight() const {
    return lambda_;
  }
  size_t rank() const { return parts_.size(); }
  const RiggedPartition& part(size_t a) const { return parts_.at(a); }
  const std::vector<RiggedPartition>& parts() const { return parts_; }

  /// Vacancy number p_i^(a) = c^(a) - sum_{(b,j)} A_ab min(i,j) m_j^(b).
  Int vacancy(size_t a, Int i) const;
  /// Limit p_infinity^(a) = c^(a) - sum_b A_ab |nu^(b)|.
  Int vacancy_inf(size_t a) const;

  /// Lowering operator.  Returns nullopt only when the result falls outside
  /// RC(lambda); in B(infinity) it never annihilates.
  std::optional<RiggedConfiguration> f(size_t a) const;
  /// Raising operator.  Returns nullopt when the smallest rigging is >= 0.
  std::optional<RiggedConfiguration> e(size_t a) const;

  Int epsilon(size_t a) const;
  Int phi(size_t a) const;
  Weight weight() const;

  /// True iff every rigging x at (a, i) satisfies x <= p_i^(a)(nu; lambda).
  bool is_lambda_valid(const std::vector<Int>& lambda) const;

  /// p_i^(a) - x for a string present in part a; throws StringNotFound.
  Int colabel(size_t a, const RiggedString& s) const;

  /// Stable dedup key over the parts.
  std::string canonical_key() const;

  /// {"1": [[len, rigging], ...], "2": [...]} over the index labels.
  nlohmann::json to_json() const;
  static RiggedConfiguration from_json(const nlohmann::json& j,
                                       CartanPtr cartan,
                                       std::optional<std::vector<Int>> lambda);

  /// One line per part: rows "i : x (p)" in canonical order, "-" when empty.
  std::string to_text() const;

  bool operator==(const RiggedConfiguration& o) const {
    return parts_ == o.parts_ && lambda_ == o.lambda_;
  }
  bool operator!=(const RiggedConfiguration& o) const { return !(*this == o); }

 private:
  Int c_coeff(size_t a) const { return lambda_ ? (*lambda_)[a] : 0; }

  CartanPtr cartan_;
  std::optional<std::vector<Int>> lambda_;
  std::vector<RiggedPartition> parts_;
};

}  // namespace kmc
