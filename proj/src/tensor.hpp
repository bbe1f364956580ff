#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "explorer.hpp"
#include "rigged.hpp"

namespace kmc {

/// Element of b_n (x) ... (x) b_1; factors are listed in written order, so
/// factors.front() is the leftmost tensor slot and factors.back() the
/// rightmost.  The n-fold structure is the two-factor rule iterated with
/// right association.
struct TensorElement {
  std::vector<RiggedConfiguration> factors;

  bool operator==(const TensorElement& o) const { return factors == o.factors; }
};

Int tensor_epsilon(const TensorElement& t, size_t a);
Int tensor_phi(const TensorElement& t, size_t a);
Weight tensor_weight(const TensorElement& t);

std::optional<TensorElement> tensor_f(const TensorElement& t, size_t a);
std::optional<TensorElement> tensor_e(const TensorElement& t, size_t a);

/// One irreducible component of a tensor product: the dominant weight as
/// coefficients over the fundamental weights, with the certifying
/// configurations from RC(mu).
struct DecompComponent {
  std::vector<Int> weight;
  std::vector<RiggedConfiguration> witnesses;
};

struct Decomposition {
  std::vector<DecompComponent> components;
  bool partial = false;  // enumeration of RC(mu) was truncated

  size_t total_multiplicity() const;
  nlohmann::json to_json() const;
};

/// The rigged-configuration Littlewood-Richardson rule: components of
/// B(mu) (x) B(lambda) are indexed by the (nu, J) in RC(mu) whose smallest
/// rigging in part a is >= -<h_a, lambda> for every a.  A depth bound makes
/// non-finite types enumerable; the result is then flagged partial.
Decomposition lr_decompose(CartanPtr cartan, const std::vector<Int>& mu,
                           const std::vector<Int>& lambda,
                           std::optional<Int> depth = std::nullopt,
                           size_t max_nodes = 1'000'000);

/// Brute-force oracle: all elements of RC(mu) (x) RC(lambda) killed by
/// every e_a.  Requires both crystals fully generable.
std::vector<TensorElement> highest_weight_scan(CartanPtr cartan,
                                               const std::vector<Int>& mu,
                                               const std::vector<Int>& lambda,
                                               size_t max_nodes = 1'000'000);

}  // namespace kmc
