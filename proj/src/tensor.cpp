#include "tensor.hpp"

#include <algorithm>
#include <map>

namespace kmc {

namespace {

void check_element(const TensorElement& t, size_t a) {
  if (t.factors.empty())
    throw Error(ErrorCode::InvalidArgument, "empty tensor element");
  const auto& cartan = *t.factors.front().cartan();
  if (a >= cartan.rank())
    throw Error(ErrorCode::UnknownIndex, "index out of range");
  for (const auto& b : t.factors)
    if (*b.cartan() != cartan)
      throw Error(ErrorCode::InvalidArgument,
                  "tensor factors over different Cartan matrices");
}

// statistics of the right-associated tail factors[from..]
Int eps_from(const TensorElement& t, size_t a, size_t from);
Int phi_from(const TensorElement& t, size_t a, size_t from);

Int eps_from(const TensorElement& t, size_t a, size_t from) {
  Int eps = t.factors[from].epsilon(a);
  if (from + 1 == t.factors.size()) return eps;
  // eps(L (x) R) = eps(R) + max(0, eps(L) - phi(R))
  Int phi_right = phi_from(t, a, from + 1);
  return eps_from(t, a, from + 1) + std::max<Int>(0, eps - phi_right);
}

Int phi_from(const TensorElement& t, size_t a, size_t from) {
  Int phi = t.factors[from].phi(a);
  if (from + 1 == t.factors.size()) return phi;
  // phi(L (x) R) = phi(L) + max(0, phi(R) - eps(L))
  return phi + std::max<Int>(0, phi_from(t, a, from + 1) -
                                    t.factors[from].epsilon(a));
}

}  // namespace

Int tensor_epsilon(const TensorElement& t, size_t a) {
  check_element(t, a);
  return eps_from(t, a, 0);
}

Int tensor_phi(const TensorElement& t, size_t a) {
  check_element(t, a);
  return phi_from(t, a, 0);
}

Weight tensor_weight(const TensorElement& t) {
  if (t.factors.empty())
    throw Error(ErrorCode::InvalidArgument, "empty tensor element");
  Weight w = Weight::zero(t.factors.front().rank());
  for (const auto& b : t.factors) w = w + b.weight();
  return w;
}

namespace {

std::optional<TensorElement> apply(const TensorElement& t, size_t a,
                                   bool lowering, size_t from) {
  if (from + 1 == t.factors.size()) {
    auto next = lowering ? t.factors[from].f(a) : t.factors[from].e(a);
    if (!next) return std::nullopt;
    TensorElement out = t;
    out.factors[from] = std::move(*next);
    return out;
  }
  Int eps_left = t.factors[from].epsilon(a);
  Int phi_right = phi_from(t, a, from + 1);
  bool act_left = lowering ? (eps_left >= phi_right) : (eps_left > phi_right);
  if (act_left) {
    auto next = lowering ? t.factors[from].f(a) : t.factors[from].e(a);
    if (!next) return std::nullopt;
    TensorElement out = t;
    out.factors[from] = std::move(*next);
    return out;
  }
  return apply(t, a, lowering, from + 1);
}

}  // namespace

std::optional<TensorElement> tensor_f(const TensorElement& t, size_t a) {
  check_element(t, a);
  return apply(t, a, true, 0);
}

std::optional<TensorElement> tensor_e(const TensorElement& t, size_t a) {
  check_element(t, a);
  return apply(t, a, false, 0);
}

size_t Decomposition::total_multiplicity() const {
  size_t total = 0;
  for (const auto& comp : components) total += comp.witnesses.size();
  return total;
}

nlohmann::json Decomposition::to_json() const {
  nlohmann::json j;
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& comp : components) {
    nlohmann::json witnesses = nlohmann::json::array();
    for (const auto& w : comp.witnesses) witnesses.push_back(w.to_json());
    comps.push_back({{"weight", comp.weight},
                     {"multiplicity", comp.witnesses.size()},
                     {"witnesses", std::move(witnesses)}});
  }
  j["components"] = std::move(comps);
  j["partial"] = partial;
  return j;
}

Decomposition lr_decompose(CartanPtr cartan, const std::vector<Int>& mu,
                           const std::vector<Int>& lambda,
                           std::optional<Int> depth, size_t max_nodes) {
  const size_t n = cartan->rank();
  if (mu.size() != n || lambda.size() != n)
    throw Error(ErrorCode::InvalidArgument, "weight rank mismatch");
  for (Int coeff : lambda)
    if (coeff < 0) throw Error(ErrorCode::NotDominant, "lambda not dominant");

  GenerateOptions options;
  options.depth = depth;
  options.max_nodes = max_nodes;
  CrystalGraph rc_mu = generate(cartan, mu, options);

  // keyed by the component's fundamental-weight coordinates, descending
  std::map<std::vector<Int>, std::vector<RiggedConfiguration>,
           std::greater<std::vector<Int>>>
      grouped;
  for (const auto& node : rc_mu.nodes) {
    bool qualifies = true;
    for (size_t a = 0; a < n && qualifies; ++a) {
      auto x = node.part(a).min_rigging();
      if (x && *x < -lambda[a]) qualifies = false;
    }
    if (!qualifies) continue;
    std::vector<Int> component(n);
    Weight w = node.weight();
    for (size_t b = 0; b < n; ++b)
      component[b] = lambda[b] + pairing(*cartan, b, w);
    grouped[std::move(component)].push_back(node);
  }

  Decomposition out;
  out.partial = !rc_mu.complete;
  for (auto& [weight, witnesses] : grouped) {
    std::sort(witnesses.begin(), witnesses.end(),
              [](const RiggedConfiguration& l, const RiggedConfiguration& r) {
                return l.canonical_key() < r.canonical_key();
              });
    out.components.push_back(DecompComponent{weight, std::move(witnesses)});
  }
  return out;
}

std::vector<TensorElement> highest_weight_scan(CartanPtr cartan,
                                               const std::vector<Int>& mu,
                                               const std::vector<Int>& lambda,
                                               size_t max_nodes) {
  GenerateOptions options;
  options.max_nodes = max_nodes;
  CrystalGraph rc_mu = generate(cartan, mu, options);
  CrystalGraph rc_lambda = generate(cartan, lambda, options);
  if (!rc_mu.complete || !rc_lambda.complete)
    throw Error(ErrorCode::NotFiniteType,
                "crystal generation hit the node cap; not fully generable");

  std::vector<TensorElement> out;
  for (const auto& left : rc_mu.nodes) {
    for (const auto& right : rc_lambda.nodes) {
      TensorElement t{{left, right}};
      bool killed = true;
      for (size_t a = 0; a < cartan->rank() && killed; ++a)
        if (tensor_e(t, a)) killed = false;
      if (killed) out.push_back(std::move(t));
    }
  }
  return out;
}

}  // namespace kmc
