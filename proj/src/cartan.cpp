#include "cartan.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace kmc {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::BadDiagonal: return "BadDiagonal";
    case ErrorCode::PositiveOffDiagonal: return "PositiveOffDiagonal";
    case ErrorCode::AsymmetricZeroPattern: return "AsymmetricZeroPattern";
    case ErrorCode::NotSymmetrizable: return "NotSymmetrizable";
    case ErrorCode::UnknownIndex: return "UnknownIndex";
    case ErrorCode::NotFiniteType: return "NotFiniteType";
    case ErrorCode::NotDominant: return "NotDominant";
    case ErrorCode::StringNotFound: return "StringNotFound";
    case ErrorCode::NonIntegralC: return "NonIntegralC";
    case ErrorCode::MultiEdgeDetected: return "MultiEdgeDetected";
    case ErrorCode::NotInVirtualImage: return "NotInVirtualImage";
    case ErrorCode::IncomparableDepths: return "IncomparableDepths";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

CartanMatrix::CartanMatrix(std::vector<std::string> labels,
                           std::vector<std::vector<Int>> entries)
    : labels_(std::move(labels)), entries_(std::move(entries)) {
  const size_t n = labels_.size();
  if (n == 0) throw Error(ErrorCode::Parse, "empty Cartan matrix");
  if (entries_.size() != n)
    throw Error(ErrorCode::Parse, "matrix size does not match label count");
  for (const auto& row : entries_)
    if (row.size() != n)
      throw Error(ErrorCode::Parse, "matrix is not square");
  {
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != n)
      throw Error(ErrorCode::Parse, "duplicate index labels");
  }
  for (size_t i = 0; i < n; ++i) {
    if (entries_[i][i] != 2)
      throw Error(ErrorCode::BadDiagonal,
                  "diagonal entry at index " + labels_[i] + " is not 2");
  }
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (entries_[i][j] > 0)
        throw Error(ErrorCode::PositiveOffDiagonal,
                    "positive off-diagonal entry at (" + labels_[i] + "," +
                        labels_[j] + ")");
      if ((entries_[i][j] == 0) != (entries_[j][i] == 0))
        throw Error(ErrorCode::AsymmetricZeroPattern,
                    "zero pattern not symmetric at (" + labels_[i] + "," +
                        labels_[j] + ")");
    }
  }
}

CartanMatrix CartanMatrix::from_entries(std::vector<std::vector<Int>> entries) {
  std::vector<std::string> labels;
  labels.reserve(entries.size());
  for (size_t i = 0; i < entries.size(); ++i)
    labels.push_back(std::to_string(i + 1));
  return CartanMatrix(std::move(labels), std::move(entries));
}

size_t CartanMatrix::index_of(std::string_view label) const {
  for (size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  throw Error(ErrorCode::UnknownIndex,
              "unknown index label: " + std::string(label));
}

nlohmann::json CartanMatrix::to_json() const {
  nlohmann::json j;
  j["labels"] = labels_;
  j["matrix"] = entries_;
  return j;
}

namespace {

std::vector<std::vector<Int>> finite_type_entries(char family, size_t n) {
  auto bad = [&]() -> std::vector<std::vector<Int>> {
    throw Error(ErrorCode::Parse, std::string("unsupported rank for type ") +
                                      family + std::to_string(n));
  };
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n, 0));
  for (size_t i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](size_t i, size_t j) { a[i][j] = -1; a[j][i] = -1; };
  switch (family) {
    case 'A':
      if (n < 1) return bad();
      for (size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      // last simple root short: A[n-2][n-1] = -1, A[n-1][n-2] = -2
      if (n < 2) return bad();
      for (size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 1][n - 2] = -2;
      break;
    case 'C':
      // last simple root long: transpose of B in the tail
      if (n < 2) return bad();
      for (size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 2][n - 1] = -2;
      break;
    case 'D':
      if (n < 3) return bad();
      for (size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      if (n < 6 || n > 8) return bad();
      // chain 1-3-4-5-...-n with 2 attached to 4
      link(0, 2);
      for (size_t i = 2; i + 1 < n; ++i) link(i, i + 1);
      link(1, 3);
      break;
    case 'F':
      if (n != 4) return bad();
      link(0, 1);
      link(1, 2);
      link(2, 3);
      a[2][1] = -2;  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      break;
    case 'G':
      if (n != 2) return bad();
      a[0][1] = -1;  // alpha_1 long, alpha_2 short
      a[1][0] = -3;
      break;
    default:
      throw Error(ErrorCode::Parse,
                  std::string("unknown type family: ") + family);
  }
  return a;
}

// Untwisted affine extension: attach a node 0 against the highest root.
CartanMatrix affinize(const CartanMatrix& finite) {
  const size_t n = finite.rank();
  auto roots = positive_roots(finite);
  Symmetrizer sym = symmetrize(finite);
  // highest root = unique positive root of maximal height
  const std::vector<Int>* theta = nullptr;
  Int best = -1;
  for (const auto& r : roots) {
    Int h = std::accumulate(r.begin(), r.end(), Int{0});
    if (h > best) {
      best = h;
      theta = &r;
    }
  }
  // (x, y) with (alpha_i, alpha_j) = d_i A_ij
  auto form_with_simple = [&](const std::vector<Int>& m, size_t j) {
    Int s = 0;
    for (size_t b = 0; b < n; ++b) s += m[b] * sym.d[j] * finite.at(j, b);
    return s;
  };
  Int theta_sq = 0;
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      theta_sq += (*theta)[a] * (*theta)[b] * sym.d[a] * finite.at(a, b);

  std::vector<std::vector<Int>> entries(n + 1, std::vector<Int>(n + 1, 0));
  entries[0][0] = 2;
  for (size_t j = 0; j < n; ++j) {
    Int num = -2 * form_with_simple(*theta, j);
    if (num % theta_sq != 0)
      throw Error(ErrorCode::Internal, "non-integral affine attachment");
    entries[0][j + 1] = num / theta_sq;
    Int pair = 0;  // <h_j, theta>
    for (size_t b = 0; b < n; ++b) pair += (*theta)[b] * finite.at(j, b);
    entries[j + 1][0] = -pair;
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) entries[i + 1][j + 1] = finite.at(i, j);

  std::vector<std::string> labels;
  labels.push_back("0");
  for (size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
  return CartanMatrix(std::move(labels), std::move(entries));
}

}  // namespace

CartanMatrix CartanMatrix::named(std::string_view name) {
  std::string s(name);
  bool affine = false;
  if (!s.empty() && s.back() == '~') {
    affine = true;
    s.pop_back();
  }
  if (s.size() < 2 || s[0] < 'A' || s[0] > 'G')
    throw Error(ErrorCode::Parse, "unrecognized type name: " + std::string(name));
  size_t n = 0;
  for (size_t i = 1; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      throw Error(ErrorCode::Parse,
                  "unrecognized type name: " + std::string(name));
    n = n * 10 + static_cast<size_t>(s[i] - '0');
  }
  if (n == 0 || n > 64)
    throw Error(ErrorCode::Parse, "rank out of range in: " + std::string(name));
  CartanMatrix finite(CartanMatrix::from_entries(finite_type_entries(s[0], n)));
  if (!affine) return finite;
  return affinize(finite);
}

CartanMatrix CartanMatrix::from_json(const nlohmann::json& j) {
  try {
    if (j.is_array()) {
      return from_entries(j.get<std::vector<std::vector<Int>>>());
    }
    if (j.is_object()) {
      auto entries = j.at("matrix").get<std::vector<std::vector<Int>>>();
      if (j.contains("labels")) {
        auto labels = j.at("labels").get<std::vector<std::string>>();
        return CartanMatrix(std::move(labels), std::move(entries));
      }
      return from_entries(std::move(entries));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("bad cartan JSON: ") + e.what());
  }
  throw Error(ErrorCode::Parse, "cartan JSON must be an array or object");
}

CartanMatrix CartanMatrix::parse(std::string_view spec) {
  size_t pos = spec.find_first_not_of(" \t\r\n");
  if (pos == std::string_view::npos)
    throw Error(ErrorCode::Parse, "empty cartan spec");
  if (spec[pos] == '[' || spec[pos] == '{') {
    nlohmann::json j = nlohmann::json::parse(std::string(spec), nullptr, false);
    if (j.is_discarded())
      throw Error(ErrorCode::Parse, "cartan spec is not valid JSON");
    return from_json(j);
  }
  return named(spec.substr(pos, spec.find_last_not_of(" \t\r\n") - pos + 1));
}

namespace {

struct Fraction {
  Int num = 1;
  Int den = 1;

  void reduce() {
    Int g = std::gcd(num, den);
    if (g != 0) {
      num /= g;
      den /= g;
    }
    if (den < 0) {
      num = -num;
      den = -den;
    }
  }
};

}  // namespace

Symmetrizer symmetrize(const CartanMatrix& cartan) {
  const size_t n = cartan.rank();
  std::vector<Fraction> d(n);
  std::vector<int> state(n, 0);  // 0 unvisited, 1 assigned

  for (size_t root = 0; root < n; ++root) {
    if (state[root]) continue;
    d[root] = Fraction{1, 1};
    state[root] = 1;
    std::vector<size_t> stack{root};
    while (!stack.empty()) {
      size_t a = stack.back();
      stack.pop_back();
      for (size_t b = 0; b < n; ++b) {
        if (a == b || !cartan.connected(a, b)) continue;
        // d_a / d_b = A_ba / A_ab  =>  d_b = d_a * A_ab / A_ba
        Fraction cand{d[a].num * cartan.at(a, b), d[a].den * cartan.at(b, a)};
        cand.reduce();
        if (!state[b]) {
          d[b] = cand;
          state[b] = 1;
          stack.push_back(b);
        } else if (d[b].num * cand.den != cand.num * d[b].den) {
          throw Error(ErrorCode::NotSymmetrizable,
                      "ratio constraints inconsistent around a cycle through " +
                          cartan.label(a) + " and " + cartan.label(b));
        }
      }
    }
  }

  Int den_lcm = 1;
  for (const auto& f : d) den_lcm = std::lcm(den_lcm, f.den);
  std::vector<Int> out(n);
  for (size_t a = 0; a < n; ++a) out[a] = d[a].num * (den_lcm / d[a].den);
  Int g = 0;
  for (Int v : out) g = std::gcd(g, v);
  for (Int& v : out) v /= g;

  // DA symmetric, entries positive, gcd 1
  for (size_t a = 0; a < n; ++a) {
    if (out[a] <= 0)
      throw Error(ErrorCode::Internal, "non-positive symmetrizer entry");
    for (size_t b = 0; b < n; ++b)
      if (out[a] * cartan.at(a, b) != out[b] * cartan.at(b, a))
        throw Error(ErrorCode::NotSymmetrizable,
                    "no diagonal D makes DA symmetric");
  }
  return Symmetrizer{std::move(out)};
}

Weight Weight::fundamental(size_t rank, size_t a) {
  Weight w = Weight::zero(rank);
  w.lambda.at(a) = 1;
  return w;
}

Weight Weight::simple_root(size_t rank, size_t a) {
  Weight w = Weight::zero(rank);
  w.alpha.at(a) = 1;
  return w;
}

Weight Weight::operator+(const Weight& o) const {
  Weight out = *this;
  for (size_t i = 0; i < lambda.size(); ++i) {
    out.lambda[i] += o.lambda[i];
    out.alpha[i] += o.alpha[i];
  }
  return out;
}

Weight Weight::operator-(const Weight& o) const {
  Weight out = *this;
  for (size_t i = 0; i < lambda.size(); ++i) {
    out.lambda[i] -= o.lambda[i];
    out.alpha[i] -= o.alpha[i];
  }
  return out;
}

Int pairing(const CartanMatrix& cartan, size_t b, const Weight& w) {
  if (b >= cartan.rank())
    throw Error(ErrorCode::UnknownIndex, "index out of range in pairing");
  if (w.lambda.size() != cartan.rank() || w.alpha.size() != cartan.rank())
    throw Error(ErrorCode::InvalidArgument, "weight rank mismatch");
  Int out = w.lambda[b];
  for (size_t a = 0; a < cartan.rank(); ++a)
    out += w.alpha[a] * cartan.at(b, a);
  return out;
}

std::vector<std::vector<Int>> positive_roots(const CartanMatrix& cartan,
                                             size_t cap) {
  const size_t n = cartan.rank();
  std::set<std::vector<Int>> roots;
  std::vector<std::vector<Int>> frontier;
  for (size_t a = 0; a < n; ++a) {
    std::vector<Int> e(n, 0);
    e[a] = 1;
    roots.insert(e);
    frontier.push_back(std::move(e));
  }
  while (!frontier.empty()) {
    std::vector<std::vector<Int>> next;
    for (const auto& beta : frontier) {
      for (size_t a = 0; a < n; ++a) {
        // <h_a, beta>
        Int pair = 0;
        for (size_t b = 0; b < n; ++b) pair += cartan.at(a, b) * beta[b];
        // p = how far the a-string continues downward from beta
        Int p = 0;
        {
          std::vector<Int> down = beta;
          for (;;) {
            down[a] -= 1;
            if (down[a] < 0 || !roots.count(down)) break;
            ++p;
          }
        }
        Int q = p - pair;
        std::vector<Int> up = beta;
        for (Int k = 1; k <= q; ++k) {
          up[a] += 1;
          if (roots.insert(up).second) {
            next.push_back(up);
            if (roots.size() > cap)
              throw Error(ErrorCode::NotFiniteType,
                          "positive-root closure exceeded cap of " +
                              std::to_string(cap));
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return std::vector<std::vector<Int>>(roots.begin(), roots.end());
}

Int weyl_dimension(const CartanMatrix& cartan, const Weight& lambda) {
  const size_t n = cartan.rank();
  if (lambda.lambda.size() != n || lambda.alpha.size() != n)
    throw Error(ErrorCode::InvalidArgument, "weight rank mismatch");
  for (size_t a = 0; a < n; ++a) {
    if (lambda.alpha[a] != 0)
      throw Error(ErrorCode::NotDominant,
                  "weight must be given over fundamental weights only");
    if (lambda.lambda[a] < 0)
      throw Error(ErrorCode::NotDominant, "weight is not dominant");
  }
  auto roots = positive_roots(cartan);
  Symmetrizer sym = symmetrize(cartan);
  // (lambda + rho, beta) / (rho, beta) with (Lambda_a, alpha_b) = d_b delta_ab;
  // the normalization by (beta, beta) cancels between numerator and denominator
  auto gcd128 = [](__int128 x, __int128 y) {
    while (y != 0) {
      __int128 t = x % y;
      x = y;
      y = t;
    }
    return x < 0 ? -x : x;
  };
  __int128 num = 1, den = 1;
  for (const auto& beta : roots) {
    Int top = 0, bot = 0;
    for (size_t b = 0; b < n; ++b) {
      top += beta[b] * sym.d[b] * (lambda.lambda[b] + 1);
      bot += beta[b] * sym.d[b];
    }
    num *= top;
    den *= bot;
    __int128 g = gcd128(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  if (den != 1)
    throw Error(ErrorCode::Internal, "Weyl dimension is not integral");
  return static_cast<Int>(num);
}

}  // namespace kmc
