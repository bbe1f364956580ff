#include "rigged.hpp"

#include <algorithm>
#include <sstream>

namespace kmc {

namespace {

bool canonical_before(const RiggedString& lhs, const RiggedString& rhs) {
  if (lhs.length != rhs.length) return lhs.length > rhs.length;
  return lhs.rigging > rhs.rigging;
}

}  // namespace

RiggedPartition::RiggedPartition(std::vector<RiggedString> strings)
    : strings_(std::move(strings)) {
  for (const auto& s : strings_)
    if (s.length < 1)
      throw Error(ErrorCode::InvalidArgument, "string length must be >= 1");
  normalize();
}

void RiggedPartition::normalize() {
  std::sort(strings_.begin(), strings_.end(), canonical_before);
}

Int RiggedPartition::boxes() const {
  Int total = 0;
  for (const auto& s : strings_) total += s.length;
  return total;
}

Int RiggedPartition::multiplicity(Int length) const {
  Int count = 0;
  for (const auto& s : strings_) count += (s.length == length) ? 1 : 0;
  return count;
}

std::optional<Int> RiggedPartition::min_rigging() const {
  if (strings_.empty()) return std::nullopt;
  Int best = strings_.front().rigging;
  for (const auto& s : strings_) best = std::min(best, s.rigging);
  return best;
}

RiggedConfiguration RiggedConfiguration::empty(
    CartanPtr cartan, std::optional<std::vector<Int>> lambda) {
  return RiggedConfiguration(std::move(cartan), std::move(lambda),
                             std::vector<RiggedPartition>());
}

RiggedConfiguration::RiggedConfiguration(CartanPtr cartan,
                                         std::optional<std::vector<Int>> lambda,
                                         std::vector<RiggedPartition> parts)
    : cartan_(std::move(cartan)),
      lambda_(std::move(lambda)),
      parts_(std::move(parts)) {
  if (!cartan_) throw Error(ErrorCode::InvalidArgument, "null Cartan matrix");
  if (parts_.size() > cartan_->rank())
    throw Error(ErrorCode::InvalidArgument, "more parts than Dynkin indices");
  parts_.resize(cartan_->rank());
  if (lambda_) {
    if (lambda_->size() != cartan_->rank())
      throw Error(ErrorCode::InvalidArgument, "highest weight rank mismatch");
    for (Int c : *lambda_)
      if (c < 0)
        throw Error(ErrorCode::NotDominant, "highest weight must be dominant");
  }
  for (auto& p : parts_) p.normalize();
}

Int RiggedConfiguration::vacancy(size_t a, Int i) const {
  Int out = c_coeff(a);
  for (size_t b = 0; b < parts_.size(); ++b) {
    Int sum = 0;
    for (const auto& s : parts_[b].strings()) sum += std::min(i, s.length);
    out -= cartan_->at(a, b) * sum;
  }
  return out;
}

Int RiggedConfiguration::vacancy_inf(size_t a) const {
  Int out = c_coeff(a);
  for (size_t b = 0; b < parts_.size(); ++b)
    out -= cartan_->at(a, b) * parts_[b].boxes();
  return out;
}

std::optional<RiggedConfiguration> RiggedConfiguration::f(size_t a) const {
  const auto& part = parts_.at(a);
  auto x = part.min_rigging();

  Int ell = 0;           // length of the modified string before the change
  size_t selected = 0;   // position in the canonical order
  bool add_new = !x || *x > 0;
  if (!add_new) {
    // maximal length among strings rigged x; the canonical order puts it first
    for (size_t idx = 0; idx < part.strings().size(); ++idx) {
      if (part.strings()[idx].rigging == *x) {
        selected = idx;
        ell = part.strings()[idx].length;
        break;
      }
    }
  }

  RiggedConfiguration out(*this);
  // shift every untouched rigging so its colabel is preserved:
  // delta p_j^(b) = -A_ba (min(j, ell+1) - min(j, ell))
  for (size_t b = 0; b < out.parts_.size(); ++b) {
    Int coeff = -cartan_->at(b, a);
    for (size_t idx = 0; idx < out.parts_[b].strings_.size(); ++idx) {
      if (b == a && !add_new && idx == selected) continue;
      auto& s = out.parts_[b].strings_[idx];
      if (s.length > ell) s.rigging += coeff;
    }
  }
  if (add_new) {
    out.parts_[a].strings_.push_back(RiggedString{1, -1});
  } else {
    auto& s = out.parts_[a].strings_[selected];
    s.length = ell + 1;
    s.rigging = *x - 1;
  }
  out.parts_[a].normalize();

  if (lambda_ && !out.is_lambda_valid(*lambda_)) return std::nullopt;
  return out;
}

std::optional<RiggedConfiguration> RiggedConfiguration::e(size_t a) const {
  const auto& part = parts_.at(a);
  auto x = part.min_rigging();
  if (!x || *x >= 0) return std::nullopt;

  // minimal length among strings rigged x; canonical order puts it last
  size_t selected = 0;
  Int ell = 0;
  for (size_t idx = part.strings().size(); idx-- > 0;) {
    if (part.strings()[idx].rigging == *x) {
      selected = idx;
      ell = part.strings()[idx].length;
      break;
    }
  }

  RiggedConfiguration out(*this);
  // delta p_j^(b) = A_ba (min(j, ell) - min(j, ell-1))
  for (size_t b = 0; b < out.parts_.size(); ++b) {
    Int coeff = cartan_->at(b, a);
    for (size_t idx = 0; idx < out.parts_[b].strings_.size(); ++idx) {
      if (b == a && idx == selected) continue;
      auto& s = out.parts_[b].strings_[idx];
      if (s.length >= ell) s.rigging += coeff;
    }
  }
  auto& strings = out.parts_[a].strings_;
  if (ell == 1) {
    strings.erase(strings.begin() + static_cast<std::ptrdiff_t>(selected));
  } else {
    strings[selected].length = ell - 1;
    strings[selected].rigging = *x + 1;
  }
  out.parts_[a].normalize();
  return out;
}

Int RiggedConfiguration::epsilon(size_t a) const {
  auto x = parts_.at(a).min_rigging();
  if (!x) return 0;
  return -std::min<Int>(0, *x);
}

Int RiggedConfiguration::phi(size_t a) const {
  auto x = parts_.at(a).min_rigging();
  Int drop = x ? std::min<Int>(0, *x) : 0;
  return vacancy_inf(a) - drop;
}

Weight RiggedConfiguration::weight() const {
  Weight w = Weight::zero(rank());
  if (lambda_) w.lambda = *lambda_;
  for (size_t a = 0; a < parts_.size(); ++a) w.alpha[a] = -parts_[a].boxes();
  return w;
}

bool RiggedConfiguration::is_lambda_valid(const std::vector<Int>& lambda) const {
  if (lambda.size() != rank())
    throw Error(ErrorCode::InvalidArgument, "lambda rank mismatch");
  for (size_t a = 0; a < parts_.size(); ++a) {
    for (const auto& s : parts_[a].strings()) {
      Int p = lambda[a] - c_coeff(a) + vacancy(a, s.length);
      if (s.rigging > p) return false;
    }
  }
  return true;
}

Int RiggedConfiguration::colabel(size_t a, const RiggedString& s) const {
  const auto& strings = parts_.at(a).strings();
  if (std::find(strings.begin(), strings.end(), s) == strings.end())
    throw Error(ErrorCode::StringNotFound,
                "no string (" + std::to_string(s.length) + "," +
                    std::to_string(s.rigging) + ") in part " +
                    cartan_->label(a));
  return vacancy(a, s.length) - s.rigging;
}

std::string RiggedConfiguration::canonical_key() const {
  std::ostringstream os;
  for (const auto& p : parts_) {
    for (const auto& s : p.strings()) os << s.length << ',' << s.rigging << ';';
    os << '|';
  }
  return os.str();
}

nlohmann::json RiggedConfiguration::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (size_t a = 0; a < parts_.size(); ++a) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& s : parts_[a].strings())
      rows.push_back({s.length, s.rigging});
    j[cartan_->label(a)] = std::move(rows);
  }
  return j;
}

RiggedConfiguration RiggedConfiguration::from_json(
    const nlohmann::json& j, CartanPtr cartan,
    std::optional<std::vector<Int>> lambda) {
  if (!j.is_object())
    throw Error(ErrorCode::Parse, "rigged configuration JSON must be an object");
  std::vector<RiggedPartition> parts(cartan->rank());
  for (const auto& [key, rows] : j.items()) {
    size_t a = cartan->index_of(key);
    std::vector<RiggedString> strings;
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != 2)
        throw Error(ErrorCode::Parse, "string rows must be [length, rigging]");
      strings.push_back(RiggedString{row[0].get<Int>(), row[1].get<Int>()});
    }
    parts[a] = RiggedPartition(std::move(strings));
  }
  return RiggedConfiguration(std::move(cartan), std::move(lambda),
                             std::move(parts));
}

std::string RiggedConfiguration::to_text() const {
  std::ostringstream os;
  for (size_t a = 0; a < parts_.size(); ++a) {
    if (a) os << '\n';
    os << cartan_->label(a) << ':';
    if (parts_[a].empty()) {
      os << " -";
      continue;
    }
    bool first = true;
    for (const auto& s : parts_[a].strings()) {
      os << (first ? " " : ", ") << s.length << " : " << s.rigging << " ("
         << vacancy(a, s.length) << ")";
      first = false;
    }
  }
  return os.str();
}

}  // namespace kmc
