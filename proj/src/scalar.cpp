#include "ehv/scalar.hpp"

#include <sstream>
#include <stdexcept>

namespace ehv {

namespace {

constexpr const char* kNames[kNumParameters] = {
    "alpha", "beta", "F", "ell1", "ell2", "ell3", "lambda", "mu", "nu"};

}  // namespace

const char* parameter_name(Parameter p) { return kNames[static_cast<int>(p)]; }

std::optional<Parameter> parameter_from_name(const std::string& name) {
  for (int i = 0; i < kNumParameters; ++i) {
    if (name == kNames[i]) return static_cast<Parameter>(i);
  }
  return std::nullopt;
}

Scalar::Scalar(long n) {
  if (n != 0) terms_[MultiDegree{}] = n;
}

Scalar::Scalar(const Rational& r) {
  if (r != 0) terms_[MultiDegree{}] = r;
}

Scalar Scalar::parameter(Parameter p) {
  Scalar s;
  MultiDegree deg{};
  deg[static_cast<int>(p)] = 1;
  s.terms_[deg] = 1;
  return s;
}

void Scalar::add_term(const MultiDegree& deg, const Rational& coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(deg);
  if (it == terms_.end()) {
    terms_.emplace(deg, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (const auto& [deg, c] : o.terms_) add_term(deg, c);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (const auto& [deg, c] : o.terms_) add_term(deg, -c);
  return *this;
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar r = *this;
  r += o;
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  Scalar r = *this;
  r -= o;
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r;
  for (const auto& [deg, c] : terms_) r.terms_[deg] = -c;
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar r;
  for (const auto& [da, ca] : terms_) {
    for (const auto& [db, cb] : o.terms_) {
      MultiDegree deg;
      for (int i = 0; i < kNumParameters; ++i) deg[i] = da[i] + db[i];
      r.add_term(deg, ca * cb);
    }
  }
  return r;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  *this = *this * o;
  return *this;
}

Scalar Scalar::pow(unsigned e) const {
  Scalar r(1);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1u;
  }
  return r;
}

Scalar Scalar::substitute(const Substitution& bindings) const {
  Scalar result;
  for (const auto& [deg, c] : terms_) {
    Scalar term(c);
    for (int i = 0; i < kNumParameters; ++i) {
      if (deg[i] == 0) continue;
      auto p = static_cast<Parameter>(i);
      auto it = bindings.find(p);
      const Scalar base = (it != bindings.end()) ? it->second : parameter(p);
      term *= base.pow(static_cast<unsigned>(deg[i]));
    }
    result += term;
  }
  return result;
}

std::optional<Rational> Scalar::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first == MultiDegree{}) {
    return terms_.begin()->second;
  }
  return std::nullopt;
}

std::string Scalar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [deg, c] : terms_) {
    std::ostringstream piece;
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    bool printed_coeff = false;
    bool has_vars = false;
    for (int i = 0; i < kNumParameters; ++i) {
      if (deg[i] != 0) has_vars = true;
    }
    if (!has_vars || mag != 1) {
      piece << mag.str();
      printed_coeff = true;
    }
    for (int i = 0; i < kNumParameters; ++i) {
      if (deg[i] == 0) continue;
      if (printed_coeff || piece.tellp() > 0) piece << "*";
      piece << kNames[i];
      if (deg[i] != 1) piece << "^" << deg[i];
      printed_coeff = true;
    }
    if (first) {
      if (negative) out << "-";
      out << piece.str();
      first = false;
    } else {
      out << (negative ? " - " : " + ") << piece.str();
    }
  }
  return out.str();
}

}  // namespace ehv
