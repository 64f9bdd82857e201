#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ehv {

using Rational = boost::multiprecision::cpp_rational;

// Closed parameter alphabet. alpha, beta, F are the structure parameters of
// the algebra; ell1..ell3 are the central levels; lambda, mu, nu are free
// scalars reserved for test vectors.
enum class Parameter : int {
  alpha = 0,
  beta,
  F,
  ell1,
  ell2,
  ell3,
  lambda,
  mu,
  nu,
};

inline constexpr int kNumParameters = 9;

const char* parameter_name(Parameter p);
std::optional<Parameter> parameter_from_name(const std::string& name);

// Exponent tuple of a monomial over the parameter alphabet.
using MultiDegree = std::array<int, kNumParameters>;

class Scalar;
using Substitution = std::map<Parameter, Scalar>;

// Exact multivariate polynomial over the rationals in the fixed parameter
// alphabet. Canonical: no zero coefficients are ever stored, so equality of
// term maps is equality of polynomials.
class Scalar {
 public:
  using TermMap = std::map<MultiDegree, Rational>;

  Scalar() = default;
  Scalar(long n);  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& r);  // NOLINT(google-explicit-constructor)

  static Scalar parameter(Parameter p);

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;

  bool operator==(const Scalar& o) const { return terms_ == o.terms_; }
  bool operator!=(const Scalar& o) const { return terms_ != o.terms_; }

  Scalar pow(unsigned e) const;

  // Simultaneous substitution of parameters by scalars; unbound parameters
  // stay symbolic.
  Scalar substitute(const Substitution& bindings) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_identically_nonzero() const { return !terms_.empty(); }

  // Rational value of a constant polynomial; nullopt if any parameter left.
  std::optional<Rational> constant_value() const;

  const TermMap& terms() const { return terms_; }

  std::string str() const;

 private:
  void add_term(const MultiDegree& deg, const Rational& coeff);

  TermMap terms_;
};

inline Scalar operator*(long n, const Scalar& s) { return Scalar(n) * s; }

}  // namespace ehv
