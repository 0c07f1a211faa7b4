#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "nilharm/rational.hpp"

namespace nilharm {

/// Multivariate polynomial with rational coefficients in a fixed number of
/// variables. Terms are kept in descending graded lexicographic order.
class Polynomial {
 public:
  using Monomial = std::vector<unsigned>;

  struct GrlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const;
  };
  using TermMap = std::map<Monomial, Rational, GrlexDescending>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;

  Rational coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& s);

  Rational evaluate(std::span<const Rational> point) const;
  double evaluate(std::span<const double> point) const;

  /// Substitute polynomial expressions (all in a common ring) for the variables.
  Polynomial substitute(const std::vector<Polynomial>& values) const;

  /// e.g. "2*z1^2*z3 - 1/3*z2 + 5"; "0" for the zero polynomial.
  std::string to_string(const std::vector<std::string>& names) const;
  std::string to_string() const;

  bool operator==(const Polynomial& other) const {
    return nvars_ == other.nvars_ && terms_ == other.terms_;
  }

 private:
  std::size_t nvars_;
  TermMap terms_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Rational& s, Polynomial a);

}  // namespace nilharm
