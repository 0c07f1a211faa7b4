#include "nilharm/polynomial.hpp"

#include <cmath>
#include <numeric>

#include "nilharm/error.hpp"

namespace nilharm {

bool Polynomial::GrlexDescending::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = std::accumulate(a.begin(), a.end(), 0u);
  const unsigned db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db) return da > db;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw InvalidInput("polynomial variable out of range");
  Polynomial p(nvars);
  Monomial m(nvars, 0);
  m[i] = 1;
  p.add_term(m, 1);
  return p;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  const auto& m = terms_.begin()->first;  // grlex puts the highest degree first
  return static_cast<int>(std::accumulate(m.begin(), m.end(), 0u));
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = static_cast<unsigned>(total_degree());
  for (const auto& [m, c] : terms_)
    if (std::accumulate(m.begin(), m.end(), 0u) != d) return false;
  return true;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != nvars_) throw InvalidInput("monomial arity mismatch");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.nvars_ != nvars_) throw InvalidInput("polynomial ring mismatch");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.nvars_ != nvars_) throw InvalidInput("polynomial ring mismatch");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw InvalidInput("evaluation point arity mismatch");
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (unsigned e = 0; e < m[i]; ++e) t *= point[i];
    sum += t;
  }
  return sum;
}

double Polynomial::evaluate(std::span<const double> point) const {
  if (point.size() != nvars_) throw InvalidInput("evaluation point arity mismatch");
  double sum = 0.0;
  for (const auto& [m, c] : terms_) {
    double t = c.get_d();
    for (std::size_t i = 0; i < nvars_; ++i)
      if (m[i]) t *= std::pow(point[i], static_cast<int>(m[i]));
    sum += t;
  }
  return sum;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& values) const {
  if (values.size() != nvars_) throw InvalidInput("substitution arity mismatch");
  const std::size_t target = values.empty() ? 0 : values[0].nvars();
  for (const auto& v : values)
    if (v.nvars() != target) throw InvalidInput("substitution ring mismatch");
  Polynomial out(target);
  for (const auto& [m, c] : terms_) {
    Polynomial t = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < nvars_; ++i)
      for (unsigned e = 0; e < m[i]; ++e) t = t * values[i];
    out += t;
  }
  return out;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (names.size() != nvars_) throw InvalidInput("variable name count mismatch");
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = abs(c);
    if (first)
      out += sgn(c) < 0 ? "-" : "";
    else
      out += sgn(c) < 0 ? " - " : " + ";
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (!m[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty())
      out += mag.get_str();
    else if (mag == 1)
      out += mono;
    else
      out += mag.get_str() + "*" + mono;
  }
  return out;
}

std::string Polynomial::to_string() const {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars_; ++i) names.push_back("z" + std::to_string(i + 1));
  return to_string(names);
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
Polynomial operator-(Polynomial a) { return a *= Rational(-1); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars()) throw InvalidInput("polynomial ring mismatch");
  Polynomial out(a.nvars());
  Polynomial::Monomial m(a.nvars());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  return out;
}

Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

}  // namespace nilharm
