#include "nilharm/composition.hpp"

#include <stdexcept>

#include "nilharm/error.hpp"

namespace nilharm {

namespace {

using Table = std::array<std::array<BasisProduct, 8>, 8>;

Table expand_table() {
  Table t{};
  for (std::size_t j = 0; j < 8; ++j) {
    t[0][j] = {1, j};
    t[j][0] = {1, j};
  }
  for (std::size_t j = 1; j < 8; ++j) t[j][j] = {-1, 0};
  for (const auto& tri : kOctonionTriples) {
    for (std::size_t r = 0; r < 3; ++r) {
      std::size_t a = tri[r], b = tri[(r + 1) % 3], c = tri[(r + 2) % 3];
      t[a][b] = {1, c};
      t[b][a] = {-1, c};
    }
  }
  // identity, squares and anticommutation must all be consistent
  for (std::size_t j = 1; j < 8; ++j) {
    if (!(t[0][j] == BasisProduct{1, j}) || !(t[j][0] == BasisProduct{1, j}))
      throw std::logic_error("octonion table violates e0 e_j = e_j = e_j e0");
    if (!(t[j][j] == BasisProduct{-1, 0}))
      throw std::logic_error("octonion table violates e_j^2 = -e0");
    for (std::size_t k = 1; k < 8; ++k) {
      if (k == j) continue;
      if (t[j][k].sign == 0 || t[j][k].index == 0 || t[j][k].index != t[k][j].index ||
          t[j][k].sign != -t[k][j].sign)
        throw std::logic_error("octonion table violates anticommutation");
    }
  }
  return t;
}

const Table& octonion_table() {
  static const Table table = expand_table();
  return table;
}

void require_same_kind(const CompositionElement& a, const CompositionElement& b) {
  if (a.kind() != b.kind()) throw InvalidInput("mixed composition algebra tags");
}

}  // namespace

std::size_t real_dimension(CompositionKind kind) {
  switch (kind) {
    case CompositionKind::C: return 2;
    case CompositionKind::H: return 4;
    case CompositionKind::O: return 8;
  }
  return 0;
}

char kind_letter(CompositionKind kind) {
  switch (kind) {
    case CompositionKind::C: return 'C';
    case CompositionKind::H: return 'H';
    case CompositionKind::O: return 'O';
  }
  return '?';
}

CompositionKind parse_composition_kind(const std::string& text) {
  if (text == "C") return CompositionKind::C;
  if (text == "H") return CompositionKind::H;
  if (text == "O") return CompositionKind::O;
  throw InvalidInput("unknown composition algebra '" + text + "' (expected C, H or O)");
}

BasisProduct basis_product(std::size_t i, std::size_t j) {
  if (i >= 8 || j >= 8) throw InvalidInput("octonion basis index out of range");
  return octonion_table()[i][j];
}

CompositionElement::CompositionElement(CompositionKind kind, RationalVector coefficients)
    : kind_(kind), coeffs_(std::move(coefficients)) {
  if (coeffs_.size() != real_dimension(kind_))
    throw InvalidInput("coefficient length does not match composition algebra");
}

CompositionElement CompositionElement::zero(CompositionKind kind) {
  return {kind, RationalVector(real_dimension(kind))};
}

CompositionElement CompositionElement::unit(CompositionKind kind, std::size_t i) {
  RationalVector c(real_dimension(kind));
  if (i >= c.size()) throw InvalidInput("basis unit out of range");
  c[i] = 1;
  return {kind, std::move(c)};
}

CompositionElement operator+(const CompositionElement& a, const CompositionElement& b) {
  require_same_kind(a, b);
  RationalVector c = a.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return {a.kind(), std::move(c)};
}

CompositionElement operator-(const CompositionElement& a, const CompositionElement& b) {
  require_same_kind(a, b);
  RationalVector c = a.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b[i];
  return {a.kind(), std::move(c)};
}

CompositionElement operator-(const CompositionElement& a) {
  RationalVector c = a.coefficients();
  for (auto& x : c) x = -x;
  return {a.kind(), std::move(c)};
}

CompositionElement operator*(const Rational& s, const CompositionElement& a) {
  RationalVector c = a.coefficients();
  for (auto& x : c) x *= s;
  return {a.kind(), std::move(c)};
}

CompositionElement multiply(const CompositionElement& a, const CompositionElement& b) {
  require_same_kind(a, b);
  const auto& t = octonion_table();
  const std::size_t d = a.size();
  RationalVector out(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (sgn(b[j]) == 0) continue;
      const auto& p = t[i][j];
      // C and H are closed subalgebras, so p.index < d here
      if (p.sign > 0)
        out[p.index] += a[i] * b[j];
      else
        out[p.index] -= a[i] * b[j];
    }
  }
  return {a.kind(), std::move(out)};
}

CompositionElement conj(const CompositionElement& a) {
  RationalVector c = a.coefficients();
  for (std::size_t i = 1; i < c.size(); ++i) c[i] = -c[i];
  return {a.kind(), std::move(c)};
}

CompositionElement im(const CompositionElement& a) {
  RationalVector c = a.coefficients();
  c[0] = 0;
  return {a.kind(), std::move(c)};
}

Rational norm(const CompositionElement& a) {
  Rational s = 0;
  for (const auto& c : a.coefficients()) s += c * c;
  return s;
}

CompositionElement hermitian_inner(std::span<const CompositionElement> u,
                                   std::span<const CompositionElement> v) {
  if (u.size() != v.size()) throw InvalidInput("hermitian form: length mismatch");
  if (u.empty()) throw InvalidInput("hermitian form: empty vectors");
  CompositionElement acc = CompositionElement::zero(u[0].kind());
  for (std::size_t i = 0; i < u.size(); ++i) {
    require_same_kind(u[i], v[i]);
    require_same_kind(u[i], acc);
    acc = acc + multiply(u[i], conj(v[i]));
  }
  return acc;
}

std::string to_string(const CompositionElement& a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Rational& c = a[i];
    if (sgn(c) == 0) continue;
    std::string unit = "e" + std::to_string(i);
    if (out.empty()) {
      if (c == 1)
        out = unit;
      else if (c == -1)
        out = "-" + unit;
      else
        out = c.get_str() + unit;
    } else {
      Rational m = abs(c);
      out += sgn(c) > 0 ? " + " : " - ";
      out += (m == 1 ? std::string() : m.get_str()) + unit;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace nilharm
