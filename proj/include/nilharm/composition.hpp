#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>

#include "nilharm/rational.hpp"

namespace nilharm {

enum class CompositionKind { C, H, O };

std::size_t real_dimension(CompositionKind kind);
char kind_letter(CompositionKind kind);
CompositionKind parse_composition_kind(const std::string& text);

/// e_i e_j = sign * e_index in the octonions, with e_0 the identity.
struct BasisProduct {
  int sign;
  std::size_t index;
  bool operator==(const BasisProduct&) const = default;
};

/// The oriented triples (i, j, k) meaning e_i e_j = e_k; cyclic permutations
/// of each triple hold as well.
inline constexpr std::array<std::array<std::size_t, 3>, 7> kOctonionTriples{{
    {1, 2, 3}, {3, 5, 6}, {6, 7, 1}, {1, 4, 5}, {3, 4, 7}, {6, 4, 2}, {2, 5, 7}}};

/// Product of two octonion basis units, read from the table expanded once
/// from kOctonionTriples.
BasisProduct basis_product(std::size_t i, std::size_t j);

/// Element of C, H or O with exact coefficients on e_0, ..., e_{d-1}.
/// C and H are the subalgebras spanned by {e0, e1} and {e0, e1, e2, e3}.
class CompositionElement {
 public:
  CompositionElement(CompositionKind kind, RationalVector coefficients);

  static CompositionElement zero(CompositionKind kind);
  static CompositionElement unit(CompositionKind kind, std::size_t i);

  CompositionKind kind() const { return kind_; }
  const RationalVector& coefficients() const { return coeffs_; }
  const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
  std::size_t size() const { return coeffs_.size(); }

  bool operator==(const CompositionElement&) const = default;

 private:
  CompositionKind kind_;
  RationalVector coeffs_;
};

CompositionElement operator+(const CompositionElement& a, const CompositionElement& b);
CompositionElement operator-(const CompositionElement& a, const CompositionElement& b);
CompositionElement operator-(const CompositionElement& a);
CompositionElement operator*(const Rational& s, const CompositionElement& a);

CompositionElement multiply(const CompositionElement& a, const CompositionElement& b);
CompositionElement conj(const CompositionElement& a);
CompositionElement im(const CompositionElement& a);
Rational norm(const CompositionElement& a);

/// <u, v> = sum_i u_i conj(v_i), conjugate-linear in the second slot.
CompositionElement hermitian_inner(std::span<const CompositionElement> u,
                                   std::span<const CompositionElement> v);

/// "e3", "-e7", "0", or a general "2e0 - 1/2e4" style rendering.
std::string to_string(const CompositionElement& a);

}  // namespace nilharm
