#include "nilharm/stepwise.hpp"

#include <algorithm>
#include <set>

#include "nilharm/catalog.hpp"
#include "nilharm/error.hpp"
#include "nilharm/pfaffian.hpp"

namespace nilharm {

std::string to_string(ExceptionalCase c) {
  switch (c) {
    case ExceptionalCase::Case1: return "case1";
    case ExceptionalCase::Case6: return "case6";
    case ExceptionalCase::Case3: return "case3";
  }
  return "?";
}

ExceptionalCase parse_exceptional_case(const std::string& text) {
  if (text == "case1") return ExceptionalCase::Case1;
  if (text == "case6") return ExceptionalCase::Case6;
  if (text == "case3") return ExceptionalCase::Case3;
  throw InvalidInput("unknown case '" + text + "' (expected case1, case6 or case3)");
}

StepwiseDecomposition make_decomposition(const LieAlgebraData& alg,
                                         std::vector<std::size_t> l2_indices) {
  std::set<std::size_t> l2(l2_indices.begin(), l2_indices.end());
  if (l2.size() != l2_indices.size()) throw InvalidInput("duplicate l2 index");
  for (auto i : l2)
    if (i >= alg.dim()) throw InvalidInput("l2 index out of range");
  StepwiseDecomposition dec{alg, {}, std::move(l2_indices), {}};
  for (std::size_t i = 0; i < alg.dim(); ++i)
    if (!l2.count(i)) dec.l1_indices.push_back(i);
  return dec;
}

StepwiseDecomposition decompose(ExceptionalCase c, int n) {
  if (c == ExceptionalCase::Case3) {
    auto alg = octonion_double();
    return make_decomposition(alg, {alg.index_of("(0,e7)")});
  }
  if (n < 3 || n % 2 == 0) throw InvalidInput("decompose: case1/case6 need odd n >= 3");
  const std::string last = "u" + std::to_string(n);
  if (c == ExceptionalCase::Case1) {
    auto alg = free_two_step(n, ScalarField::R);
    return make_decomposition(alg, {alg.index_of(last)});
  }
  auto alg = free_two_step(n, ScalarField::C);
  return make_decomposition(alg, {alg.index_of(last), alg.index_of("i" + last)});
}

LieAlgebraData l1_algebra(const StepwiseDecomposition& dec) {
  // first restrict with an empty center designation, then read off the center
  LieAlgebraData raw = coordinate_subalgebra(dec.algebra, dec.l1_indices, {});
  RationalMatrix z = center(raw);
  std::vector<std::size_t> local_center;
  for (std::size_t r = 0; r < z.rows(); ++r) {
    std::size_t hits = 0, where = 0;
    for (std::size_t j = 0; j < z.cols(); ++j)
      if (sgn(z(r, j)) != 0) {
        ++hits;
        where = j;
      }
    if (hits != 1) throw InvalidInput("center of l1 is not coordinate aligned");
    local_center.push_back(where);
  }
  std::vector<std::size_t> original_center;
  for (auto c : local_center) original_center.push_back(dec.l1_indices[c]);
  return coordinate_subalgebra(dec.algebra, dec.l1_indices, original_center);
}

Polynomial l1_pf_polynomial(const StepwiseDecomposition& dec) {
  return pf_polynomial(l1_algebra(dec));
}

StepwiseFlags verify(const StepwiseDecomposition& dec) {
  const auto& alg = dec.algebra;
  const std::size_t n = alg.dim();
  StepwiseFlags flags;

  RationalMatrix l1_span = coordinate_span(n, dec.l1_indices);
  RationalMatrix l2_span = coordinate_span(n, dec.l2_indices);

  // [n, l1] inside l1
  std::vector<RationalVector> images;
  for (std::size_t i = 0; i < n; ++i)
    for (auto j : dec.l1_indices) images.push_back(alg.structure(i, j));
  flags.l1_is_ideal = row_span_contains(l1_span, RationalMatrix::from_rows(images, n));

  RationalMatrix both(l1_span.rows() + l2_span.rows(), n);
  for (std::size_t r = 0; r < l1_span.rows(); ++r)
    for (std::size_t j = 0; j < n; ++j) both(r, j) = l1_span(r, j);
  for (std::size_t r = 0; r < l2_span.rows(); ++r)
    for (std::size_t j = 0; j < n; ++j) both(l1_span.rows() + r, j) = l2_span(r, j);
  flags.direct_sum = rank(both) == n && l1_span.rows() + l2_span.rows() == n;

  flags.l2_abelian_subalgebra = true;
  for (std::size_t a = 0; a < dec.l2_indices.size(); ++a)
    for (std::size_t b = a + 1; b < dec.l2_indices.size(); ++b) {
      auto s = alg.structure(dec.l2_indices[a], dec.l2_indices[b]);
      for (const auto& c : s)
        if (sgn(c) != 0) flags.l2_abelian_subalgebra = false;
    }

  if (flags.l1_is_ideal) {
    try {
      flags.l1_square_integrable = !l1_pf_polynomial(dec).is_zero();
    } catch (const InvalidInput&) {
      flags.l1_square_integrable = false;
    }
  }
  return flags;
}

SplitSearch find_codim_split(const LieAlgebraData& alg) {
  if (!pf_polynomial(alg).is_zero())
    throw NotApplicable("find_codim_split: algebra is already square integrable");
  SplitSearch out;
  const auto& comp = alg.complement_indices();
  auto attempt = [&](std::vector<std::size_t> l2) {
    ++out.candidates_tried;
    auto dec = make_decomposition(alg, std::move(l2));
    dec.verification = verify(dec);
    if (dec.verification.all()) out.split = std::move(dec);
    return out.split.has_value();
  };
  for (auto i : comp)
    if (attempt({i})) return out;
  for (std::size_t a = 0; a < comp.size(); ++a)
    for (std::size_t b = a + 1; b < comp.size(); ++b)
      if (attempt({comp[a], comp[b]})) return out;
  return out;
}

}  // namespace nilharm
