#include "nilharm/pfaffian.hpp"

#include <cstdint>
#include <numeric>
#include <unordered_map>

#include "nilharm/error.hpp"

namespace nilharm {

namespace {

bool is_zero(const Rational& r) { return sgn(r) == 0; }
bool is_zero(const Polynomial& p) { return p.is_zero(); }

template <class Scalar>
void require_antisymmetric(const SkewForm<Scalar>& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!is_zero(m(i, i))) throw InvalidInput("pfaffian: nonzero diagonal entry");
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (!(m(i, j) == -m(j, i))) throw InvalidInput("pfaffian: matrix is not antisymmetric");
  }
}

std::vector<std::size_t> resolve_order(const LieAlgebraData& alg,
                                       const std::vector<std::size_t>& order) {
  if (!is_two_step_split(alg))
    throw InvalidInput("b_matrix: algebra is not 2-step with respect to its designated center");
  if (order.empty()) return alg.complement_indices();
  std::vector<bool> in_complement(alg.dim(), false);
  for (auto c : alg.complement_indices()) in_complement[c] = true;
  for (auto i : order)
    if (i >= alg.dim() || !in_complement[i])
      throw InvalidInput("b_matrix: ordering index is not a complement vector");
  return order;
}

template <class Scalar, class Zero>
SkewForm<Scalar> build_b(const LieAlgebraData& alg, std::span<const Scalar> lambda,
                         const std::vector<std::size_t>& order, Zero zero) {
  const auto& center_idx = alg.center_indices();
  if (lambda.size() != center_idx.size())
    throw InvalidInput("b_matrix: functional length must equal dim of the center");
  auto rows = resolve_order(alg, order);
  std::vector<std::string> labels;
  for (auto r : rows) labels.push_back(alg.labels()[r]);
  SkewForm<Scalar> m(std::move(labels), zero);
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = a + 1; b < rows.size(); ++b) {
      auto s = alg.structure(rows[a], rows[b]);
      Scalar v = zero;
      for (std::size_t k = 0; k < center_idx.size(); ++k) {
        const Rational& c = s[center_idx[k]];
        if (sgn(c) != 0) v += c * lambda[k];
      }
      m(b, a) = -v;
      m(a, b) = std::move(v);
    }
  return m;
}

int permutation_sign(const std::vector<std::size_t>& perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) sign = -sign;
  return sign;
}

// Cofactor expansion along the smallest remaining index, memoized on the
// remaining index set.
class SymbolicExpansion {
 public:
  SymbolicExpansion(const SymbolicSkewForm& m, std::vector<std::size_t> indices)
      : m_(m), idx_(std::move(indices)) {}

  Polynomial run() {
    std::uint64_t full = idx_.size() == 64 ? ~0ull : ((1ull << idx_.size()) - 1);
    return expand(full);
  }

 private:
  Polynomial expand(std::uint64_t mask) {
    const std::size_t nv = m_(0, 0).nvars();
    if (mask == 0) return Polynomial::constant(nv, 1);
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    const int first = __builtin_ctzll(mask);
    const std::uint64_t rest = mask & ~(1ull << first);
    Polynomial total(nv);
    int position = 0;
    for (std::uint64_t r = rest; r; r &= r - 1) {
      ++position;
      const int t = __builtin_ctzll(r);
      const Polynomial& a = m_(idx_[static_cast<std::size_t>(first)], idx_[static_cast<std::size_t>(t)]);
      if (a.is_zero()) continue;
      Polynomial minor = expand(rest & ~(1ull << t));
      if (minor.is_zero()) continue;
      if (position % 2 == 1)
        total += a * minor;
      else
        total -= a * minor;
    }
    memo_.emplace(mask, total);
    return total;
  }

  const SymbolicSkewForm& m_;
  std::vector<std::size_t> idx_;
  std::unordered_map<std::uint64_t, Polynomial> memo_;
};

}  // namespace

NumericSkewForm to_skew_form(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("skew form must be square");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m.rows(); ++i) labels.push_back("x" + std::to_string(i + 1));
  NumericSkewForm s(std::move(labels), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) s(i, j) = m(i, j);
  return s;
}

RationalMatrix to_matrix(const NumericSkewForm& m) {
  RationalMatrix out(m.size(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = m(i, j);
  return out;
}

NumericSkewForm b_matrix(const LieAlgebraData& alg, std::span<const Rational> lambda,
                         const std::vector<std::size_t>& order) {
  return build_b<Rational>(alg, lambda, order, Rational(0));
}

SymbolicSkewForm b_matrix(const LieAlgebraData& alg, std::span<const Polynomial> lambda,
                          const std::vector<std::size_t>& order) {
  const std::size_t nv = lambda.empty() ? 0 : lambda[0].nvars();
  for (const auto& p : lambda)
    if (p.nvars() != nv) throw InvalidInput("b_matrix: functional coefficients in different rings");
  return build_b<Polynomial>(alg, lambda, order, Polynomial(nv));
}

Rational pfaffian(const NumericSkewForm& m) {
  require_antisymmetric(m);
  const std::size_t n = m.size();
  if (n % 2 == 1) return 0;
  std::vector<Rational> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);
  auto at = [&](std::size_t i, std::size_t j) -> Rational& { return a[i * n + j]; };

  Rational pf = 1;
  for (std::size_t k = 0; k < n; k += 2) {
    std::size_t piv = k + 1;
    while (piv < n && sgn(at(k, piv)) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(at(piv, j), at(k + 1, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(at(i, piv), at(i, k + 1));
      pf = -pf;
    }
    const Rational p = at(k, k + 1);
    pf *= p;
    // unimodular congruence v_i -> v_i - alpha_i v_{k+1} - beta_i v_k clears
    // rows k and k+1 beyond the pivot block
    std::vector<Rational> alpha(n), beta(n);
    for (std::size_t i = k + 2; i < n; ++i) {
      alpha[i] = at(k, i) / p;
      beta[i] = -at(k + 1, i) / p;
    }
    for (std::size_t i = k + 2; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        Rational v = at(i, j) - alpha[j] * at(i, k + 1) - beta[j] * at(i, k) -
                     alpha[i] * at(k + 1, j) - beta[i] * at(k, j) +
                     alpha[i] * beta[j] * at(k + 1, k) + beta[i] * alpha[j] * at(k, k + 1);
        at(i, j) = v;
        at(j, i) = -v;
      }
  }
  return pf;
}

Polynomial pfaffian(const SymbolicSkewForm& m) {
  require_antisymmetric(m);
  const std::size_t n = m.size();
  const std::size_t nv = n ? m(0, 0).nvars() : 0;
  if (n == 0) return Polynomial::constant(nv, 1);
  if (n % 2 == 1) return Polynomial(nv);

  // connected components of the nonzero pattern
  std::vector<int> comp(n, -1);
  std::vector<std::vector<std::size_t>> components;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> stack{s}, members;
    comp[s] = static_cast<int>(components.size());
    while (!stack.empty()) {
      auto i = stack.back();
      stack.pop_back();
      members.push_back(i);
      for (std::size_t j = 0; j < n; ++j)
        if (comp[j] < 0 && !m(i, j).is_zero()) {
          comp[j] = comp[s];
          stack.push_back(j);
        }
    }
    std::sort(members.begin(), members.end());
    components.push_back(std::move(members));
  }
  std::vector<std::size_t> perm;
  for (const auto& c : components) {
    if (c.size() % 2 == 1) return Polynomial(nv);
    if (c.size() > 64) throw InvalidInput("pfaffian: connected block larger than 64");
    perm.insert(perm.end(), c.begin(), c.end());
  }
  Polynomial result = Polynomial::constant(nv, permutation_sign(perm));
  for (const auto& c : components) {
    result = result * SymbolicExpansion(m, c).run();
    if (result.is_zero()) break;
  }
  return result;
}

std::vector<Polynomial> center_variables(const LieAlgebraData& alg) {
  const std::size_t k = alg.center_indices().size();
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < k; ++i) vars.push_back(Polynomial::variable(k, i));
  return vars;
}

Polynomial pf_polynomial(const LieAlgebraData& alg) {
  auto vars = center_variables(alg);
  // an empty complement carries no ring information in the matrix itself
  if (alg.complement_indices().empty()) return Polynomial::constant(vars.size(), 1);
  return pfaffian(b_matrix(alg, std::span<const Polynomial>(vars)));
}

std::optional<RationalVector> nonvanishing_point(const Polynomial& p) {
  if (p.is_zero()) return std::nullopt;
  const std::size_t k = p.nvars();
  const long top = p.total_degree() + 1;
  std::vector<long> digits(k, 1);
  while (true) {
    RationalVector point;
    for (auto d : digits) point.emplace_back(d);
    if (sgn(p.evaluate(std::span<const Rational>(point))) != 0) return point;
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (digits[pos] < top) {
        ++digits[pos];
        break;
      }
      digits[pos] = 1;
      if (pos == 0) return std::nullopt;  // unreachable for a nonzero polynomial
    }
    if (k == 0) return std::nullopt;
  }
}

SquareIntegrability is_square_integrable(const LieAlgebraData& alg) {
  SquareIntegrability out;
  out.pf = pf_polynomial(alg);
  out.square_integrable = !out.pf.is_zero();
  if (out.square_integrable) out.witness = nonvanishing_point(out.pf);
  return out;
}

}  // namespace nilharm
