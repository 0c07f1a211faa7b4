#include "nilharm/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "nilharm/error.hpp"

namespace nilharm {

std::string to_string(QuadratureRule rule) {
  return rule == QuadratureRule::GaussHermite ? "gauss-hermite" : "gauss-legendre";
}

QuadratureRule parse_quadrature_rule(const std::string& text) {
  if (text == "gauss-hermite") return QuadratureRule::GaussHermite;
  if (text == "gauss-legendre") return QuadratureRule::GaussLegendre;
  throw InvalidInput("unknown quadrature rule: " + text + " (gauss-hermite, gauss-legendre)");
}

namespace {

// Symmetric tridiagonal Jacobi matrix with zero diagonal.
GaussRule golub_welsch(int n, const std::function<double(int)>& offdiag, double mu0) {
  if (n < 1) throw InvalidInput("quadrature: node count must be positive");
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) j(k - 1, k) = j(k, k - 1) = offdiag(k);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(j);
  GaussRule r;
  for (int k = 0; k < n; ++k) {
    r.nodes.push_back(es.eigenvalues()(k));
    double v = es.eigenvectors()(0, k);
    r.weights.push_back(mu0 * v * v);
  }
  // Exact symmetry about 0.
  for (int k = 0; k < n / 2; ++k) {
    double x = 0.5 * (r.nodes[n - 1 - k] - r.nodes[k]);
    double w = 0.5 * (r.weights[k] + r.weights[n - 1 - k]);
    r.nodes[k] = -x;
    r.nodes[n - 1 - k] = x;
    r.weights[k] = r.weights[n - 1 - k] = w;
  }
  if (n % 2 == 1) r.nodes[n / 2] = 0.0;
  return r;
}

const GaussRule& cached(QuadratureRule rule, int n) {
  static std::mutex m;
  static std::map<std::pair<int, int>, GaussRule> cache;
  std::lock_guard lock(m);
  auto key = std::make_pair(static_cast<int>(rule), n);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, rule == QuadratureRule::GaussHermite ? gauss_hermite(n) : gauss_legendre(n)).first;
  return it->second;
}

template <class T>
T pairwise(std::span<const T> t) {
  if (t.size() <= 8) {
    T s{};
    for (const auto& x : t) s += x;
    return s;
  }
  std::size_t h = t.size() / 2;
  return pairwise(t.subspan(0, h)) + pairwise(t.subspan(h));
}

}  // namespace

GaussRule gauss_hermite(int n) {
  return golub_welsch(n, [](int k) { return std::sqrt(0.5 * k); }, std::sqrt(std::numbers::pi));
}

GaussRule gauss_legendre(int n) {
  return golub_welsch(n, [](int k) { return k / std::sqrt(4.0 * k * k - 1.0); }, 2.0);
}

std::complex<double> pairwise_sum(std::span<const std::complex<double>> terms) { return pairwise(terms); }
double pairwise_sum(std::span<const double> terms) { return pairwise(terms); }

std::complex<double> integrate_whitened(const Integrand& h, const Eigen::MatrixXd& envelope_precision,
                                        const Eigen::VectorXd& center, QuadratureRule rule, int nodes,
                                        double truncation_sigmas) {
  const auto k = center.size();
  if (envelope_precision.rows() != k || envelope_precision.cols() != k)
    throw InvalidInput("quadrature: envelope shape mismatch");
  if (k == 0) return h(center);
  Eigen::LLT<Eigen::MatrixXd> llt(envelope_precision);
  if (llt.info() != Eigen::Success) throw InvalidInput("quadrature: envelope is not positive definite");
  Eigen::MatrixXd l = llt.matrixL();
  // p = center + L^{-T} u, dp = det(L)^{-1} du.
  Eigen::MatrixXd map = l.transpose().triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(k, k));
  double jac = 1.0 / l.diagonal().prod();

  const GaussRule& base = cached(rule, nodes);
  // Per-axis substitution: Hermite u = sqrt(2) x with e^{x^2} restoring the
  // weight; Legendre u = R x on the truncated box.
  std::vector<double> u(nodes), w(nodes);
  for (int i = 0; i < nodes; ++i) {
    double x = base.nodes[i];
    if (rule == QuadratureRule::GaussHermite) {
      u[i] = std::numbers::sqrt2 * x;
      w[i] = std::log(base.weights[i] * std::numbers::sqrt2) + x * x;
    } else {
      u[i] = truncation_sigmas * x;
      w[i] = std::log(base.weights[i] * truncation_sigmas);
    }
  }
  std::size_t total = 1;
  for (Eigen::Index a = 0; a < k; ++a) total *= static_cast<std::size_t>(nodes);
  std::vector<std::complex<double>> terms(total);
  std::vector<int> idx(static_cast<std::size_t>(k), 0);
  Eigen::VectorXd uu(k);
  for (std::size_t t = 0; t < total; ++t) {
    double logw = 0.0;
    for (Eigen::Index a = 0; a < k; ++a) {
      uu(a) = u[idx[a]];
      logw += w[idx[a]];
    }
    Eigen::VectorXd p = center + map * uu;
    terms[t] = std::exp(logw) * h(p);
    for (Eigen::Index a = k - 1; a >= 0; --a) {
      if (++idx[a] < nodes) break;
      idx[a] = 0;
    }
  }
  return jac * pairwise_sum(terms);
}

QuadratureResult integrate_adaptive(const Integrand& h, const Eigen::MatrixXd& envelope_precision,
                                    const Eigen::VectorXd& center, const QuadratureSettings& settings,
                                    std::size_t budget) {
  const auto k = static_cast<std::size_t>(center.size());
  auto cost = [k](int n) {
    double c = std::pow(static_cast<double>(n), static_cast<double>(k));
    return c;
  };
  QuadratureResult res;
  int n = std::max(1, settings.initial_nodes);
  if (k == 0) {
    res.value = h(center);
    res.evaluations = 1;
    res.converged = true;
    return res;
  }
  if (cost(n) > static_cast<double>(budget))
    throw InvalidInput("quadrature: node budget below the initial level");
  res.value = integrate_whitened(h, envelope_precision, center, settings.rule, n, settings.truncation_sigmas);
  res.evaluations = static_cast<std::size_t>(cost(n));
  res.nodes_per_axis = n;
  res.last_change = std::numeric_limits<double>::infinity();
  while (true) {
    int next = 2 * n;
    if (next > settings.max_nodes_per_axis) break;
    if (static_cast<double>(res.evaluations) + cost(next) > static_cast<double>(budget)) break;
    auto v = integrate_whitened(h, envelope_precision, center, settings.rule, next, settings.truncation_sigmas);
    res.evaluations += static_cast<std::size_t>(cost(next));
    double scale = std::max(std::abs(v), 1e-300);
    res.last_change = std::abs(v - res.value) / scale;
    res.value = v;
    n = next;
    res.nodes_per_axis = n;
    if (res.last_change < settings.rel_tol) {
      res.converged = true;
      break;
    }
  }
  return res;
}

}  // namespace nilharm
