#include "nilharm/inversion.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "nilharm/error.hpp"
#include "nilharm/pfaffian.hpp"

namespace nilharm {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_two_step(const LieAlgebraData& alg) {
  int cls = nilpotency_class(alg);
  if (cls < 1 || cls > 2) throw InvalidInput("group law needs a 2-step nilpotent algebra");
}

std::vector<Eigen::Index> as_index(const std::vector<std::size_t>& v) {
  return {v.begin(), v.end()};
}

double relative(double abs_err, std::complex<double> exact) {
  double m = std::abs(exact);
  return m > 0.0 ? abs_err / m : abs_err;
}

struct LayerResult {
  QuadratureResult q;
  std::size_t singular = 0;
};

// c \int Theta(r_x f) |Pf| dlambda by quadrature over z*.
LayerResult flat_layer(const PlancherelData& data, const GaussianTestFunction& f, const GroupPoint& x,
                       const QuadratureSettings& s) {
  GaussianTestFunction g = right_translate(data.structure(), f, x);
  OrbitalCharacter theta(data, g);
  const double c = data.constant();
  const double dl = std::pow(kTwoPi, -static_cast<double>(data.center().size()));
  LayerResult out;
  Integrand h = [&](const Eigen::VectorXd& lam) -> std::complex<double> {
    try {
      return c * theta(lam) * std::abs(data.pf(lam)) * dl;
    } catch (const SingularFunctional&) {
      ++out.singular;  // removable: c Theta |Pf| extends continuously
      return theta.orbit_integral(lam) * dl;
    }
  };
  const auto& slice = theta.slice();
  out.q = integrate_adaptive(h, slice.precision(), slice.modulus_peak(), s, s.node_budget);
  return out;
}

}  // namespace

FloatAlgebra::FloatAlgebra(const LieAlgebraData& alg) : dim_(static_cast<Eigen::Index>(alg.dim())) {
  require_two_step(alg);
  for (const auto& [key, coeffs] : alg.brackets())
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      if (sgn(coeffs[k]) != 0)
        terms_.emplace_back(static_cast<Eigen::Index>(key.first), static_cast<Eigen::Index>(key.second),
                            static_cast<Eigen::Index>(k), coeffs[k].get_d());
}

Eigen::VectorXd FloatAlgebra::bracket(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw InvalidInput("dimension mismatch in bracket");
  Eigen::VectorXd out = Eigen::VectorXd::Zero(dim_);
  for (const auto& [i, j, k, c] : terms_) out(k) += c * (x(i) * y(j) - x(j) * y(i));
  return out;
}

Eigen::MatrixXd FloatAlgebra::ad(const Eigen::VectorXd& x) const {
  if (x.size() != dim_) throw InvalidInput("dimension mismatch in ad");
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim_, dim_);
  for (const auto& [i, j, k, c] : terms_) {
    m(k, j) += c * x(i);
    m(k, i) -= c * x(j);
  }
  return m;
}

GroupPoint group_multiply(const FloatAlgebra& alg, const GroupPoint& x, const GroupPoint& y) {
  return x + y + 0.5 * alg.bracket(x, y);
}

AlgebraVector group_multiply(const LieAlgebraData& alg, const AlgebraVector& x, const AlgebraVector& y) {
  require_two_step(alg);
  return x + y + Rational(1, 2) * bracket(alg, x, y);
}

GaussianTestFunction right_translate(const FloatAlgebra& alg, const GaussianTestFunction& f, const GroupPoint& x) {
  if (f.dim() != alg.dim()) throw InvalidInput("right_translate: test function dimension mismatch");
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(alg.dim(), alg.dim()) - 0.5 * alg.ad(x);
  return pullback_affine(f, a, x);
}

QuadratureResult fourier_quadrature(const GaussianTestFunction& g, const Eigen::VectorXd& xi,
                                    const QuadratureSettings& settings) {
  if (xi.size() != g.dim()) throw InvalidInput("fourier_quadrature: frequency size mismatch");
  const std::complex<double> i(0.0, 1.0);
  Integrand h = [&](const Eigen::VectorXd& y) { return std::exp(g.log_value(y) - i * xi.dot(y)); };
  return integrate_adaptive(h, g.precision(), g.modulus_peak(), settings, settings.node_budget);
}

PlancherelData::PlancherelData(const LieAlgebraData& alg)
    : alg_(alg),
      structure_(alg),
      pf_(nilharm::pf_polynomial(alg)),
      center_(as_index(alg.center_indices())),
      complement_(as_index(alg.complement_indices())) {
  if (pf_.is_zero()) throw NotApplicable("algebra is not square integrable: Pf vanishes identically");
}

double PlancherelData::constant() const {
  return std::tgamma(d() + 1.0) * std::ldexp(1.0, d());
}

double PlancherelData::pf(const Eigen::VectorXd& lambda) const {
  if (lambda.size() != static_cast<Eigen::Index>(center_.size()))
    throw InvalidInput("functional size does not match the center");
  return pf_.evaluate(std::span<const double>(lambda.data(), static_cast<std::size_t>(lambda.size())));
}

OrbitalCharacter::OrbitalCharacter(const PlancherelData& data, const GaussianTestFunction& g)
    : data_(&data),
      slice_(integrate_out(fourier(g), data.center())),
      nu_scale_(std::pow(kTwoPi, -static_cast<double>(data.complement().size()))) {
  if (g.dim() != static_cast<Eigen::Index>(data.algebra().dim()))
    throw InvalidInput("orbital_character: test function dimension mismatch");
}

std::complex<double> OrbitalCharacter::orbit_integral(const Eigen::VectorXd& lambda) const {
  return nu_scale_ * slice_(lambda);
}

std::complex<double> OrbitalCharacter::operator()(const Eigen::VectorXd& lambda) const {
  double pf = data_->pf(lambda);
  if (pf == 0.0) throw SingularFunctional("singular functional: Pf(lambda) = 0");
  return orbit_integral(lambda) / (data_->constant() * std::abs(pf));
}

std::complex<double> orbital_character(const PlancherelData& data, const Eigen::VectorXd& lambda,
                                       const GaussianTestFunction& g) {
  return OrbitalCharacter(data, g)(lambda);
}

QuadratureResult orbital_character_quadrature(const PlancherelData& data, const Eigen::VectorXd& lambda,
                                              const GaussianTestFunction& g, const QuadratureSettings& settings) {
  double pf = data.pf(lambda);
  if (pf == 0.0) throw SingularFunctional("singular functional: Pf(lambda) = 0");
  GaussianTestFunction ghat = fourier(g);
  const auto& zc = data.center();
  const auto& vc = data.complement();
  const auto kv = static_cast<Eigen::Index>(vc.size());
  auto full = [&](const Eigen::VectorXd& xi) {
    Eigen::VectorXd p(ghat.dim());
    for (std::size_t a = 0; a < zc.size(); ++a) p(zc[a]) = lambda(static_cast<Eigen::Index>(a));
    for (Eigen::Index b = 0; b < kv; ++b) p(vc[b]) = xi(b);
    return p;
  };
  Eigen::MatrixXd qvv(kv, kv);
  Eigen::VectorXd rhs(kv);
  Eigen::VectorXd zero_v = Eigen::VectorXd::Zero(kv);
  Eigen::VectorXd base = full(zero_v);
  Eigen::VectorXd qb = ghat.precision() * base;
  for (Eigen::Index a = 0; a < kv; ++a) {
    rhs(a) = ghat.linear()(vc[a]).real() - qb(vc[a]);
    for (Eigen::Index b = 0; b < kv; ++b) qvv(a, b) = ghat.precision()(vc[a], vc[b]);
  }
  Eigen::VectorXd peak = kv > 0 ? Eigen::VectorXd(qvv.llt().solve(rhs)) : zero_v;
  Integrand h = [&](const Eigen::VectorXd& xi) { return ghat(full(xi)); };
  QuadratureResult r = integrate_adaptive(h, qvv, peak, settings, settings.node_budget);
  r.value *= std::pow(kTwoPi, -static_cast<double>(kv)) / (data.constant() * std::abs(pf));
  return r;
}

nlohmann::json to_json(const QuadratureSettings& s) {
  return {{"rule", to_string(s.rule)},
          {"initial_nodes", s.initial_nodes},
          {"max_nodes_per_axis", s.max_nodes_per_axis},
          {"node_budget", s.node_budget},
          {"rel_tol", s.rel_tol},
          {"truncation_sigmas", s.truncation_sigmas}};
}

nlohmann::json to_json(const InversionRecord& r) {
  nlohmann::json x = nlohmann::json::array();
  for (Eigen::Index i = 0; i < r.x.size(); ++i) x.push_back(r.x(i));
  return {{"x", x},
          {"f_x", {{"re", r.exact.real()}, {"im", r.exact.imag()}}},
          {"reconstructed", {{"re", r.reconstructed.real()}, {"im", r.reconstructed.imag()}}},
          {"abs_error", r.abs_error},
          {"rel_error", r.rel_error},
          {"evaluations", r.evaluations},
          {"nodes_per_axis", r.nodes_per_axis},
          {"inner_nodes_per_axis", r.inner_nodes_per_axis},
          {"converged", r.converged},
          {"singular_nodes", r.singular_nodes}};
}

nlohmann::json to_json(const InversionReport& r) {
  nlohmann::json recs = nlohmann::json::array();
  for (const auto& rec : r.records) recs.push_back(to_json(rec));
  nlohmann::json j = {{"formula", r.formula},
                      {"algebra", r.algebra},
                      {"prefactor", r.prefactor},
                      {"quadrature", to_json(r.settings)},
                      {"records", recs},
                      {"wall_seconds", r.wall_seconds}};
  if (r.formula == "stepwise") j["inner_quadrature"] = to_json(r.inner_settings);
  return j;
}

InversionRecord invert_flat(const PlancherelData& data, const GaussianTestFunction& f, const GroupPoint& x,
                            const QuadratureSettings& settings) {
  if (x.size() != f.dim()) throw InvalidInput("invert_flat: point dimension mismatch");
  LayerResult layer = flat_layer(data, f, x, settings);
  InversionRecord rec;
  rec.x = x;
  rec.exact = f(x);
  rec.reconstructed = layer.q.value;
  rec.abs_error = std::abs(rec.reconstructed - rec.exact);
  rec.rel_error = relative(rec.abs_error, rec.exact);
  rec.evaluations = layer.q.evaluations;
  rec.nodes_per_axis = layer.q.nodes_per_axis;
  rec.converged = layer.q.converged;
  rec.singular_nodes = layer.singular;
  return rec;
}

std::complex<double> flat_inversion_closed_form(const PlancherelData& data, const GaussianTestFunction& f,
                                                const GroupPoint& x) {
  GaussianTestFunction g = right_translate(data.structure(), f, x);
  OrbitalCharacter theta(data, g);
  // c Theta |Pf| collapses to the orbit integral; what remains is Gaussian in lambda.
  double scale = std::pow(kTwoPi, -static_cast<double>(data.center().size() + data.complement().size()));
  return scale * theta.slice().integral();
}

std::complex<double> euclidean_inversion_at_zero(const GaussianTestFunction& g) {
  return std::pow(kTwoPi, -static_cast<double>(g.dim())) * fourier(g).integral();
}

namespace {

StepwiseDecomposition verified(StepwiseDecomposition dec) {
  dec.verification = verify(dec);
  if (!dec.verification.all()) throw InvalidInput("stepwise decomposition fails verification");
  return dec;
}

}  // namespace

StepwiseContext::StepwiseContext(StepwiseDecomposition dec)
    : dec_(verified(std::move(dec))), inner_(l1_algebra(dec_)), structure_(dec_.algebra) {}

double StepwiseContext::outer_constant() const {
  return std::pow(kTwoPi, -0.5 * static_cast<double>(dec_.l2_indices.size()));
}

std::pair<GroupPoint, GroupPoint> factor_point(const StepwiseContext& ctx, const GroupPoint& x) {
  const auto& dec = ctx.decomposition();
  if (x.size() != static_cast<Eigen::Index>(dec.algebra.dim())) throw InvalidInput("factor_point: dimension mismatch");
  GroupPoint x2 = GroupPoint::Zero(x.size());
  GroupPoint rest = x;
  for (auto i : dec.l2_indices) {
    x2(static_cast<Eigen::Index>(i)) = x(static_cast<Eigen::Index>(i));
    rest(static_cast<Eigen::Index>(i)) = 0.0;
  }
  // [x1, x2] only sees the non-central part of x1, which equals that of `rest`.
  GroupPoint x1 = rest - 0.5 * ctx.structure().bracket(rest, x2);
  return {x1, x2};
}

std::pair<AlgebraVector, AlgebraVector> factor_point(const StepwiseDecomposition& dec, const AlgebraVector& x) {
  if (x.size() != dec.algebra.dim()) throw InvalidInput("factor_point: dimension mismatch");
  AlgebraVector x2 = AlgebraVector::zero(x.size());
  AlgebraVector rest = x;
  for (auto i : dec.l2_indices) {
    x2.coefficients[i] = x.coefficients[i];
    rest.coefficients[i] = 0;
  }
  return {rest - Rational(1, 2) * bracket(dec.algebra, rest, x2), x2};
}

Eigen::VectorXd StepwiseContext::split_coordinates(const GroupPoint& x) const {
  auto [x1, x2] = factor_point(*this, x);
  Eigen::VectorXd s(x.size());
  Eigen::Index p = 0;
  for (auto i : dec_.l1_indices) s(p++) = x1(static_cast<Eigen::Index>(i));
  for (auto i : dec_.l2_indices) s(p++) = x2(static_cast<Eigen::Index>(i));
  return s;
}

GroupPoint StepwiseContext::from_split_coordinates(const Eigen::VectorXd& s) const {
  const auto n = static_cast<Eigen::Index>(dec_.algebra.dim());
  if (s.size() != n) throw InvalidInput("split coordinates: dimension mismatch");
  GroupPoint y1 = GroupPoint::Zero(n), t = GroupPoint::Zero(n);
  Eigen::Index p = 0;
  for (auto i : dec_.l1_indices) y1(static_cast<Eigen::Index>(i)) = s(p++);
  for (auto i : dec_.l2_indices) t(static_cast<Eigen::Index>(i)) = s(p++);
  return group_multiply(structure_, y1, t);
}

InversionRecord invert_stepwise(const StepwiseContext& ctx, const GaussianTestFunction& f_split, const GroupPoint& x,
                                const QuadratureSettings& outer, const QuadratureSettings& inner) {
  const auto& dec = ctx.decomposition();
  const auto n = static_cast<Eigen::Index>(dec.algebra.dim());
  if (f_split.dim() != n || x.size() != n) throw InvalidInput("invert_stepwise: dimension mismatch");
  const auto k1 = static_cast<Eigen::Index>(dec.l1_indices.size());
  const auto k2 = static_cast<Eigen::Index>(dec.l2_indices.size());

  Eigen::VectorXd s = ctx.split_coordinates(x);
  Eigen::VectorXd y1 = s.head(k1);
  Eigen::VectorXd x2 = s.tail(k2);

  std::vector<Eigen::Index> keep(static_cast<std::size_t>(k1));
  for (Eigen::Index i = 0; i < k1; ++i) keep[static_cast<std::size_t>(i)] = i;
  const double unitary = std::pow(kTwoPi, -0.5 * static_cast<double>(k2));
  const std::complex<double> i(0.0, 1.0);

  std::size_t evaluations = 0, singular = 0;
  int inner_nodes = 0;
  bool inner_converged = true;
  Integrand outer_h = [&](const Eigen::VectorXd& xi) -> std::complex<double> {
    GaussianTestFunction h = partial_fourier(f_split, keep, xi).scaled(unitary);
    LayerResult layer = flat_layer(ctx.inner(), h, y1, inner);
    evaluations += layer.q.evaluations;
    singular += layer.singular;
    inner_nodes = std::max(inner_nodes, layer.q.nodes_per_axis);
    inner_converged = inner_converged && layer.q.converged;
    return ctx.outer_constant() * layer.q.value * std::exp(i * xi.dot(x2));
  };

  // The xi-envelope of h_xi is exp(-1/2 xi^T Q_TT^{-1} xi + xi^T Q_TT^{-1} Im l_T).
  Eigen::MatrixXd qtt = f_split.precision().bottomRightCorner(k2, k2);
  Eigen::MatrixXd envelope = qtt.llt().solve(Eigen::MatrixXd::Identity(k2, k2));
  envelope = 0.5 * (envelope + envelope.transpose()).eval();
  Eigen::VectorXd peak = f_split.linear().tail(k2).imag();
  QuadratureResult q = integrate_adaptive(outer_h, envelope, peak, outer, outer.node_budget);

  InversionRecord rec;
  rec.x = x;
  rec.exact = f_split(s);
  rec.reconstructed = q.value;
  rec.abs_error = std::abs(rec.reconstructed - rec.exact);
  rec.rel_error = relative(rec.abs_error, rec.exact);
  rec.evaluations = evaluations;
  rec.nodes_per_axis = q.nodes_per_axis;
  rec.inner_nodes_per_axis = inner_nodes;
  rec.converged = q.converged && inner_converged;
  rec.singular_nodes = singular;
  return rec;
}

OrbitSpaceReport orbit_space_quadrature_check(const LieAlgebraData& alg, const std::function<double(double)>& h,
                                              double radius, int nodes) {
  if (alg.center_indices().size() != 3) throw InvalidInput("orbit-space check needs dim z = 3");
  if (!(radius > 0.0) || nodes < 2) throw InvalidInput("orbit-space check: bad radius or node count");
  Polynomial pf = pf_polynomial(alg);
  auto integrand = [&](const Eigen::Vector3d& lam) {
    double p = pf.evaluate(std::span<const double>(lam.data(), 3));
    return h(lam.norm()) * std::abs(p);
  };

  // Direction sampling on two shells.
  std::mt19937_64 rng(0);
  std::normal_distribution<double> normal;
  for (double r : {0.25 * radius, 0.5 * radius}) {
    double ref = integrand(Eigen::Vector3d(r, 0.0, 0.0));
    double worst = 0.0, scale = std::abs(ref);
    std::vector<double> values;
    for (int t = 0; t < 16; ++t) {
      Eigen::Vector3d u(normal(rng), normal(rng), normal(rng));
      double v = integrand(r * u.normalized());
      worst = std::max(worst, std::abs(v - ref));
      scale = std::max(scale, std::abs(v));
    }
    if (worst > 1e-9 * scale) throw InvalidInput("non-radial integrand: h(|lambda|)|Pf(lambda)| depends on direction");
  }

  GaussRule gl = gauss_legendre(nodes);
  OrbitSpaceReport rep;
  rep.radius = radius;
  rep.nodes = nodes;
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(nodes) * nodes * nodes);
  for (int a = 0; a < nodes; ++a)
    for (int b = 0; b < nodes; ++b)
      for (int c = 0; c < nodes; ++c) {
        Eigen::Vector3d lam(radius * gl.nodes[a], radius * gl.nodes[b], radius * gl.nodes[c]);
        terms.push_back(gl.weights[a] * gl.weights[b] * gl.weights[c] * integrand(lam));
      }
  rep.cartesian = radius * radius * radius * pairwise_sum(terms);

  auto radial = [&](double r_max) {
    std::vector<double> t;
    for (int a = 0; a < nodes; ++a) {
      double r = 0.5 * r_max * (gl.nodes[a] + 1.0);
      t.push_back(gl.weights[a] * 4.0 * std::numbers::pi * r * r * integrand(Eigen::Vector3d(r, 0.0, 0.0)));
    }
    return 0.5 * r_max * pairwise_sum(t);
  };
  rep.radial = radial(radius);
  rep.truncation_estimate = std::abs(rep.radial - radial(0.5 * radius));
  double scale = std::max(std::abs(rep.radial), std::abs(rep.cartesian));
  rep.rel_difference = scale > 0.0 ? std::abs(rep.cartesian - rep.radial) / scale : 0.0;
  return rep;
}

}  // namespace nilharm
