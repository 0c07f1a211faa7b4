#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "nilharm/algebra.hpp"
#include "nilharm/gaussian.hpp"
#include "nilharm/polynomial.hpp"
#include "nilharm/quadrature.hpp"
#include "nilharm/stepwise.hpp"

namespace nilharm {

/// Exponential coordinates of a group element; the group is R^dim with
/// X.Y = X + Y + 1/2 [X, Y].
using GroupPoint = Eigen::VectorXd;

/// Double copy of the structure constants of a 2-step (or abelian) algebra.
class FloatAlgebra {
 public:
  /// Throws InvalidInput unless the nilpotency class is 1 or 2.
  explicit FloatAlgebra(const LieAlgebraData& alg);

  Eigen::Index dim() const { return dim_; }
  Eigen::VectorXd bracket(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;
  /// Matrix of Y -> [x, Y].
  Eigen::MatrixXd ad(const Eigen::VectorXd& x) const;

 private:
  Eigen::Index dim_ = 0;
  std::vector<std::tuple<Eigen::Index, Eigen::Index, Eigen::Index, double>> terms_;  // [b_i, b_j] has c b_k, i < j
};

GroupPoint group_multiply(const FloatAlgebra& alg, const GroupPoint& x, const GroupPoint& y);
/// Exact product; throws InvalidInput on algebras of class > 2.
AlgebraVector group_multiply(const LieAlgebraData& alg, const AlgebraVector& x, const AlgebraVector& y);

/// (r_x f)_1(Y) = f_1(Y x) = f_1((I - 1/2 ad x) Y + x).
GaussianTestFunction right_translate(const FloatAlgebra& alg, const GaussianTestFunction& f, const GroupPoint& x);

/// Adaptive quadrature of \int g(Y) exp(-i <xi, Y>) dY.
QuadratureResult fourier_quadrature(const GaussianTestFunction& g, const Eigen::VectorXd& xi,
                                    const QuadratureSettings& settings);

/// Data of a square integrable 2-step algebra needed for inversion. Dual
/// center coordinates follow the designated center order.
class PlancherelData {
 public:
  /// Throws NotApplicable when Pf vanishes identically.
  explicit PlancherelData(const LieAlgebraData& alg);

  const LieAlgebraData& algebra() const { return alg_; }
  const FloatAlgebra& structure() const { return structure_; }
  const Polynomial& pf_polynomial() const { return pf_; }
  const std::vector<Eigen::Index>& center() const { return center_; }
  const std::vector<Eigen::Index>& complement() const { return complement_; }
  /// 2d = dim v.
  int d() const { return static_cast<int>(complement_.size() / 2); }
  /// c = d! 2^d.
  double constant() const;
  double pf(const Eigen::VectorXd& lambda) const;

 private:
  LieAlgebraData alg_;
  FloatAlgebra structure_;
  Polynomial pf_;
  std::vector<Eigen::Index> center_;
  std::vector<Eigen::Index> complement_;
};

/// Theta(lambda) = c^{-1} |Pf(lambda)|^{-1} \int_{v*} ĝ(lambda + xi) dnu(xi) with
/// dnu = (2 pi)^{-dim v} Lebesgue. The v* integral is closed form.
class OrbitalCharacter {
 public:
  OrbitalCharacter(const PlancherelData& data, const GaussianTestFunction& g);

  /// Throws SingularFunctional where Pf(lambda) = 0.
  std::complex<double> operator()(const Eigen::VectorXd& lambda) const;
  /// \int_{v*} ĝ(lambda + xi) dnu(xi), finite everywhere.
  std::complex<double> orbit_integral(const Eigen::VectorXd& lambda) const;
  /// lambda -> \int_{v*} ĝ(lambda + xi) d xi (plain Lebesgue).
  const GaussianTestFunction& slice() const { return slice_; }

 private:
  const PlancherelData* data_;
  GaussianTestFunction slice_;
  double nu_scale_;
};

std::complex<double> orbital_character(const PlancherelData& data, const Eigen::VectorXd& lambda,
                                       const GaussianTestFunction& g);
/// Same value with the v* integral done by quadrature on the closed-form ĝ.
QuadratureResult orbital_character_quadrature(const PlancherelData& data, const Eigen::VectorXd& lambda,
                                              const GaussianTestFunction& g, const QuadratureSettings& settings);

struct InversionRecord {
  Eigen::VectorXd x;
  std::complex<double> exact;
  std::complex<double> reconstructed;
  double abs_error = 0.0;
  double rel_error = 0.0;
  std::size_t evaluations = 0;
  int nodes_per_axis = 0;        // outermost layer
  int inner_nodes_per_axis = 0;  // stepwise only: finest inner level used
  bool converged = false;
  std::size_t singular_nodes = 0;  // nodes where Pf = 0 and the continuous extension was used
};

struct InversionReport {
  std::string formula;
  std::string algebra;
  std::vector<InversionRecord> records;
  QuadratureSettings settings;
  QuadratureSettings inner_settings;  // stepwise only
  double prefactor = 1.0;
  double wall_seconds = 0.0;
};

nlohmann::json to_json(const InversionRecord& r);
nlohmann::json to_json(const InversionReport& r);
nlohmann::json to_json(const QuadratureSettings& s);

/// f(x) = c \int_{z*} Theta(r_x f)(lambda) |Pf(lambda)| dlambda, dlambda = (2 pi)^{-dim z} Lebesgue.
InversionRecord invert_flat(const PlancherelData& data, const GaussianTestFunction& f, const GroupPoint& x,
                            const QuadratureSettings& settings);

/// The same composition with the z* integral also in closed form.
std::complex<double> flat_inversion_closed_form(const PlancherelData& data, const GaussianTestFunction& f,
                                                const GroupPoint& x);
/// (2 pi)^{-n} \int ĝ, i.e. g(0) through the Euclidean inversion theorem.
std::complex<double> euclidean_inversion_at_zero(const GaussianTestFunction& g);

/// A verified stepwise decomposition with its inner square integrable layer.
class StepwiseContext {
 public:
  /// Throws InvalidInput unless every structural flag holds.
  explicit StepwiseContext(StepwiseDecomposition dec);

  const StepwiseDecomposition& decomposition() const { return dec_; }
  const PlancherelData& inner() const { return inner_; }
  const FloatAlgebra& structure() const { return structure_; }
  /// (2 pi)^{-dim l2 / 2}.
  double outer_constant() const;
  /// Full constant d!2^d (2 pi)^{-dim l2 / 2}, with d read off l1.
  double prefactor() const { return inner_.constant() * outer_constant(); }

  /// Split-chart coordinates (Y1 in l1 order, T in l2 order) of exp(Y1) exp(T).
  Eigen::VectorXd split_coordinates(const GroupPoint& x) const;
  GroupPoint from_split_coordinates(const Eigen::VectorXd& s) const;

 private:
  StepwiseDecomposition dec_;
  PlancherelData inner_;
  FloatAlgebra structure_;
};

/// x = x1 . x2 with x2 the l2 component of X and x1 in L1; both in full coordinates.
std::pair<GroupPoint, GroupPoint> factor_point(const StepwiseContext& ctx, const GroupPoint& x);
std::pair<AlgebraVector, AlgebraVector> factor_point(const StepwiseDecomposition& dec, const AlgebraVector& x);

/// `f_split` is a Gaussian in split-chart coordinates, f(exp Y1 exp T) =
/// f_split(Y1, T). The outer integral runs over l2* against exp(i <xi, x2>),
/// the inner one is invert_flat on L1 applied to
/// h_xi(Y1) = (2 pi)^{-dim l2 / 2} \int f_split(Y1, T) exp(-i <xi, T>) dT.
InversionRecord invert_stepwise(const StepwiseContext& ctx, const GaussianTestFunction& f_split, const GroupPoint& x,
                                const QuadratureSettings& outer, const QuadratureSettings& inner);

struct OrbitSpaceReport {
  double cartesian = 0.0;
  double radial = 0.0;
  double rel_difference = 0.0;
  double radius = 0.0;
  double truncation_estimate = 0.0;  // |I(R) - I(R/2)| on the radial path
  int nodes = 0;
};

/// \int_{R^3} h(|lambda|) |Pf(lambda)| dlambda two ways: a Cartesian tensor rule on
/// [-R, R]^3 and a radial rule with weight 4 pi r^2. Requires dim z = 3 and a
/// rotation invariant integrand; throws InvalidInput when sampling finds
/// h(|lambda|) |Pf(lambda)| depending on direction.
OrbitSpaceReport orbit_space_quadrature_check(const LieAlgebraData& alg, const std::function<double(double)>& h,
                                              double radius, int nodes);

}  // namespace nilharm
