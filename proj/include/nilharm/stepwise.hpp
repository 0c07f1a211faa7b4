#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilharm/algebra.hpp"
#include "nilharm/polynomial.hpp"

namespace nilharm {

enum class ExceptionalCase { Case1, Case6, Case3 };

std::string to_string(ExceptionalCase c);
ExceptionalCase parse_exceptional_case(const std::string& text);

struct StepwiseFlags {
  bool l1_is_ideal = false;
  bool direct_sum = false;
  bool l2_abelian_subalgebra = false;
  bool l1_square_integrable = false;

  bool all() const {
    return l1_is_ideal && direct_sum && l2_abelian_subalgebra && l1_square_integrable;
  }
};

/// n = l1 + l2 with l1 = z + v1 an ideal and l2 an abelian complement.
struct StepwiseDecomposition {
  LieAlgebraData algebra;
  std::vector<std::size_t> l1_indices;
  std::vector<std::size_t> l2_indices;
  StepwiseFlags verification;  // filled by verify()
};

/// The algebra of the exceptional case together with its coordinate split:
/// case1/case6 drop u_n (both real coordinates over C) for odd n = 2m+1,
/// case3 drops (0, e7). `n` is ignored for case3.
StepwiseDecomposition decompose(ExceptionalCase c, int n = 3);

/// Build a decomposition of an arbitrary algebra from a coordinate split.
StepwiseDecomposition make_decomposition(const LieAlgebraData& alg,
                                         std::vector<std::size_t> l2_indices);

/// l1 as a Lie algebra of its own, with its computed center as the designated
/// center. Throws InvalidInput when that center is not coordinate aligned.
LieAlgebraData l1_algebra(const StepwiseDecomposition& dec);

/// Pf of b_lambda on l1 / center(l1), in the coordinates of center(l1).
Polynomial l1_pf_polynomial(const StepwiseDecomposition& dec);

/// Exact checks of the four structural flags.
StepwiseFlags verify(const StepwiseDecomposition& dec);

struct SplitSearch {
  std::optional<StepwiseDecomposition> split;
  std::size_t candidates_tried = 0;
};

/// Search over coordinate-aligned complements: first every single complement
/// vector as l2, then every pair. Throws NotApplicable when the algebra is
/// already square integrable.
SplitSearch find_codim_split(const LieAlgebraData& alg);

}  // namespace nilharm
