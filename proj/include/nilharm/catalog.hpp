#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nilharm/algebra.hpp"
#include "nilharm/composition.hpp"

namespace nilharm {

enum class ScalarField { R, C };

/// h_{n;F} = Im F + F^n with [(z,u),(w,v)] = (Im <u,v>, 0). Only n = 1 is
/// accepted for the octonions.
LieAlgebraData heisenberg(int n, CompositionKind field);

/// Lambda^2 F^n + F^n with [(z,u),(w,v)] = (u ^ v, 0); for F = C the
/// underlying real algebra of the complexification.
LieAlgebraData free_two_step(int n, ScalarField field);

/// Im O + Im O with [(z,u),(w,v)] = (Im(u conj v), 0) = (-Im(uv), 0).
/// Carries the named ordering "pfaffian_order": e1, e2, e3, e5, e6, e4, e7
/// of the complement.
LieAlgebraData octonion_double();

/// R^n with zero bracket (everything central).
LieAlgebraData abelian(int n);

/// Direct sum of ideals. Labels are prefixed with the block number; the
/// result lists all centers first, then all complements.
LieAlgebraData direct_sum(const std::vector<LieAlgebraData>& blocks);

struct CatalogEntry {
  std::string table_id;  // "2.1" or "2.2"
  int row = 0;
  std::string group_K;
  std::string v_desc;
  std::string z_desc;
  std::string algebra_desc;
  bool constructible = false;
  std::string notes;
  std::vector<std::string> parameters;  // names of constructor parameters
  std::function<LieAlgebraData(const std::vector<int>&)> builder;
};

struct CatalogFilter {
  std::optional<std::string> table_id;
  bool constructible_only = false;
};

std::vector<CatalogEntry> list_entries(const CatalogFilter& filter = {});
CatalogEntry get_entry(const std::string& table_id, int row);

/// Builds a constructible entry; throws BracketNotSpecified otherwise.
LieAlgebraData construct(const CatalogEntry& entry, const std::vector<int>& params);

}  // namespace nilharm
