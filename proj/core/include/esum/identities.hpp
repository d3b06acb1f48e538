#pragma once

#include "esum/symbolic.hpp"
#include "esum/types.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace esum {

// Parametrized identity generators. Each catalog row names one identity
// family over a declared integer parameter domain; instantiate() builds the
// two sides, as Expressions where the sides live in the atom algebra and as
// numeric closures where a side is a nested series outside it (W/V weighted
// sums, kernel sums, truncated-polylog samples, Stirling-ratio series).

enum class IdentityTag {
  eq_1_4,
  eq_1_5,
  duality,
  thm1,
  thm2,
  thm3,
  cor3,
  cor4,
  lemma31,
  lemma32,
  lemma51,
  eq_3_5,
  eq_3_6,
  eq_3_7,
  eq_3_8,
  eq_3_10,
  eq_3_13,
  eq_3_14,
  eq_3_15,
  eq_4_12,
  eq_4_13,
  zeta_ones,
  thm56,
  eq_5_7,
  symmetry,
  s13_2_example,
};

enum class IdentityStatus { established, suspect };

struct CatalogRow {
  IdentityTag tag;
  std::string name;       // lowercase CLI name
  IdentityStatus status = IdentityStatus::established;
  std::string domain;     // parameter domain, human readable
  std::string reference;  // what the identity states
};

const std::vector<CatalogRow>& catalog_list();
const CatalogRow& catalog_row(IdentityTag tag);
// Throws std::invalid_argument for names not in the catalog.
IdentityTag tag_from_name(const std::string& name);

struct IdentityInstance {
  IdentityTag tag;
  std::string name;
  std::vector<int> params;
  IdentityStatus status = IdentityStatus::established;
  // Present when the side is expressible in the atom algebra.
  std::optional<Expression> lhs;
  std::optional<Expression> rhs;
  // Always present.
  std::function<BigReal(const EvalConfig&)> lhs_fn;
  std::function<BigReal(const EvalConfig&)> rhs_fn;
};

// Builds one instance. Out-of-domain parameters (and the odd-weight
// precondition of thm2) throw std::invalid_argument unless force is set;
// forced instances may still fail with divergence_error at construction.
IdentityInstance instantiate(IdentityTag tag, const std::vector<int>& params,
                             bool force = false);

// Default parameter grid per tag, used by the suite runner.
std::vector<std::vector<int>> default_grid(IdentityTag tag);

struct GoldenRow {
  std::string name;
  Expression lhs;
  Expression rhs;
  std::string reference;
};

// Fully closed-form evaluations, transcribed as printed. Residual linear
// sums on the right-hand sides (S(2; 6), S(2; 8), alternating linear sums,
// depth-2 stars) stay as atoms.
const std::vector<GoldenRow>& golden_table();

// Duality block forms: params are flattened pairs (m_1, n_1, ..., m_p, n_p),
// all >= 0, encoding zeta({m_1+2, {1}_{n_1}, ..., m_p+2, {1}_{n_p}}); the
// dual reverses the blocks and swaps the roles of m and n.
Composition duality_composition(const std::vector<int>& mn);
Composition duality_dual(const std::vector<int>& mn);

}  // namespace esum
