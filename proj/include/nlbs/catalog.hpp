#pragma once

#include <string>
#include <vector>

#include "nlbs/grid.hpp"
#include "nlbs/model.hpp"
#include "nlbs/transform.hpp"

namespace nlbs {
namespace catalog {

enum class Table { T2, T3, T4, EQ6, EQ7 };

/// Identifier of a catalog entry: T2 rows 1-10 solve the canonical equation,
/// T3 rows 1-8 the price equation with c = 0, T4 rows 1-8 the price equation
/// with c > 0.  EQ6/EQ7 are the traveling-wave templates (no closed-form
/// profile; descriptors only).
struct FamilyId {
  Table table = Table::T2;
  int row = 1;

  bool operator==(const FamilyId&) const = default;
};

std::string to_string(const FamilyId& id);
/// Parses identifiers of the form "T2.5", "T3.1", "EQ6".
FamilyId parse_family_id(const std::string& text);

/// Constant record for a catalog entry.  Rows ignore the constants they do
/// not use, but all are stored.
struct FamilyConstants {
  double c1 = 0.0;
  double c2 = 0.0;
  int eps = 1;    // +1 or -1
  int delta = 1;  // +1 or -1
  double k = 0.0;
};

struct FamilyInfo {
  FamilyId id;
  std::string constants_used;   // e.g. "c1,c2,delta,k"
  std::string domain;           // validity-domain description
  std::string owning_equation;  // "canonical" or "bse"
  bool closed_form = true;      // false for the EQ6/EQ7 templates
};

/// The full 28-entry manifest in table order: 10 + 8 + 8 + 2.
std::vector<FamilyInfo> list_families();

/// Throws DomainViolation (message cites the violated footnote) when the
/// constants break a row constraint, when the sign conventions of the
/// generating reduction are violated, or when the model parameters do not
/// match the table (T3 needs c = 0, T4 needs c > 0).
void validate_constants(const FamilyId& id, const ModelParams& params,
                        const FamilyConstants& consts);

/// Validity predicate of the row at (t, x), boundaries included as printed.
bool domain_ok(const FamilyId& id, const ModelParams& params,
               const FamilyConstants& consts, double t, double x);

/// Jet of the row's closed form at (t, x), evaluated in jet arithmetic.
/// Requires domain_ok; throws DomainViolation otherwise.
Jet2 evaluate(const FamilyId& id, const ModelParams& params,
              const FamilyConstants& consts, double t, double x);

/// The family as a jet evaluator (for flows, pushforwards, manufactured
/// solutions).
JetEvaluator evaluator(const FamilyId& id, const ModelParams& params,
                       const FamilyConstants& consts);

/// Residual of the owning equation over all in-domain nodes of the grid.
/// Excluded nodes are counted, not failed; throws EmptyDomain if no node
/// survives.
ResidualStats residual_scan(const FamilyId& id, const ModelParams& params,
                            const FamilyConstants& consts, const GridSpec& grid);

/// Closed forms in which the c = 0 price-equation solutions of the earlier
/// thesis treatment can be written.
enum class BobrovForm { First, Second };

struct BobrovRecord {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
  double c4 = 0.0;
  int delta = 1;
};

struct BobrovCheck {
  ResidualStats residual;
  /// Filled when form (1st) is scanned with c3 = a/(2b): max pointwise
  /// difference against T3 row 1 with the same (c1, c2).
  bool compared_t3_row1 = false;
  double max_diff_t3_row1 = 0.0;
};

/// Residual scan of a Bobrov form against the c = 0 price equation; for the
/// first form with c3 = a/(2b) also verifies pointwise coincidence with
/// T3 row 1.
BobrovCheck bobrov_form_check(BobrovForm which, const ModelParams& params,
                              const BobrovRecord& rec, const GridSpec& grid);

/// CSV manifest (family_id, constants_used, domain_description,
/// owning_equation), one row per catalog entry.
std::string manifest_csv();

}  // namespace catalog
}  // namespace nlbs
