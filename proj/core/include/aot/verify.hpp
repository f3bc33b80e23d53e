#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "aot/enumerate.hpp"
#include "aot/particular.hpp"
#include "aot/universe.hpp"

namespace aot {

enum class Verdict { pass, fail };

/// Outcome of one semantic check. A failing report always carries a witness;
/// passing reports may carry informational detail.
struct CheckReport {
  std::string check_name;
  Verdict verdict = Verdict::pass;
  std::optional<nlohmann::ordered_json> witness;
  Bounds bounds_used;

  bool passed() const noexcept { return verdict == Verdict::pass; }
  nlohmann::ordered_json to_json() const;
};

/// One report per axiom, in order: particular_exists, sorts_disjoint,
/// val_partial_function, finite_state_spaces, f_domain_and_range,
/// abstraction, closure, uniform_state_space, internal_extensionality,
/// external_extensionality. Comprehension is checked inside `abstraction`,
/// relative to u.bounds(); an unbounded universe makes no saturation claim.
std::vector<CheckReport> check_axioms(const Universe& u, const EnumerateOptions& options = {});

/// State spaces of distinct registered systems are disjoint.
CheckReport check_lemma_isolation(const Universe& u);

/// Distinct objects never share a Val profile.
CheckReport check_identity_criterion(const Universe& u);

/// Compares systems_equal, canonical-form equality of the collapses, and a
/// direct state-bijection search; passes iff all three agree. The witness
/// also records whether literal equality of the collapses agrees.
CheckReport check_collapse_lemma(const ParticularObjectSystem& o1, const ParticularObjectSystem& o2);

/// Brute force over every row set of width m over u's particulars with m
/// distinct columns; passes iff the largest has |P|^m rows. Throws
/// InfeasibleBounds when |P|^m exceeds `row_space_limit`.
CheckReport check_max_states(const Universe& u, std::size_t m, std::size_t row_space_limit = 20);

/// Passes iff both universes register the same canonical ids. Throws
/// ParticularsMismatch.
CheckReport check_categoricity(const Universe& u1, const Universe& u2);

/// The extensionality criterion read directly: a bijection between the rows
/// of the two collapses carrying every column of each onto a column of the
/// other. Throws InfeasibleBounds above 9 rows.
bool equivalent_by_bijection(const ParticularObjectSystem& o1, const ParticularObjectSystem& o2);

/// check_axioms followed by the isolation and identity-criterion checks.
std::vector<CheckReport> audit(const Universe& u, const EnumerateOptions& options = {});

}  // namespace aot
