#pragma once

#include <optional>
#include <vector>

#include "pcurves/poly/unipoly.hpp"

namespace pcurves {

/// Precision cap in bits used by every escalation loop (default 4096).
long precision_cap();
void set_precision_cap(long bits);

/// Pairwise disjoint inclusion disks, one per complex root of a squarefree
/// polynomial, at the current working precision. Returns false if the disks
/// could not be separated at this precision.
bool isolate_roots_at(const UniPoly& f, std::vector<CBall>& out);

/// Same, doubling precision from the working precision up to the cap. Throws
/// PrecisionExhausted.
std::vector<CBall> isolate_roots(const UniPoly& f);

/// Root with multiplicity, from a squarefree decomposition.
struct UniRoot {
  CBall z;
  int multiplicity = 1;
  /// Exact value when the root is rational.
  std::optional<Rational> exact;
};

/// All complex roots with multiplicities; rational roots are recognized
/// exactly. Sorted by real part, then imaginary part.
std::vector<UniRoot> roots_with_multiplicity(const UniPoly& f);

/// Rational roots of f (exact).
std::vector<Rational> rational_roots(const UniPoly& f);

}  // namespace pcurves
