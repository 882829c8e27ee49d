#pragma once

#include <optional>
#include <ostream>

namespace gfn::cli {

/// Runs the identity grids (Gamma anchor, representation agreement,
/// recurrence, derivative relation, ODE, phi identity, polar/complex
/// agreement, conjugate symmetry, monotonicity, modulus bound, decay,
/// origin dichotomy) and prints one pass/fail line per family.
/// tol_override replaces every family tolerance when set.
/// Returns true iff every family passes.
bool run_selftest(std::ostream& out, std::optional<double> tol_override);

}  // namespace gfn::cli
