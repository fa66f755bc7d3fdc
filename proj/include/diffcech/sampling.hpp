#pragma once

// Deterministic random objects for probes, property tests and gallery self-checks.

#include "diffcech/cech.hpp"

#include <random>

namespace diffcech {

using Rng = std::mt19937_64;

/// Small values: integers in [-5, 5], residues, fractions p/q with q <= 3, and p + q*a on R(alpha).
Scalar random_scalar(Rng& rng, bool with_alpha = true);
GroupElement random_element(const GroupTag& tag, Rng& rng);
MPoly random_polynomial(const FunctionClass& cls, Rng& rng);

/// Arbitrary cochain (usually not a cocycle).
Cochain random_cochain(const PresentationPtr& p, const GroupTag& tag, int k, Rng& rng);

/// Random combination of the generators of H^k plus the coboundary of a random (k-1)-cochain.
Cochain random_cocycle(const PresentationPtr& p, const GroupTag& tag, int k, Rng& rng);

} // namespace diffcech

namespace diffcech {

/// Exact zero test: every value on nerves and finite K; `samples` random tuples from [-3, 3]^r otherwise.
bool vanishes(const Cochain& c, Rng& rng, int samples = 50);

} // namespace diffcech
