#pragma once

// Uniform Haar averaging over a finite translation groupoid and the
// trivializing homotopy it induces on R-valued cocycles.

#include "diffcech/cech.hpp"

namespace diffcech {

/// (1/N) Σ_γ h(u . γ) over the finite group K of the quotient.
GroupElement haar_average(const PresentationPtr& p, const ScalarVector& u, const MPoly& h);

/// The averaged function y -> (1/N) Σ_γ h(y . γ).
MPoly haar_average_function(const PresentationPtr& p, const MPoly& h);

struct Homotopy {
    Cochain g;
    /// ∂g = (-1)^k f, checked symbolically on every tuple of K.
    bool verified = false;
};

/// g(u_0, ..., u_{k-1}) = (1/N) Σ_γ f(u_0, ..., u_{k-1}, u_0 . γ) for a degree-k cocycle f, k >= 1.
Homotopy trivializing_homotopy(const Cochain& f);

} // namespace diffcech
