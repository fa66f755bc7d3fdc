#pragma once

// Crossed homomorphisms K -> C(R^n) and the degree-1 dictionary with Čech
// cocycles on a group-quotient presentation.

#include "diffcech/cech.hpp"

#include <optional>

namespace diffcech {

/// Stored by generator values; kappa(k + k') = kappa(k) + kappa(k') . k.
class CrossedHom {
public:
    CrossedHom(PresentationPtr p, std::vector<MPoly> generator_values);

    const PresentationPtr& presentation() const noexcept { return p_; }
    const std::vector<MPoly>& values() const noexcept { return values_; }
    MPoly at(const KElement& k) const;

    /// kappa(g_i) + kappa(g_j) . g_i = kappa(g_j) + kappa(g_i) . g_j for every pair.
    bool compatible() const;
    /// The m-fold crossed sum along each torsion generator vanishes.
    bool torsion_consistent() const;

    friend bool operator==(const CrossedHom& x, const CrossedHom& y) { return x.values_ == y.values_; }

private:
    PresentationPtr p_;
    std::vector<MPoly> values_;
    std::shared_ptr<CrossedMemo> memo_ = std::make_shared<CrossedMemo>();
};

/// kappa_f(k)(y) = f(y, y.k). CocycleError on a non-cocycle.
CrossedHom crossed_from_cocycle(const Cochain& f);

/// f_beta(y1, y2) = beta(k(y1, y2))(y1). FreenessError unless the action is free.
Cochain cocycle_from_crossed(const CrossedHom& beta);

/// k -> h . k - h.
CrossedHom principal_crossed(const PresentationPtr& p, const MPoly& h);

struct H1Group {
    std::size_t dimension = 0;
    std::vector<CrossedHom> representatives;
    std::string class_note;
    /// "forward map only" for non-free actions.
    std::string description;
    bool free = true;
    std::string summary() const;
};

/// Crossed homomorphisms with values in P_D modulo principal ones with potentials in P_{D+1}.
H1Group h1_group(const PresentationPtr& p);

/// h in P_{D+1} with beta = principal_crossed(h), or nullopt.
std::optional<MPoly> principal_potential(const CrossedHom& beta);

} // namespace diffcech
