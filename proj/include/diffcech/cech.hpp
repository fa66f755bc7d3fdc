#pragma once

// Coboundary, cocycle tests, cohomology, pullbacks, coefficient changes and
// connecting homomorphisms.

#include "diffcech/cochain.hpp"
#include "diffcech/smith.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

namespace diffcech {

inline constexpr std::uint64_t kDefaultSeed = 1729;

/// (∂c)(x_0, ..., x_{k+1}) = Σ (-1)^i c(d_i x). DegreeError past the supported range.
Cochain coboundary(const Cochain& c);

struct CocycleCheck {
    bool ok = true;
    /// Where ∂c is nonzero, e.g. "(0,1,2)" or "([1,0],[1,1])".
    std::string counterexample;
    explicit operator bool() const { return ok; }
};

/// Nerves: every alive tuple. Quotients: exact symbolic check on the tuples
/// that determine the cochain plus random probes drawn from `seed`.
CocycleCheck is_cocycle(const Cochain& c, std::uint64_t seed = kDefaultSeed, int probes = 200);

/// Solver behind a cohomology report.
class ClassOracle {
public:
    virtual ~ClassOracle() = default;
    /// Coordinates of the class of a cocycle against the report's generators
    /// (integral coordinates are reduced modulo the component orders).
    virtual std::vector<Scalar> coordinates(const Cochain& cocycle) const = 0;
    /// Some α with ∂α = c, or nullopt.
    virtual std::optional<Cochain> primitive(const Cochain& c) const = 0;
};

struct CohomologyReport {
    int degree = 0;
    GroupTag coeff;
    std::string presentation_id;
    bool over_field = false;

    /// Integral coefficients: order of each generator (0 for a free summand).
    IntVector orders;
    /// Normalized invariants: free rank and invariant factors > 1.
    AbelianInvariants invariants;
    /// Field coefficients.
    std::size_t dimension = 0;

    std::vector<Cochain> generators;
    /// Quotients: "relative to class (n=.., D=..)".
    std::string class_note;
    std::string description;

    std::shared_ptr<const ClassOracle> oracle;

    /// "Z", "Z^2 ⊕ Z/2", "R", "0", ...
    std::string summary() const;
    bool is_zero() const;
    std::vector<Scalar> coordinates(const Cochain& c) const { return oracle->coordinates(c); }
    bool class_is_zero(const Cochain& c) const;
};

/// Nerves over Z, Z/m (Smith normal form) or Q, R(alpha) (Gaussian elimination);
/// quotients over R(alpha) relative to the declared function class.
CohomologyReport cohomology(const PresentationPtr& p, const GroupTag& tag, int k);

/// H^0 with a description of the global sections.
CohomologyReport h0_global_sections(const PresentationPtr& p, const GroupTag& tag);

/// (f^# c)(b_0, ..., b_k) = c(phi(b_0), ..., phi(b_k)).
Cochain pullback_cochain(const PresentationMorphism& m, const Cochain& c);

/// Applies h value by value. Quotient cochains need h to be a scalar multiple.
Cochain push_coefficients(const GroupHom& h, const Cochain& c);

/// δ(c) = A-valued ∂(lift(c)). `lift_fn` overrides the sequence's lifting oracle.
Cochain connecting_map(const CoefficientSES& ses, const Cochain& c,
                       const std::function<GroupElement(const GroupElement&)>& lift_fn = {});

struct ClassComparison {
    bool equal = false;
    /// α with ∂α = f2 - f1 when equal.
    std::optional<Cochain> witness;
    std::string certificate;
};

/// Same presentation: solves ∂α = f2 - f1. Different presentations: through common_refinement.
ClassComparison classes_equal(const Cochain& f1, const Cochain& f2);

} // namespace diffcech
