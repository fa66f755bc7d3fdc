#pragma once

// Principal G-bundles presented by a defining 1-cocycle f: the total space is
// (N(Q) x G) modulo [y1, g] ~ [y2, f(y2, y1) + g], never materialized.

#include "diffcech/cech.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace diffcech {

/// The class [y, g]. Nerves: y is a site seen in one chart. Quotients: y is a point of R^n.
struct BundlePoint {
    int chart = -1;
    std::size_t site = 0;
    ScalarVector y;
    GroupElement g = GroupElement::zero(GroupTag::integers());
};

class BundlePresentation {
public:
    /// Validates f (degree 1, a cocycle). CocycleError names the failing triple.
    BundlePresentation(Cochain f, std::uint64_t seed = kDefaultSeed);

    const PresentationPtr& base() const noexcept { return f_.presentation(); }
    const GroupTag& group() const noexcept { return f_.tag(); }
    const Cochain& cocycle() const noexcept { return f_; }

    /// The canonical trivialization y -> [y, 0].
    BundlePoint tau0_nerve(int chart, std::size_t site) const;
    BundlePoint tau0_quotient(const ScalarVector& y) const;

    /// p . g
    BundlePoint act(const BundlePoint& p, const GroupElement& g) const;
    /// Same point of the base.
    bool same_fiber(const BundlePoint& p, const BundlePoint& q) const;
    /// Orbit equality [y1, g1] = [y2, g2].
    bool equal(const BundlePoint& p, const BundlePoint& q) const;

    /// f(y1, y2) for points over the same base point.
    GroupElement transition(const BundlePoint& p, const BundlePoint& q) const;

private:
    Cochain f_;
};

BundlePresentation bundle_from_cocycle(const Cochain& f);

/// d(p1, p2) = f(y1, y2) + g2 - g1, the unique g with p1 . g = p2. FiberError off the fiber.
GroupElement division(const BundlePresentation& b, const BundlePoint& p1, const BundlePoint& p2);

/// c(tau_alpha, P) for tau_alpha : y -> [y, alpha(y)]; equals f + ∂alpha.
Cochain cocycle_from_bundle(const BundlePresentation& b, const std::optional<Cochain>& alpha = std::nullopt);

struct Trivialization {
    bool trivial = false;
    /// alpha with ∂alpha = -f; the global section is y -> [y, alpha(y)].
    std::optional<Cochain> witness;
    std::string certificate;
};

Trivialization is_trivializable(const BundlePresentation& b);

/// The section point [y, alpha(y)] of a witness.
BundlePoint section_point(const BundlePresentation& b, const Cochain& alpha, const BundlePoint& base_point);

BundlePresentation pullback_bundle(const PresentationMorphism& m, const BundlePresentation& b);

struct BundleIsomorphism {
    bool isomorphic = false;
    /// alpha with f2 - f1 = ∂alpha; the isomorphism is [y, g] -> [y, g - alpha(y)].
    std::optional<Cochain> alpha;
    std::string certificate;
};

BundleIsomorphism isomorphic(const BundlePresentation& b1, const BundlePresentation& b2);

/// [y, g] -> [y, g - alpha(y)].
BundlePoint apply_isomorphism(const BundleIsomorphism& iso, const BundlePoint& p);

/// Random points over one base point; the second differs by a random arrow.
std::pair<BundlePoint, BundlePoint> random_fiber_pair(const BundlePresentation& b, std::uint64_t seed);

} // namespace diffcech
