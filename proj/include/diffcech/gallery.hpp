#pragma once

// Built-in spaces, bundles and morphisms.

#include "diffcech/bundle.hpp"

#include <optional>
#include <string>
#include <vector>

namespace diffcech {

/// A cohomology group the entry claims, checked by `verify_entry`.
struct Advertised {
    int degree;
    GroupTag coeff;
    std::string summary;
};

struct GalleryEntry {
    std::string name;
    std::string description;
    PresentationPtr presentation;
    /// Set for bundle entries.
    std::optional<Cochain> cocycle;
    std::vector<Advertised> advertised;
};

std::vector<std::string> gallery_names();
/// ParseError on an unknown name.
GalleryEntry gallery_entry(const std::string& name);

namespace gallery {

constexpr int kNerveKmax = 3;

PresentationPtr point(bool alternating = false);
/// Three arcs of a circle subdivided into 12 atoms.
PresentationPtr circle3(bool alternating = false);
/// Six stars of the same 12 atoms; refines circle3.
PresentationPtr circle6(bool alternating = false);
/// Vertex stars of the 18-triangle torus on (Z/3)^2.
PresentationPtr torus9(bool alternating = false);
/// Vertex stars of the 6-vertex projective plane.
PresentationPtr rp2(bool alternating = false);
/// R / (Z + aZ) by translations.
PresentationPtr irrational_torus(int degree = 3);
/// R / {x -> -x}.
PresentationPtr z2_reflection(int degree = 3);
/// R / Z by translation.
PresentationPtr circle_quotient(int degree = 3);
/// R with K = 0.
PresentationPtr line(int degree = 3);

/// n on (2,0) and -n on (0,2).
Cochain winding_cocycle(const PresentationPtr& circle3, long n, const GroupTag& tag = GroupTag::integers());
/// kappa(g1) = 0, kappa(g2) = a.
Cochain irrational_torus_cocycle(const PresentationPtr& torus);

/// circle6 -> circle3, j -> floor(j/2).
PresentationMorphism circle_refinement(const PresentationPtr& c6, const PresentationPtr& c3);
/// circle6 -> circle3, j -> j mod 3: a map of spaces of degree 2, not a refinement.
PresentationMorphism circle_double_cover(const PresentationPtr& c6, const PresentationPtr& c3);
/// The one-chart line into the irrational torus.
PresentationMorphism line_into_torus(const PresentationPtr& line, const PresentationPtr& torus);

} // namespace gallery

struct VerifyResult {
    bool ok = true;
    std::vector<std::string> lines;
};

/// Validation, ∂∂ = 0 on random cochains, and the advertised groups.
VerifyResult verify_entry(const GalleryEntry& e, std::uint64_t seed);

} // namespace diffcech
