#pragma once

// Deterministic text for the command-line reports.

#include "diffcech/average.hpp"
#include "diffcech/bundle.hpp"
#include "diffcech/gallery.hpp"

#include <string>

namespace diffcech {

/// "(0,2)=-1, (2,0)=1" on nerves; "x0^2" or "g1: 0, g2: a" on quotients. At most `limit` entries.
std::string brief(const Cochain& c, std::size_t limit = 12);

/// The nerve is a cycle graph: every chart meets exactly two others and no triple meets.
bool is_cycle_nerve(const FiniteNerve& n);

/// "H^1 = Z, generator: winding cocycle" and further lines.
std::string render_cohomology(const CohomologyReport& r, const Presentation& p);
std::string render_trivialization(const Trivialization& t, const BundlePresentation& b);
std::string render_isomorphism(const BundleIsomorphism& iso);
std::string render_homotopy(const Homotopy& h, const Cochain& f);
std::string render_verify(const GalleryEntry& e, const VerifyResult& v);

} // namespace diffcech
