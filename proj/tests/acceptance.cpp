// Acceptance suite: one PASS/FAIL line per criterion.

#include "oracles.hpp"

#include "diffcech/average.hpp"
#include "diffcech/bundle.hpp"
#include "diffcech/errors.hpp"
#include "diffcech/gallery.hpp"
#include "diffcech/grpcoh.hpp"
#include "diffcech/sampling.hpp"
#include "diffcech/smith.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <sys/wait.h>

using namespace diffcech;

namespace {

const GroupTag Z = GroupTag::integers();
const GroupTag R = GroupTag::reals();

/// Collects the first few failure messages of one criterion.
struct Log {
    std::vector<std::string> failures;
    void check(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

std::vector<PresentationPtr> gallery_bases() {
    std::vector<PresentationPtr> out;
    for (const auto& name : gallery_names()) {
        const GalleryEntry e = gallery_entry(name);
        if (!e.cocycle) out.push_back(e.presentation);
    }
    return out;
}

const GroupTag& natural_tag(const PresentationPtr& p) { return p->is_nerve() ? Z : R; }

std::string id(const PresentationPtr& p) { return p->id(); }

// 1
void coboundary_law(Log& log) {
    Rng rng(101);
    for (const auto& p : gallery_bases()) {
        const bool infinite = p->is_quotient() && !p->quotient().finite();
        for (int k = 0; k <= 2; ++k)
            for (int t = 0; t < 500; ++t) {
                const Cochain c = random_cochain(p, natural_tag(p), k, rng);
                if (!vanishes(coboundary(coboundary(c)), rng, infinite ? 4 : 0))
                    log.check(false, id(p) + " degree " + std::to_string(k));
            }
    }
}

// 2
void classical(Log& log) {
    struct Case {
        PresentationPtr (*make)(bool);
        int k;
        GroupTag tag;
        std::string expected;
    };
    const std::vector<Case> cases{
        {gallery::circle3, 0, Z, "Z"},     {gallery::circle3, 1, Z, "Z"},
        {gallery::torus9, 1, Z, "Z^2"},    {gallery::rp2, 1, Z, "0"},
        {gallery::rp2, 2, Z, "Z/2"},       {gallery::rp2, 1, GroupTag::cyclic(2), "Z/2"},
    };
    for (const auto& c : cases)
        for (bool alternating : {false, true}) {
            const auto p = c.make(alternating);
            const std::string got = cohomology(p, c.tag, c.k).summary();
            log.check(got == c.expected, id(p) + (alternating ? " alternating" : " full") + " H^" +
                                             std::to_string(c.k) + "(" + c.tag.str() + ") = " + got);
        }
}

// 3
void global_sections(Log& log) {
    for (const auto& p : gallery_bases()) {
        if (!p->is_nerve()) continue;
        for (const auto& tag : {Z, GroupTag::cyclic(3), R}) {
            const CohomologyReport r = h0_global_sections(p, tag);
            log.check(r.summary() == cohomology(p, tag, 0).summary(), id(p) + " H^0 routes disagree");
            const std::string expected = tag == R ? "R" : tag.str();
            log.check(r.summary() == expected, id(p) + " H^0(" + tag.str() + ") = " + r.summary());
        }
    }
    for (int D = 1; D <= 3; ++D) {
        const CohomologyReport r = h0_global_sections(gallery::irrational_torus(D), R);
        log.check(r.dimension == 1, "irrational torus D=" + std::to_string(D) + " dimension " + std::to_string(r.dimension));
        log.check(r.generators.size() == 1 && r.generators[0].component({}).is_constant() &&
                      !r.generators[0].component({}).is_zero(),
                  "irrational torus D=" + std::to_string(D) + " generator is not a constant");
    }
}

// 4
void round_trip(Log& log) {
    Rng rng(404);
    for (const auto& p : gallery_bases()) {
        const GroupTag& tag = natural_tag(p);
        for (int t = 0; t < 200; ++t) {
            const Cochain f = random_cocycle(p, tag, 1, rng);
            const BundlePresentation b = bundle_from_cocycle(f);
            log.check(cocycle_from_bundle(b, Cochain::zero(p, tag, 0)) == f, id(p) + " round trip");
            Cochain alpha = random_cochain(p, tag, 0, rng);
            if (p->is_quotient() && !p->quotient().finite()) {
                // shifts for infinite K live one degree up
                const FunctionClass cls = p->quotient().function_class().raised(1);
                alpha = Cochain::function(p, random_polynomial(cls, rng));
            }
            log.check(cocycle_from_bundle(b, alpha) == f + coboundary(alpha), id(p) + " shift law");
        }
    }
}

// 5
void irrational_torus(Log& log) {
    for (int D = 1; D <= 3; ++D) {
        const std::string tag = " D=" + std::to_string(D);
        const auto t = gallery::irrational_torus(D);
        const Cochain f = gallery::irrational_torus_cocycle(t);
        log.check(is_cocycle(f).ok, "cocycle" + tag);
        const Trivialization tr = is_trivializable(bundle_from_cocycle(f));
        log.check(!tr.trivial && tr.certificate == "nontrivial in class D=" + std::to_string(D), "triviality" + tag);
        log.check(cohomology(t, R, 1).dimension == 1, "H^1 dimension" + tag);
        const auto l = gallery::line(D);
        log.check(is_trivializable(pullback_bundle(gallery::line_into_torus(l, t), bundle_from_cocycle(f))).trivial,
                  "line pullback" + tag);
    }
}

// 6
void crossed_dictionary(Log& log) {
    Rng rng(606);
    for (const auto& p : {gallery::irrational_torus(), gallery::circle_quotient(), gallery::line()}) {
        for (int t = 0; t < 200; ++t) {
            const Cochain f = random_cocycle(p, R, 1, rng);
            const CrossedHom k = crossed_from_cocycle(f);
            log.check(cocycle_from_crossed(k) == f, id(p) + " f_kappa = f");
            log.check(crossed_from_cocycle(cocycle_from_crossed(k)) == k, id(p) + " kappa_f_beta = beta");
        }
        const H1Group h = h1_group(p);
        const CohomologyReport r = cohomology(p, R, 1);
        log.check(h.dimension == r.dimension, id(p) + " dimensions " + std::to_string(h.dimension) + " vs " +
                                                  std::to_string(r.dimension));
    }
    for (int D = 1; D <= 3; ++D) {
        const auto t = gallery::irrational_torus(D);
        const H1Group h = h1_group(t);
        const CohomologyReport r = cohomology(t, R, 1);
        const Cochain rep = gallery::irrational_torus_cocycle(t);
        log.check(!principal_potential(crossed_from_cocycle(rep)).has_value(), "representative is principal");
        log.check(!r.class_is_zero(rep), "representative is a coboundary");
        if (h.representatives.size() == 1) {
            const Cochain g = cocycle_from_crossed(h.representatives[0]);
            const auto x = r.coordinates(g), y = r.coordinates(rep);
            log.check(x.size() == 1 && y.size() == 1 && !x[0].is_zero() && !y[0].is_zero() &&
                          r.class_is_zero(g.scaled(y[0] / x[0]) - rep),
                      "h1_group representative differs from the cech class D=" + std::to_string(D));
        }
    }
    log.check(cohomology(gallery::circle_quotient(), R, 1).is_zero(), "circle quotient H^1 = 0");
    log.check(h1_group(gallery::circle_quotient()).dimension == 0, "circle quotient h1_group = 0");
}

// 7
void averaging(Log& log) {
    Rng rng(707);
    const auto z2 = gallery::z2_reflection();
    for (int k = 1; k <= 2; ++k) {
        for (int t = 0; t < 100; ++t) {
            const Cochain f = random_cocycle(z2, R, k, rng);
            const Homotopy h = trivializing_homotopy(f);
            const Cochain expected = k % 2 ? -f : f;
            log.check(h.verified && coboundary(h.g) == expected, "degree " + std::to_string(k));
        }
        log.check(cohomology(z2, R, k).is_zero(), "H^" + std::to_string(k) + " nonzero");
    }
}

// 8
IntMatrix induced(const CohomologyReport& from, const CohomologyReport& to, const std::function<Cochain(const Cochain&)>& map) {
    IntMatrix m(to.generators.size(), from.generators.size());
    for (std::size_t j = 0; j < from.generators.size(); ++j) {
        const auto xs = to.coordinates(map(from.generators[j]));
        for (std::size_t i = 0; i < xs.size(); ++i) m(i, j) = xs[i].to_rational().get_num();
    }
    return m;
}

FGAbelian group_of(const CohomologyReport& r) { return {r.orders}; }

void long_exact_sequence(Log& log) {
    const auto c = gallery::circle3();
    for (long m : {2L, 3L, 5L}) {
        const CoefficientSES ses = CoefficientSES::integers_mod(m);
        const GroupTag Zm = GroupTag::cyclic(m);
        const std::function<Cochain(const Cochain&)> times = [&](const Cochain& x) {
            return push_coefficients(ses.injection, x);
        };
        const std::function<Cochain(const Cochain&)> reduce = [&](const Cochain& x) {
            return push_coefficients(ses.surjection, x);
        };
        const std::function<Cochain(const Cochain&)> delta = [&](const Cochain& x) { return connecting_map(ses, x); };
        const CohomologyReport a0 = cohomology(c, Z, 0), b0 = cohomology(c, Z, 0), c0 = cohomology(c, Zm, 0);
        const CohomologyReport a1 = cohomology(c, Z, 1), b1 = cohomology(c, Z, 1), c1 = cohomology(c, Zm, 1);
        const CohomologyReport a2 = cohomology(c, Z, 2);
        const FGAbelian zero{};
        const IntMatrix f0 = induced(a0, b0, times), g0 = induced(b0, c0, reduce), d0 = induced(c0, a1, delta);
        const IntMatrix f1 = induced(a1, b1, times), g1 = induced(b1, c1, reduce), d1 = induced(c1, a2, delta);
        const IntMatrix in(a0.generators.size(), 0);
        const std::string tag = " m=" + std::to_string(m);
        log.check(is_exact_at(zero, in, group_of(a0), f0, group_of(b0)), "H^0(Z) first" + tag);
        log.check(is_exact_at(group_of(a0), f0, group_of(b0), g0, group_of(c0)), "H^0(Z) second" + tag);
        log.check(is_exact_at(group_of(b0), g0, group_of(c0), d0, group_of(a1)), "H^0(Z/m)" + tag);
        log.check(is_exact_at(group_of(c0), d0, group_of(a1), f1, group_of(b1)), "H^1(Z) first" + tag);
        log.check(is_exact_at(group_of(a1), f1, group_of(b1), g1, group_of(c1)), "H^1(Z) second" + tag);
        log.check(is_exact_at(group_of(b1), g1, group_of(c1), d1, group_of(a2)), "H^1(Z/m)" + tag);
        log.check(a2.is_zero(), "H^2(circle) is nonzero");
    }
    const auto p = gallery::rp2();
    const CohomologyReport h1 = cohomology(p, GroupTag::cyclic(2), 1), h2 = cohomology(p, Z, 2);
    if (h1.generators.size() != 1) {
        log.check(false, "rp2 H^1(Z/2) has " + std::to_string(h1.generators.size()) + " generators");
        return;
    }
    const Cochain image = connecting_map(CoefficientSES::integers_mod(2), h1.generators[0]);
    log.check(!h2.class_is_zero(image), "rp2 connecting map is zero");
    log.check(h2.summary() == "Z/2", "rp2 H^2(Z) = " + h2.summary());
}

// 9
void refinement_coherence(Log& log) {
    Rng rng(909);
    std::vector<PresentationPtr> nerves;
    for (const auto& p : gallery_bases())
        if (p->is_nerve()) nerves.push_back(p);
    for (const auto& q : nerves)
        for (const auto& r : nerves) {
            std::optional<CommonRefinement> cr;
            try {
                cr = common_refinement(q, r);
            } catch (const CompatibilityError&) {
                continue;
            }
            for (int t = 0; t < 10; ++t) {
                const Cochain f1 = random_cocycle(q, Z, 1, rng), f2 = random_cocycle(q, Z, 1, rng);
                const Cochain g = random_cocycle(r, Z, 1, rng);
                const bool here = classes_equal(f1, f2).equal;
                const bool there =
                    classes_equal(pullback_cochain(cr->to_first, f1), pullback_cochain(cr->to_first, f2)).equal;
                log.check(here == there, id(q) + " vs " + id(r) + " verdict changes under refinement");
                const bool across = classes_equal(f1, g).equal;
                const bool pulled =
                    classes_equal(pullback_cochain(cr->to_first, f1), pullback_cochain(cr->to_second, g)).equal;
                log.check(across == pulled, id(q) + " vs " + id(r) + " cross verdict");
                if (q->id() == "circle3" || q->id() == "circle6")
                    log.check(here == (oracle::winding(f1) == oracle::winding(f2)), id(q) + " verdict vs winding");
            }
        }
    const auto c3 = gallery::circle3(), c6 = gallery::circle6();
    const Cochain up = pullback_cochain(gallery::circle_double_cover(c6, c3), gallery::winding_cocycle(c3, 1));
    log.check(oracle::winding(up) == 2, "double cover winding " + oracle::winding(up).get_str());
    log.check(classes_equal(up, gallery::winding_cocycle(c3, 2)).equal, "double cover class is not 2 on circle3");
}

// 10
std::string run_cli(const std::string& args) {
    const std::string cmd = std::string(DIFFCECH_CLI) + " " + args + " 2>&1";
    FILE* f = popen(cmd.c_str(), "r");
    if (!f) return "popen failed";
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), f)) out.append(buf.data(), n);
    const int status = pclose(f);
    return out + "\nexit " + std::to_string(WIFEXITED(status) ? WEXITSTATUS(status) : -1);
}

void determinism(Log& log) {
    for (const std::string args : {"cohomology --degree 1 --coeff Z gallery:torus9",
                                   "cohomology --degree 1 --coeff R gallery:irrational-torus",
                                   "check-cocycle gallery:irrational-torus-bundle",
                                   "classify-bundle gallery:circle3-winding1",
                                   "isomorphic gallery:circle3-trivial gallery:circle3-winding1",
                                   "bockstein --ses 'Z->Z->Z/2' gallery:circle3-winding1",
                                   "gallery verify"}) {
        const std::string a = run_cli(args), b = run_cli(args);
        log.check(a == b, args);
        log.check(a.find("popen failed") == std::string::npos, args + " did not run");
    }
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Log&)>>> criteria{
        {"coboundary law", coboundary_law},
        {"classical agreement", classical},
        {"H^0 is global sections", global_sections},
        {"bundle/cocycle round trip", round_trip},
        {"irrational torus", irrational_torus},
        {"crossed-homomorphism dictionary", crossed_dictionary},
        {"averaging trivialization", averaging},
        {"long exact sequence", long_exact_sequence},
        {"refinement coherence", refinement_coherence},
        {"determinism", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Log log;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(log);
        } catch (const std::exception& e) {
            log.failures.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool ok = log.failures.empty();
        failed += ok ? 0 : 1;
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << (ok ? "PASS " : "FAIL ") << i + 1 << ": " << criteria[i].first << " (" << secs << " s)";
        std::cout << line.str() << "\n";
        for (std::size_t j = 0; j < log.failures.size() && j < 5; ++j) std::cout << "    " << log.failures[j] << "\n";
    }
    return failed == 0 ? 0 : 1;
}
