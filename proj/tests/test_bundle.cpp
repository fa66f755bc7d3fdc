#include "fixtures.hpp"
#include "oracles.hpp"

#include "diffcech/bundle.hpp"
#include "diffcech/errors.hpp"
#include "diffcech/expr.hpp"
#include "diffcech/sampling.hpp"

#include <doctest.h>

using namespace diffcech;

namespace {

const GroupTag Z = GroupTag::integers();
const GroupTag R = GroupTag::reals();

} // namespace

TEST_CASE("trivial bundle orbit equality") {
    const auto c = gallery::circle3(false);
    const BundlePresentation b = bundle_from_cocycle(Cochain::zero(c, Z, 1));
    BundlePoint p = b.tau0_nerve(0, 1), q = b.tau0_nerve(1, 1);
    CHECK(b.equal(p, q));
    q.g = GroupElement::integer(Z, 5);
    CHECK_FALSE(b.equal(p, q));
    CHECK(division(b, p, q) == GroupElement::integer(Z, 5));
    CHECK(division(b, p, p).is_zero());
}

TEST_CASE("division map") {
    const auto c = gallery::circle3(false);
    const Cochain f = gallery::winding_cocycle(c, 1);
    const BundlePresentation b = bundle_from_cocycle(f);
    // atom 10 lies in arc 2 and arc 0
    BundlePoint p = b.tau0_nerve(2, 10), q = b.tau0_nerve(0, 10);
    p.g = GroupElement::integer(Z, 4);
    q.g = GroupElement::integer(Z, -1);
    CHECK(division(b, p, q) == f.value({2, 0}) + q.g - p.g);
    CHECK_THROWS_AS(division(b, b.tau0_nerve(0, 0), b.tau0_nerve(1, 4)), FiberError);

    const auto t = gallery::irrational_torus();
    const BundlePresentation bt = bundle_from_cocycle(gallery::irrational_torus_cocycle(t));
    const Scalar a = Scalar::alpha();
    const BundlePoint y1 = bt.tau0_quotient({Scalar(1)}), y2 = bt.tau0_quotient({Scalar(3) - Scalar(2) * a});
    CHECK(division(bt, y1, y2) == GroupElement::real(Scalar(-2) * a));
    CHECK_THROWS_AS(division(bt, y1, bt.tau0_quotient({Scalar(mpq_class(1, 2))})), FiberError);
}

TEST_CASE("division axioms on random fiber pairs") {
    for (const auto& name : {"circle3-winding1", "irrational-torus-bundle"}) {
        const GalleryEntry e = gallery_entry(name);
        const BundlePresentation b(*e.cocycle);
        Rng rng(1);
        for (std::uint64_t s = 0; s < 100; ++s) {
            auto [p, q] = random_fiber_pair(b, s);
            const GroupElement g = random_element(b.group(), rng);
            CHECK(division(b, p, b.act(p, g)) == g);
            CHECK(b.equal(b.act(p, division(b, p, q)), q));
        }
    }
}

TEST_CASE("cocycle from bundle") {
    Rng rng(4);
    const auto c = gallery::circle3(false);
    const Cochain f = gallery::winding_cocycle(c, 2);
    const BundlePresentation b = bundle_from_cocycle(f);
    CHECK(cocycle_from_bundle(b) == f);
    const Cochain alpha = random_cochain(c, Z, 0, rng);
    CHECK(cocycle_from_bundle(b, alpha) == f + coboundary(alpha));
    const BundlePresentation trivial = bundle_from_cocycle(Cochain::zero(c, Z, 1));
    CHECK(cocycle_from_bundle(trivial, alpha) == coboundary(alpha));

    const auto t = gallery::irrational_torus();
    const BundlePresentation bt = bundle_from_cocycle(gallery::irrational_torus_cocycle(t));
    const Cochain shift = Cochain::function(t, parse_polynomial_expression("x0"));
    const Cochain moved = cocycle_from_bundle(bt, shift);
    CHECK(moved.component({{1, 0}}) == MPoly(Scalar(1)));
    CHECK(moved.component({{0, 1}}) == MPoly(Scalar(2) * Scalar::alpha()));
    CHECK(moved.component({{2, 3}}) == MPoly(Scalar(2) + Scalar(6) * Scalar::alpha()));
}

TEST_CASE("triviality") {
    Rng rng(6);
    const auto c = gallery::circle3(false);
    const Cochain a0 = random_cochain(c, Z, 0, rng);
    auto tr = is_trivializable(bundle_from_cocycle(coboundary(a0)));
    CHECK(tr.trivial);
    REQUIRE(tr.witness);
    CHECK(coboundary(*tr.witness) == -coboundary(a0));
    CHECK(is_trivializable(bundle_from_cocycle(Cochain::zero(c, Z, 1))).trivial);
    CHECK_FALSE(is_trivializable(bundle_from_cocycle(gallery::winding_cocycle(c, 1))).trivial);
    for (int D = 1; D <= 3; ++D) {
        const auto t = gallery::irrational_torus(D);
        auto r = is_trivializable(bundle_from_cocycle(gallery::irrational_torus_cocycle(t)));
        CHECK_FALSE(r.trivial);
        CHECK(r.certificate == "nontrivial in class D=" + std::to_string(D));
    }
}

TEST_CASE("witness sections are well defined on orbits") {
    Rng rng(12);
    const auto c = gallery::circle6(false);
    const BundlePresentation b = bundle_from_cocycle(coboundary(random_cochain(c, Z, 0, rng)));
    auto tr = is_trivializable(b);
    REQUIRE(tr.witness);
    for (std::uint64_t s = 0; s < 50; ++s) {
        auto [p, q] = random_fiber_pair(b, s);
        CHECK(b.equal(section_point(b, *tr.witness, p), section_point(b, *tr.witness, q)));
    }
}

TEST_CASE("pullback bundles") {
    const auto c3 = gallery::circle3(false), c6 = gallery::circle6(false);
    const BundlePresentation w1 = bundle_from_cocycle(gallery::winding_cocycle(c3, 1));
    CHECK(pullback_bundle(PresentationMorphism::identity(c3), w1).cocycle() == w1.cocycle());
    CHECK(oracle::winding(pullback_bundle(gallery::circle_double_cover(c6, c3), w1).cocycle()) == 2);

    const auto t = gallery::irrational_torus();
    const BundlePresentation bt = bundle_from_cocycle(gallery::irrational_torus_cocycle(t));
    CHECK(is_trivializable(pullback_bundle(gallery::line_into_torus(gallery::line(), t), bt)).trivial);
}

TEST_CASE("isomorphisms carry orbits to orbits") {
    Rng rng(3);
    const auto c = gallery::circle3(false);
    const Cochain f1 = gallery::winding_cocycle(c, 1);
    const Cochain alpha = random_cochain(c, Z, 0, rng);
    const BundlePresentation b1(f1), b2(f1 + coboundary(alpha));
    const BundleIsomorphism iso = isomorphic(b1, b2);
    REQUIRE(iso.isomorphic);
    for (std::uint64_t s = 0; s < 100; ++s) {
        auto [p, q] = random_fiber_pair(b1, s);
        CHECK(b1.equal(p, q) == b2.equal(apply_isomorphism(iso, p), apply_isomorphism(iso, q)));
        BundlePoint r = b1.act(p, division(b1, p, q));
        CHECK(b2.equal(apply_isomorphism(iso, r), apply_isomorphism(iso, q)));
    }
    CHECK_FALSE(isomorphic(b1, BundlePresentation(Cochain::zero(c, Z, 1))).isomorphic);
}

TEST_CASE("bundles need cocycles") {
    const auto tri = fixtures::triangle(true);
    try {
        bundle_from_cocycle(fixtures::nerve_cochain(tri, Z, 1, {{{0, 1}, 1}}));
        FAIL("expected a CocycleError");
    } catch (const CocycleError& e) {
        CHECK(std::string(e.what()).find("(0,1,2)") != std::string::npos);
    }
    CHECK_THROWS_AS(bundle_from_cocycle(Cochain::zero(tri, Z, 0)), DegreeError);
}
