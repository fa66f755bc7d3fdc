#include "fixtures.hpp"
#include "oracles.hpp"

#include "diffcech/errors.hpp"
#include "diffcech/expr.hpp"
#include "diffcech/sampling.hpp"

#include <doctest.h>

using namespace diffcech;
using fixtures::nerve_cochain;

namespace {

const GroupTag Z = GroupTag::integers();
const GroupTag Z2 = GroupTag::cyclic(2);
const GroupTag R = GroupTag::reals();

std::size_t divisible_count(const AbelianInvariants& inv, long p) {
    std::size_t n = 0;
    for (const auto& t : inv.torsion)
        if (t % p == 0) ++n;
    return n;
}

std::vector<PresentationPtr> nerves(bool alternating) {
    return {gallery::point(alternating), gallery::circle3(alternating), gallery::circle6(alternating),
            gallery::torus9(alternating), gallery::rp2(alternating)};
}

} // namespace

TEST_CASE("coboundary formulas") {
    const auto c = gallery::circle3(true);
    const Cochain eta = nerve_cochain(c, Z, 0, {{{0}, 5}, {{1}, 7}, {{2}, -2}});
    const Cochain d = coboundary(eta);
    for (const auto& t : c->nerve().tuples(1))
        CHECK(d.value(t).as_integer() == eta.value({t[1]}).as_integer() - eta.value({t[0]}).as_integer());
    CHECK(coboundary(nerve_cochain(c, Z, 0, {{{0}, 4}, {{1}, 4}, {{2}, 4}})) == Cochain::zero(c, Z, 1));

    const auto tri = fixtures::triangle(false);
    Rng rng(1);
    const Cochain f = random_cochain(tri, Z, 1, rng);
    const Cochain df = coboundary(f);
    for (const auto& t : tri->nerve().tuples(2)) {
        const mpz_class expect = f.value({t[1], t[2]}).as_integer() - f.value({t[0], t[2]}).as_integer() +
                                 f.value({t[0], t[1]}).as_integer();
        CHECK(df.value(t).as_integer() == expect);
    }
}

TEST_CASE("alternating cochains change sign and vanish on repeats") {
    const auto c = gallery::circle3(true);
    const Cochain f = nerve_cochain(c, Z, 1, {{{0, 1}, 3}});
    CHECK(f.value({1, 0}).as_integer() == -3);
    CHECK(f.value({1, 1}).is_zero());
}

TEST_CASE("cocycle tests") {
    const auto tri = fixtures::triangle(true);
    const Cochain f = nerve_cochain(tri, Z, 1, {{{0, 1}, 1}});
    auto chk = is_cocycle(f);
    CHECK_FALSE(chk.ok);
    CHECK(chk.counterexample == "(0,1,2)");
    Rng rng(2);
    CHECK(is_cocycle(coboundary(random_cochain(tri, Z, 0, rng))));
    CHECK(is_cocycle(gallery::irrational_torus_cocycle(gallery::irrational_torus())));
    const auto t = gallery::irrational_torus();
    auto bad = is_cocycle(Cochain::crossed(t, {parse_polynomial_expression("x0"), MPoly()}));
    CHECK_FALSE(bad.ok);
    CHECK(bad.counterexample == "([0,1],[1,1])");
}

TEST_CASE("classical cohomology") {
    auto summary = [](const PresentationPtr& p, const GroupTag& g, int k) { return cohomology(p, g, k).summary(); };
    for (bool alt : {true, false}) {
        CHECK(summary(gallery::point(alt), Z, 0) == "Z");
        CHECK(summary(gallery::point(alt), Z, 1) == "0");
        CHECK(summary(gallery::point(alt), Z, 2) == "0");
        CHECK(summary(gallery::circle3(alt), Z, 0) == "Z");
        CHECK(summary(gallery::circle3(alt), Z, 1) == "Z");
        CHECK(summary(gallery::circle3(alt), Z, 2) == "0");
        CHECK(summary(gallery::torus9(alt), Z, 1) == "Z^2");
        CHECK(summary(gallery::torus9(alt), Z, 2) == "Z");
        CHECK(summary(gallery::rp2(alt), Z, 1) == "0");
        CHECK(summary(gallery::rp2(alt), Z, 2) == "Z/2");
        CHECK(summary(gallery::rp2(alt), Z2, 1) == "Z/2");
        CHECK(summary(gallery::rp2(alt), Z2, 2) == "Z/2");
        CHECK(summary(gallery::rp2(alt), GroupTag::rationals(), 2) == "0");
        CHECK(summary(gallery::torus9(alt), GroupTag::rationals(), 1) == "Q^2");
    }
    CHECK_THROWS_AS(cohomology(gallery::circle3(), GroupTag::rationals_mod_integers(), 1), UnsupportedError);
}

TEST_CASE("SNF cohomology agrees with ranks over Q and F_p") {
    for (bool alt : {true, false})
        for (const auto& p : nerves(alt)) {
            const FiniteNerve& n = p->nerve();
            for (int k = 0; k < n.k_max(); ++k) {
                const auto here = cohomology(p, Z, k).invariants;
                const auto next = cohomology(p, Z, k + 1).invariants;
                CHECK(here.free_rank == oracle::betti(n, k, 0));
                for (long prime : {2L, 3L}) {
                    const auto mod = cohomology(p, GroupTag::cyclic(prime), k);
                    const std::size_t expect = here.free_rank + divisible_count(here, prime) + divisible_count(next, prime);
                    CHECK(mod.invariants.torsion.size() == expect);
                    CHECK(oracle::betti(n, k, prime) == expect);
                }
            }
        }
}

TEST_CASE("report coordinates and primitives") {
    const auto c = gallery::circle3(false);
    const auto rep = cohomology(c, Z, 1);
    const Cochain w = gallery::winding_cocycle(c, 3);
    CHECK(rep.coordinates(w) == std::vector<Scalar>{Scalar(mpz_class(oracle::winding(w) * (oracle::winding(rep.generators[0]) > 0 ? 1 : -1)))});
    Rng rng(3);
    const Cochain alpha = random_cochain(c, Z, 0, rng);
    CHECK(rep.class_is_zero(coboundary(alpha)));
    auto prim = rep.oracle->primitive(coboundary(alpha));
    REQUIRE(prim);
    CHECK(coboundary(*prim) == coboundary(alpha));
    CHECK_THROWS_AS(rep.coordinates(nerve_cochain(c, Z, 1, {{{0, 1}, 1}})), CocycleError);

    const auto rp = gallery::rp2(true);
    const auto h2 = cohomology(rp, Z, 2);
    const Cochain twice = h2.generators[0] + h2.generators[0];
    CHECK(h2.class_is_zero(twice));
    CHECK_FALSE(h2.class_is_zero(h2.generators[0]));
}

TEST_CASE("global sections") {
    CHECK(h0_global_sections(gallery::torus9(), Z).summary() == "Z");
    CHECK(h0_global_sections(gallery::circle3(), Z2).summary() == "Z/2");
    CHECK(h0_global_sections(fixtures::two_points(), Z).summary() == "Z^2");
    CHECK(h0_global_sections(fixtures::two_points(), Z2).summary() == "Z/2 ⊕ Z/2");
    for (int D = 1; D <= 3; ++D) {
        const auto r = h0_global_sections(gallery::irrational_torus(D), R);
        CHECK(r.dimension == 1);
        CHECK(r.generators[0].component({}).is_constant());
    }
    CHECK(h0_global_sections(gallery::z2_reflection(3), R).dimension == 2);
}

TEST_CASE("quotient cohomology") {
    for (int D = 1; D <= 3; ++D) {
        const auto t = gallery::irrational_torus(D);
        const auto rep = cohomology(t, R, 1);
        CHECK(rep.dimension == 1);
        CHECK(rep.class_note == "relative to class (n=1, D=" + std::to_string(D) + ")");
        CHECK_FALSE(rep.class_is_zero(gallery::irrational_torus_cocycle(t)));
    }
    CHECK(cohomology(gallery::circle_quotient(), R, 1).dimension == 0);
    CHECK(cohomology(gallery::line(), R, 1).dimension == 0);
    CHECK(cohomology(gallery::z2_reflection(), R, 1).dimension == 0);
    CHECK(cohomology(gallery::z2_reflection(), R, 2).dimension == 0);
    CHECK_THROWS_AS(cohomology(gallery::irrational_torus(), R, 2), UnsupportedError);
    CHECK_THROWS_AS(cohomology(gallery::irrational_torus(), Z, 1), UnsupportedError);
}

TEST_CASE("pullbacks") {
    const auto c3 = gallery::circle3(false), c6 = gallery::circle6(false);
    const Cochain w1 = gallery::winding_cocycle(c3, 1);
    CHECK(pullback_cochain(PresentationMorphism::identity(c3), w1) == w1);
    const Cochain up = pullback_cochain(gallery::circle_double_cover(c6, c3), w1);
    CHECK(oracle::winding(up) == 2);
    CHECK(oracle::winding(pullback_cochain(gallery::circle_refinement(c6, c3), w1)) == 1);

    const auto pt = gallery::point(false);
    const auto to_point = PresentationMorphism::nerve_map(c3, pt, {0, 0, 0});
    Rng rng(5);
    CHECK(pullback_cochain(to_point, random_cocycle(pt, Z, 1, rng)) == Cochain::zero(c3, Z, 1));

    for (int t = 0; t < 20; ++t) {
        const Cochain c = random_cochain(c3, Z, 1, rng);
        const auto m = gallery::circle_double_cover(c6, c3);
        CHECK(pullback_cochain(m, coboundary(c)) == coboundary(pullback_cochain(m, c)));
        const GroupHom h = GroupHom::reduction(Z, 2);
        CHECK(push_coefficients(h, coboundary(c)) == coboundary(push_coefficients(h, c)));
    }
}

TEST_CASE("coefficient changes") {
    const auto c = gallery::circle3(false);
    const Cochain w3 = gallery::winding_cocycle(c, 3);
    CHECK(push_coefficients(GroupHom::identity(Z), w3) == w3);
    CHECK(push_coefficients(GroupHom::zero(Z, Z2), w3) == Cochain::zero(c, Z2, 1));
    const Cochain red = push_coefficients(GroupHom::reduction(Z, 2), w3);
    const auto rep = cohomology(c, Z2, 1);
    CHECK(rep.coordinates(red) == std::vector<Scalar>{Scalar(1)});
    CHECK_THROWS_AS(push_coefficients(GroupHom::identity(Z2), w3), TagError);
}

TEST_CASE("connecting maps") {
    const auto c = gallery::circle3(false);
    const auto ses = CoefficientSES::integers_mod(2);
    CHECK(connecting_map(ses, Cochain::zero(c, Z2, 1)) == Cochain::zero(c, Z, 2));
    const Cochain one = fixtures::nerve_cochain(c, Z2, 0, {{{0}, 1}, {{1}, 1}, {{2}, 1}});
    CHECK(cohomology(c, Z, 1).class_is_zero(connecting_map(ses, one)));

    const auto rp = gallery::rp2(true);
    const Cochain g = cohomology(rp, Z2, 1).generators[0];
    const Cochain d = connecting_map(ses, g);
    const auto h2 = cohomology(rp, Z, 2);
    CHECK_FALSE(h2.class_is_zero(d));
    // another lift: add the kernel element 2 wherever the value is 1
    const Cochain d2 = connecting_map(ses, g, [](const GroupElement& x) {
        return GroupElement::integer(GroupTag::integers(), x.as_integer() == 1 ? 3 : 0);
    });
    CHECK(h2.coordinates(d) == h2.coordinates(d2));
    CHECK_THROWS_AS(connecting_map(ses, nerve_cochain(fixtures::triangle(), Z2, 1, {{{0, 1}, 1}})), CocycleError);
}

TEST_CASE("class comparison") {
    const auto c = gallery::circle3(false);
    Rng rng(8);
    const Cochain f = gallery::winding_cocycle(c, 1);
    const Cochain a0 = random_cochain(c, Z, 0, rng);
    auto same = classes_equal(f, f + coboundary(a0));
    CHECK(same.equal);
    REQUIRE(same.witness);
    CHECK(coboundary(*same.witness) == coboundary(a0));
    CHECK_FALSE(classes_equal(f, Cochain::zero(c, Z, 1)).equal);
    for (int D = 1; D <= 3; ++D) {
        const auto t = gallery::irrational_torus(D);
        CHECK_FALSE(classes_equal(gallery::irrational_torus_cocycle(t), Cochain::zero(t, R, 1)).equal);
    }
    CHECK_THROWS_AS(classes_equal(nerve_cochain(fixtures::triangle(), Z, 1, {{{0, 1}, 1}}),
                                  Cochain::zero(fixtures::triangle(), Z, 1)),
                    CocycleError);
}

TEST_CASE("classes compared across presentations") {
    const auto c3 = gallery::circle3(false), c6 = gallery::circle6(false);
    const Cochain w = gallery::winding_cocycle(c3, 1);
    const Cochain up = pullback_cochain(gallery::circle_refinement(c6, c3), w);
    CHECK(classes_equal(w, up).equal);
    CHECK_FALSE(classes_equal(w, pullback_cochain(gallery::circle_double_cover(c6, c3), w)).equal);
}
