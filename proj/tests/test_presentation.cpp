#include "fixtures.hpp"

#include "diffcech/errors.hpp"
#include "diffcech/presentation_io.hpp"
#include "diffcech/sampling.hpp"

#include <doctest.h>

using namespace diffcech;

TEST_CASE("tuples of the three-arc circle") {
    const auto alt = gallery::circle3(true);
    CHECK(alt->nerve().tuples(1) == std::vector<Tuple>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(alt->nerve().tuples(0) == std::vector<Tuple>{{0}, {1}, {2}});
    CHECK_FALSE(alt->nerve().is_alive({0, 1, 2}));
    CHECK_THROWS_AS(alt->nerve().tuples(4), DegreeError);
    const auto full = gallery::circle3(false);
    CHECK(full->nerve().tuple_alive({0, 1, 0}));
    CHECK_FALSE(full->nerve().tuple_alive({0, 1, 2}));
    CHECK(full->nerve().tuples(1).size() == 9);
}

TEST_CASE("one-chart presentation") {
    const auto p = gallery::point(false);
    for (int k = 0; k <= 3; ++k) CHECK(p->nerve().tuples(k) == std::vector<Tuple>{Tuple(static_cast<std::size_t>(k + 1), 0)});
}

TEST_CASE("face closure is validated") {
    try {
        FiniteNerve({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 1, 2}}, 2, true);
        FAIL("expected a ValidationError");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("[0,2]") != std::string::npos);
    }
}

TEST_CASE("degeneracy maps") {
    CHECK(degeneracy({4, 5, 6}, 1) == Tuple{4, 6});
    CHECK(degeneracy({4, 5, 6}, 2) == Tuple{4, 5});
    CHECK_THROWS(degeneracy({4, 5}, 2));
    const auto t = gallery::irrational_torus();
    const GroupQuotient& q = t->quotient();
    QuotientPoint x{{Scalar(2)}, {{1, 1}}};
    auto d0 = q.degeneracy(x, 0);
    CHECK(d0.y == ScalarVector{Scalar(3) + Scalar::alpha()});
    CHECK(d0.kappas.empty());
    CHECK(q.degeneracy(x, 1).y == x.y);
}

TEST_CASE("simplicial identities") {
    for (const auto& p : {gallery::circle3(false), gallery::torus9(true), gallery::rp2(false)}) {
        const FiniteNerve& n = p->nerve();
        for (int k = 2; k <= n.k_max(); ++k)
            for (const auto& t : n.tuples(k))
                for (int j = 0; j <= k; ++j)
                    for (int i = 0; i < j; ++i) CHECK(degeneracy(degeneracy(t, j), i) == degeneracy(degeneracy(t, i), j - 1));
    }
    Rng rng(4);
    for (const auto& p : {gallery::irrational_torus(), gallery::z2_reflection()}) {
        const GroupQuotient& q = p->quotient();
        std::uniform_int_distribution<long> n(-3, 3);
        for (int s = 0; s < 200; ++s) {
            QuotientPoint x{{random_scalar(rng)}, {}};
            for (int j = 0; j < 3; ++j) {
                KElement e(q.rank());
                for (auto& v : e) v = n(rng);
                x.kappas.push_back(q.reduce(e));
            }
            for (int j = 0; j <= 3; ++j)
                for (int i = 0; i < j; ++i)
                    CHECK(q.degeneracy(q.degeneracy(x, j), i) == q.degeneracy(q.degeneracy(x, i), j - 1));
        }
    }
}

TEST_CASE("group quotient validation") {
    AffineMap flip{ScalarMatrix::from_rows({{Scalar(-1)}}, 1), {Scalar(0)}};
    CHECK_THROWS_AS(GroupQuotient(1, {{3, flip}}, false, 2), ValidationError);
    CHECK_THROWS_AS(GroupQuotient(1, {{2, flip}}, true, 2), ValidationError);
    AffineMap scale{ScalarMatrix::from_rows({{Scalar(2)}}, 1), {Scalar(0)}};
    CHECK_THROWS_AS(GroupQuotient(1, {{0, flip}, {0, AffineMap::translation({Scalar(1)})}}, false, 2), ValidationError);
    CHECK_NOTHROW(GroupQuotient(1, {{0, scale}}, false, 2));
    const auto z2 = gallery::z2_reflection();
    CHECK(z2->quotient().order() == 2);
    CHECK(z2->quotient().connecting_elements({Scalar(0)}, {Scalar(0)}).size() == 2);
    const auto t = gallery::irrational_torus();
    const auto ks = t->quotient().connecting_elements({Scalar(1)}, {Scalar(-1) + Scalar(2) * Scalar::alpha()});
    CHECK(ks == std::vector<KElement>{{-2, 2}});
}

TEST_CASE("common refinements") {
    const auto c3 = gallery::circle3();
    auto same = common_refinement(c3, c3);
    CHECK(same.refinement == c3);
    CHECK(same.to_first.index_map() == std::vector<int>{0, 1, 2});

    auto arcs = common_refinement(c3, fixtures::two_arc());
    const FiniteNerve& s = arcs.refinement->nerve();
    CHECK(s.num_charts() == 6);
    CHECK(arcs.to_first.is_refinement());
    CHECK(arcs.to_second.is_refinement());
    CHECK(arcs.to_first.ev_compatible());
    CHECK(arcs.to_second.ev_compatible());

    auto pts = common_refinement(gallery::point(), make_presentation(FiniteNerve({"V"}, {}, 3, false)));
    CHECK(pts.refinement->nerve().num_charts() == 1);

    CHECK_THROWS_AS(common_refinement(c3, gallery::torus9()), CompatibilityError);
    CHECK(gallery::circle_refinement(gallery::circle6(), c3).is_refinement());
    CHECK_FALSE(gallery::circle_double_cover(gallery::circle6(), c3).is_refinement());
}

TEST_CASE("presentation JSON round trip") {
    for (const auto& p : {gallery::circle3(), gallery::torus9(true), gallery::irrational_torus(2), gallery::z2_reflection()}) {
        const std::string text = canonical_text(*p);
        const Presentation back = presentation_from_json(Json::parse(text));
        CHECK(back == *p);
        CHECK(canonical_text(back) == text);
    }
    CHECK_THROWS_AS(presentation_from_json(Json::parse(R"({"kind":"nerve","charts":3,"alive":[[0,1,2]],"k_max":2})")),
                    ParseError);
    try {
        presentation_from_json(Json::parse(R"({"kind":"nerve","charts":3,"alive":[[0,1],[1,2],[0,1,2]],"k_max":2})"));
    } catch (const ParseError& e) {
        CHECK(e.field() == "alive");
        CHECK(std::string(e.what()).find("[0,2]") != std::string::npos);
    }
}
