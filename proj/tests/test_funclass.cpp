#include "diffcech/errors.hpp"
#include "diffcech/expr.hpp"
#include "diffcech/funclass.hpp"
#include "diffcech/sampling.hpp"

#include <doctest.h>

using namespace diffcech;

namespace {

const Scalar a = Scalar::alpha();
MPoly P(const std::string& s) { return parse_polynomial_expression(s); }
AffineMap shift(const Scalar& s) { return AffineMap::translation({s}); }
AffineMap flip() { return {ScalarMatrix::from_rows({{Scalar(-1)}}, 1), {Scalar(0)}}; }

} // namespace

TEST_CASE("affine actions") {
    CHECK(act(shift(1), P("x0")) == P("x0 + 1"));
    CHECK(act(shift(a), P("x0^2")) == P("x0^2 + 2*a*x0 + a^2"));
    CHECK(act(flip(), P("x0^3")) == P("-x0^3"));
    CHECK(act(AffineMap::identity(1), P("x0^2 + 3")) == P("x0^2 + 3"));
    const FunctionClass two(2, 2);
    CHECK_THROWS_AS(act(shift(1), FunctionElement(two, P("x1"))), ClassError);
}

TEST_CASE("coordinates in the monomial basis") {
    const FunctionClass c(1, 2);
    CHECK(c.dimension() == 3);
    CHECK(c.coordinates(P("3 + 2*x0")) == ScalarVector{Scalar(3), Scalar(2), Scalar(0)});
    CHECK(c.coordinates(MPoly()) == ScalarVector{Scalar(0), Scalar(0), Scalar(0)});
    CHECK(c.coordinates(P("(x0 + a)^2")) == ScalarVector{a * a, Scalar(2) * a, Scalar(1)});
    CHECK_THROWS_AS(c.coordinates(P("x0^3")), ClassError);
    CHECK(FunctionClass(2, 3).dimension() == 10);
    CHECK(FunctionClass(3, 2).dimension() == 10);
    CHECK(c.str() == "(n=1, D=2)");
}

TEST_CASE("coordinates form a linear bijection") {
    Rng rng(2);
    const FunctionClass c(2, 3);
    for (int t = 0; t < 100; ++t) {
        MPoly h1 = random_polynomial(c, rng), h2 = random_polynomial(c, rng);
        Scalar s = random_scalar(rng);
        MPoly combo = h1;
        combo *= s;
        combo += h2;
        ScalarVector lhs = c.coordinates(combo), x = c.coordinates(h1), y = c.coordinates(h2);
        for (std::size_t i = 0; i < lhs.size(); ++i) CHECK(lhs[i] == s * x[i] + y[i]);
        CHECK(c.element(c.coordinates(h1)) == h1);
    }
}

TEST_CASE("right action identity for translations and reflections") {
    Rng rng(9);
    const FunctionClass c(1, 3);
    std::uniform_int_distribution<long> n(-3, 3);
    for (int t = 0; t < 500; ++t) {
        const MPoly h = random_polynomial(c, rng);
        const Scalar s1 = Scalar(n(rng)) + Scalar(n(rng)) * a, s2 = Scalar(n(rng)) + Scalar(n(rng)) * a;
        CHECK(act(shift(s2), act(shift(s1), h)) == act(shift(s1 + s2), h));
        CHECK(act(shift(0), h) == h);
    }
    const MPoly h = P("x0^3 + x0 + 2");
    CHECK(act(flip(), act(flip(), h)) == h);
    CHECK(act(shift(1).then(flip()), h) == act(shift(1), act(flip(), h)));
}
