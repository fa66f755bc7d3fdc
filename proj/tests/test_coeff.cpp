#include "diffcech/errors.hpp"
#include "diffcech/group.hpp"
#include "diffcech/linalg.hpp"
#include "diffcech/sampling.hpp"
#include "diffcech/smith.hpp"

#include <doctest.h>

#include <array>

using namespace diffcech;

namespace {

GroupElement arith(GroupOp op, std::initializer_list<GroupElement> xs) {
    std::vector<GroupElement> v(xs);
    return group_arith(op, v);
}

const Scalar a = Scalar::alpha();

IntMatrix int_matrix(std::vector<std::vector<long>> rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

mpz_class det(IntMatrix m) {
    // Bareiss
    const std::size_t n = m.rows();
    mpz_class prev = 1, sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t s = k + 1;
            while (s < n && m(s, k) == 0) ++s;
            if (s == n) return 0;
            m.swap_rows(k, s);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return n == 0 ? mpz_class(1) : sign * m(n - 1, n - 1);
}

void check_smith(const IntMatrix& M) {
    SmithForm s = smith_normal_form(M);
    CHECK(s.U * M * s.V == s.D);
    CHECK(s.U * s.U_inv == IntMatrix::identity(M.rows()));
    CHECK(s.V * s.V_inv == IntMatrix::identity(M.cols()));
    CHECK(abs(det(s.U)) == 1);
    CHECK(abs(det(s.V)) == 1);
    for (std::size_t i = 0; i < s.D.rows(); ++i)
        for (std::size_t j = 0; j < s.D.cols(); ++j)
            if (i != j) CHECK(s.D(i, j) == 0);
    for (std::size_t i = 0; i + 1 < s.rank; ++i) CHECK(s.invariant_factors[i + 1] % s.invariant_factors[i] == 0);
    for (auto& d : s.invariant_factors) CHECK(d > 0);
}

} // namespace

TEST_CASE("group_arith examples") {
    const GroupTag z3 = GroupTag::cyclic(3), qz = GroupTag::rationals_mod_integers();
    CHECK(arith(GroupOp::Add, {GroupElement::integer(z3, 2), GroupElement::integer(z3, 2)}) == GroupElement::integer(z3, 1));
    CHECK(arith(GroupOp::Add, {GroupElement::real(Scalar(1) + a), GroupElement::real(Scalar(2) - a)}) ==
          GroupElement::real(Scalar(3)));
    CHECK(arith(GroupOp::Neg, {GroupElement::rational(qz, mpq_class(1, 3))}) == GroupElement::rational(qz, mpq_class(2, 3)));
    CHECK(arith(GroupOp::Zero, {GroupElement::integer(z3, 2)}).is_zero());
    CHECK_THROWS_AS(arith(GroupOp::Add, {GroupElement::integer(z3, 1), GroupElement::integer(GroupTag::integers(), 1)}),
                    TagError);
}

TEST_CASE("canonical representatives") {
    CHECK(GroupElement::integer(GroupTag::cyclic(5), -1).as_integer() == 4);
    CHECK(GroupElement::rational(GroupTag::rationals_mod_integers(), mpq_class(-1, 4)).as_rational() == mpq_class(3, 4));
    CHECK(GroupElement::parse(GroupTag::reals(), "(a^2 - 1)/(a - 1)") == GroupElement::real(a + Scalar(1)));
    CHECK(GroupTag::parse("prod[Z,Z/2]").str() == "prod[Z,Z/2]");
    CHECK_THROWS_AS(GroupTag::parse("Z/0"), ParseError);
}

TEST_CASE("abelian group axioms on random elements") {
    Rng rng(7);
    for (const auto& text : {"Z", "Z/6", "Q", "Q/Z", "R", "prod[Z/2,Q/Z]"}) {
        const GroupTag tag = GroupTag::parse(text);
        for (int t = 0; t < 200; ++t) {
            GroupElement x = random_element(tag, rng), y = random_element(tag, rng), z = random_element(tag, rng);
            CHECK((x + y) + z == x + (y + z));
            CHECK(x + y == y + x);
            CHECK(x + GroupElement::zero(tag) == x);
            CHECK((x + (-x)).is_zero());
        }
    }
}

TEST_CASE("scalar field is exact and canonical") {
    Rng rng(11);
    for (int t = 0; t < 200; ++t) {
        Scalar x = random_scalar(rng), y = random_scalar(rng);
        if (y.is_zero()) continue;
        CHECK((x / y) * y == x);
        CHECK(Scalar::parse((x + y).str()) == x + y);
    }
    CHECK((a * a - Scalar(1)) / (a - Scalar(1)) == a + Scalar(1));
    CHECK((Scalar(1) / a).str() == Scalar::parse("1/a").str());
}

TEST_CASE("lifting oracles") {
    const auto s2 = CoefficientSES::integers_mod(2);
    CHECK(lift(s2, GroupElement::integer(GroupTag::cyclic(2), 1)) == GroupElement::integer(GroupTag::integers(), 1));
    CHECK(lift(s2, GroupElement::zero(GroupTag::cyclic(2))).is_zero());
    const auto qz = CoefficientSES::rationals_mod_integers();
    CHECK(lift(qz, GroupElement::rational(GroupTag::rationals_mod_integers(), mpq_class(2, 3))) ==
          GroupElement::rational(GroupTag::rationals(), mpq_class(2, 3)));

    Rng rng(3);
    for (const auto& text : {"Z->Z->Z/2", "Z->Z->Z/5", "Z->Q->Q/Z", "Z/2->Z/4->Z/2", "Z/3->Z/9->Z/3"}) {
        const auto ses = CoefficientSES::parse(text);
        for (int t = 0; t < 1000; ++t) {
            const GroupElement c = random_element(ses.c, rng);
            CHECK(ses.surjection(lift(ses, c)) == c);
            const GroupElement x = random_element(ses.a, rng);
            CHECK(ses.surjection(ses.injection(x)).is_zero());
            CHECK(*ses.preimage(ses.injection(x)) == x);
        }
    }
    CHECK_THROWS_AS(CoefficientSES::parse("Z->Z"), ParseError);
}

TEST_CASE("smith normal form examples") {
    CHECK(smith_normal_form(int_matrix({{1, 0}, {0, 1}})).invariant_factors == std::vector<mpz_class>{1, 1});
    auto zero = smith_normal_form(int_matrix({{0}}));
    CHECK(zero.rank == 0);
    CHECK(zero.D(0, 0) == 0);
    CHECK(smith_normal_form(int_matrix({{2, 4}, {6, 8}})).invariant_factors == std::vector<mpz_class>{2, 4});
    check_smith(int_matrix({{2, 4}, {6, 8}}));
    check_smith(IntMatrix(0, 3));
    check_smith(IntMatrix(2, 0));
}

TEST_CASE("smith normal form properties on random matrices") {
    Rng rng(5);
    std::uniform_int_distribution<long> entry(-6, 6), size(1, 6);
    for (int t = 0; t < 150; ++t) {
        const std::size_t r = static_cast<std::size_t>(size(rng)), c = static_cast<std::size_t>(size(rng));
        IntMatrix M(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) M(i, j) = rng() % 3 ? entry(rng) : 0;
        check_smith(M);
        // permutation invariance of D
        IntMatrix P = M;
        P.swap_rows(0, r - 1);
        P.swap_cols(0, c - 1);
        CHECK(smith_normal_form(P, {false, false}).invariant_factors == smith_normal_form(M, {false, false}).invariant_factors);
    }
}

TEST_CASE("smith normal form falls back to big integers") {
    IntMatrix M(2, 2);
    M(0, 0) = mpz_class("123456789012345678901234567890");
    M(0, 1) = mpz_class("987654321098765432109876543210");
    M(1, 0) = 3;
    M(1, 1) = 7;
    check_smith(M);
}

TEST_CASE("finitely generated abelian invariants and exactness") {
    FGAbelian g{{2, 3, 0}};
    auto inv = abelian_invariants(g);
    CHECK(inv.free_rank == 1);
    CHECK(inv.torsion == std::vector<mpz_class>{6});
    // 0 -> Z -(x2)-> Z -> Z/2 -> 0
    FGAbelian zero{{}}, z{{0}}, z2{{2}};
    IntMatrix to_z(1, 0), times2 = int_matrix({{2}}), red = int_matrix({{1}}), to_zero(0, 1);
    CHECK(is_exact_at(zero, to_z, z, times2, z));
    CHECK(is_exact_at(z, times2, z, red, z2));
    CHECK(is_exact_at(z, red, z2, to_zero, zero));
    CHECK_FALSE(is_exact_at(zero, to_z, z, int_matrix({{0}}), z));
}

TEST_CASE("exact linear algebra over Q(a)") {
    ScalarMatrix M(2, 3);
    M(0, 0) = Scalar(1);
    M(0, 1) = a;
    M(1, 1) = Scalar(1);
    M(1, 2) = a * a;
    CHECK(rank(M) == 2);
    ScalarMatrix K = kernel(M);
    CHECK(K.cols() == 1);
    for (const auto& v : M.apply(K.col(0))) CHECK(v.is_zero());
    auto sol = solve(M, {Scalar(1), Scalar(2)});
    REQUIRE(sol);
    CHECK(M.apply(*sol) == ScalarVector{Scalar(1), Scalar(2)});
    ScalarMatrix S(2, 1);
    S(0, 0) = Scalar(1);
    S(1, 0) = Scalar(1);
    CHECK_FALSE(solve(S, {Scalar(1), Scalar(2)}));
}
