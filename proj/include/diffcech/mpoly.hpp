#pragma once

// Sparse multivariate polynomials in x0, x1, ... with coefficients in Q(a).

#include "diffcech/rational_function.hpp"

#include <map>
#include <string>
#include <vector>

namespace diffcech {

using Exponent = std::vector<int>;

/// Exponent vectors are compared after trimming trailing zeros, so x0 in one
/// variable and x0 in three variables are the same monomial.
struct ExponentLess {
    bool operator()(const Exponent& x, const Exponent& y) const;
};

class MPoly {
public:
    MPoly() = default;
    MPoly(const Scalar& c);

    static MPoly variable(int index);
    static MPoly monomial(const Scalar& c, Exponent e);

    bool is_zero() const noexcept { return terms_.empty(); }
    /// Total degree; -1 for zero.
    int degree() const;
    /// 1 + largest variable index that appears.
    int num_variables() const;
    bool is_constant() const { return degree() <= 0; }
    Scalar constant_value() const;
    Scalar coeff(const Exponent& e) const;

    const std::map<Exponent, Scalar, ExponentLess>& terms() const noexcept { return terms_; }

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o);
    MPoly& operator*=(const Scalar& c);
    MPoly pow(int e) const;

    friend MPoly operator+(MPoly x, const MPoly& y) { return x += y; }
    friend MPoly operator-(MPoly x, const MPoly& y) { return x -= y; }
    friend MPoly operator*(MPoly x, const MPoly& y) { return x *= y; }
    friend bool operator==(const MPoly& x, const MPoly& y) { return x.terms_ == y.terms_; }

    /// Substitutes x_i := images[i] for every variable.
    MPoly substitute(const std::vector<MPoly>& images) const;
    Scalar evaluate(const std::vector<Scalar>& point) const;

    /// "x0^2 + (2*a)*x0 + a^2": highest total degree first.
    std::string str() const;

private:
    static Exponent canonical(Exponent e);
    void add_term(const Exponent& e, const Scalar& c);
    std::map<Exponent, Scalar, ExponentLess> terms_;
};

/// Graded order: higher total degree first, then lexicographically larger exponent first.
bool graded_before(const Exponent& x, const Exponent& y);

} // namespace diffcech
