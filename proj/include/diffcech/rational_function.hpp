#pragma once

// Exact arithmetic in Q[a] and its fraction field Q(a), where `a` is a formal
// transcendental standing in for the irrational parameter alpha.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace diffcech {

/// Univariate polynomial over Q in the symbol `a`, dense, low degree first.
/// The coefficient vector never has a trailing zero, so zero is the empty vector.
class RatPoly {
public:
    RatPoly() = default;
    RatPoly(long c) : RatPoly(mpq_class(c)) {}
    RatPoly(const mpq_class& c);
    explicit RatPoly(std::vector<mpq_class> coeffs);

    static RatPoly monomial(const mpq_class& c, std::size_t degree);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    /// Degree; -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    const mpq_class& leading() const { return coeffs_.back(); }
    mpq_class coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : mpq_class(0); }
    const std::vector<mpq_class>& coeffs() const noexcept { return coeffs_; }
    mpq_class constant_term() const { return coeff(0); }

    RatPoly operator-() const;
    RatPoly& operator+=(const RatPoly& o);
    RatPoly& operator-=(const RatPoly& o);
    RatPoly& operator*=(const RatPoly& o);
    RatPoly& operator*=(const mpq_class& c);

    friend RatPoly operator+(RatPoly x, const RatPoly& y) { return x += y; }
    friend RatPoly operator-(RatPoly x, const RatPoly& y) { return x -= y; }
    friend RatPoly operator*(RatPoly x, const RatPoly& y) { return x *= y; }
    friend bool operator==(const RatPoly& x, const RatPoly& y) { return x.coeffs_ == y.coeffs_; }

    /// Euclidean division; `divisor` must be nonzero.
    static std::pair<RatPoly, RatPoly> divmod(const RatPoly& dividend, const RatPoly& divisor);
    /// Monic gcd; gcd(0, 0) = 0.
    static RatPoly gcd(RatPoly x, RatPoly y);

    RatPoly monic() const;
    /// Coefficients scaled to coprime integers with the sign of the original.
    std::vector<mpz_class> primitive_integer_coeffs(mpq_class* scale = nullptr) const;

    /// Total order used only for deterministic sorting.
    friend bool operator<(const RatPoly& x, const RatPoly& y);

private:
    void trim();
    std::vector<mpq_class> coeffs_;
};

/// Element of Q(a) in canonical reduced form: the denominator is monic and
/// coprime to the numerator, and zero is 0/1. Equal values have identical
/// representations.
class Scalar {
public:
    Scalar() : den_(1) {}
    Scalar(long c) : num_(c), den_(1) {}
    Scalar(const mpz_class& c) : num_(mpq_class(c)), den_(1) {}
    Scalar(const mpq_class& c) : num_(c), den_(1) {}
    Scalar(RatPoly num) : num_(std::move(num)), den_(1) {}
    Scalar(RatPoly num, RatPoly den);

    /// The formal transcendental `a`.
    static Scalar alpha();

    const RatPoly& numerator() const noexcept { return num_; }
    const RatPoly& denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_rational() const noexcept { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const noexcept { return den_.is_constant(); }
    /// Only meaningful when is_rational().
    mpq_class to_rational() const { return num_.constant_term(); }
    bool is_integer() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    Scalar inverse() const;
    Scalar pow(long e) const;

    friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
    friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
    friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
    friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
    friend bool operator==(const Scalar& x, const Scalar& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator<(const Scalar& x, const Scalar& y);

    /// Exact fraction in `a`, e.g. "(2*a+1)/3", "a^2", "-1/2".
    std::string str() const;
    /// Parses any rational expression in `a` (see expr.hpp).
    static Scalar parse(const std::string& text);

private:
    void normalize();
    RatPoly num_;
    RatPoly den_;
};

/// Integer-coefficient rendering of a polynomial in `a` without spaces.
std::string format_integer_poly(const std::vector<mpz_class>& coeffs, const std::string& var = "a");

} // namespace diffcech
