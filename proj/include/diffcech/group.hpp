#pragma once

// Effective abelian coefficient groups with canonical representatives,
// homomorphisms between them, and short exact sequences with lifting oracles.

#include "diffcech/rational_function.hpp"

#include <gmpxx.h>

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace diffcech {

enum class GroupKind {
    Integers,             // "Z"
    Cyclic,               // "Z/m"
    Rationals,            // "Q"
    RationalsModIntegers, // "Q/Z"
    Reals,                // "R(alpha)": modelled by Q(a)
    Product,              // "prod[G1,G2,...]"
};

struct GroupTag {
    GroupKind kind = GroupKind::Integers;
    long modulus = 0;
    std::vector<GroupTag> factors;

    static GroupTag integers() { return {GroupKind::Integers, 0, {}}; }
    static GroupTag cyclic(long m);
    static GroupTag rationals() { return {GroupKind::Rationals, 0, {}}; }
    static GroupTag rationals_mod_integers() { return {GroupKind::RationalsModIntegers, 0, {}}; }
    static GroupTag reals() { return {GroupKind::Reals, 0, {}}; }
    static GroupTag product(std::vector<GroupTag> factors);

    /// Z or Z/m: cohomology by Smith normal form.
    bool is_integral() const { return kind == GroupKind::Integers || kind == GroupKind::Cyclic; }
    /// Q or R(alpha): cohomology by exact Gaussian elimination.
    bool is_field() const { return kind == GroupKind::Rationals || kind == GroupKind::Reals; }

    std::string str() const;
    static GroupTag parse(const std::string& text);

    friend bool operator==(const GroupTag&, const GroupTag&) = default;
};

class GroupElement {
public:
    using Payload = std::variant<mpz_class, mpq_class, Scalar, std::vector<GroupElement>>;

    static GroupElement zero(const GroupTag& tag);
    /// Z or Z/m (reduced into [0, m)).
    static GroupElement integer(const GroupTag& tag, const mpz_class& value);
    /// Q or Q/Z (reduced into [0, 1)).
    static GroupElement rational(const GroupTag& tag, const mpq_class& value);
    static GroupElement real(const Scalar& value);
    static GroupElement tuple(const GroupTag& tag, std::vector<GroupElement> parts);

    const GroupTag& tag() const noexcept { return tag_; }
    const Payload& payload() const noexcept { return value_; }

    /// Integer representative (Z, Z/m).
    const mpz_class& as_integer() const;
    /// Rational representative (Q, Q/Z).
    const mpq_class& as_rational() const;
    const Scalar& as_scalar() const;
    const std::vector<GroupElement>& as_tuple() const;

    bool is_zero() const;

    GroupElement operator-() const;
    GroupElement& operator+=(const GroupElement& o);
    GroupElement& operator-=(const GroupElement& o);
    friend GroupElement operator+(GroupElement x, const GroupElement& y) { return x += y; }
    friend GroupElement operator-(GroupElement x, const GroupElement& y) { return x -= y; }
    /// n-fold sum.
    GroupElement times(const mpz_class& n) const;

    friend bool operator==(const GroupElement& x, const GroupElement& y);

    std::string str() const;
    static GroupElement parse(const GroupTag& tag, const std::string& text);

private:
    GroupElement(GroupTag tag, Payload value) : tag_(std::move(tag)), value_(std::move(value)) {}
    GroupTag tag_;
    Payload value_;
};

enum class GroupOp { Add, Neg, Zero };

/// Uniform entry point for group arithmetic. `Zero` takes exactly one
/// argument and returns the zero of its group; `Neg` takes one; `Add` folds
/// any positive number of same-tagged arguments.
GroupElement group_arith(GroupOp op, std::span<const GroupElement> args);

/// A homomorphism of coefficient groups. `scalar_factor` is set when the map
/// is multiplication by a scalar of Q(a); only such maps can act on
/// function-valued cochains.
struct GroupHom {
    GroupTag source;
    GroupTag target;
    std::string name;
    std::function<GroupElement(const GroupElement&)> map;
    std::optional<Scalar> scalar_factor;

    GroupElement operator()(const GroupElement& x) const;

    static GroupHom identity(const GroupTag& tag);
    static GroupHom zero(const GroupTag& source, const GroupTag& target);
    /// x -> n*x on Z, Z/m, Q or R(alpha).
    static GroupHom multiply(const GroupTag& tag, long n);
    /// x -> n*x from Z/m into Z/(m*n).
    static GroupHom multiply_into(const GroupTag& source, const GroupTag& target, long n);
    /// Z -> Z/m or Z/(m*k) -> Z/m.
    static GroupHom reduction(const GroupTag& source, long m);
    /// Z -> Q, Z -> R(alpha), Q -> R(alpha).
    static GroupHom inclusion(const GroupTag& source, const GroupTag& target);
    /// Q -> Q/Z.
    static GroupHom fractional_part();
    /// Multiplication by a scalar on R(alpha).
    static GroupHom scale(const Scalar& factor);
};

/// 0 -> A -> B -> C -> 0 with a deterministic set-theoretic section of B -> C.
struct CoefficientSES {
    GroupTag a, b, c;
    GroupHom injection;
    GroupHom surjection;
    std::function<GroupElement(const GroupElement&)> lift_oracle;
    /// Inverse of the injection on its image; nullopt off the image.
    std::function<std::optional<GroupElement>(const GroupElement&)> preimage;
    std::string name;

    /// 0 -> Z -(x m)-> Z -> Z/m -> 0, lifting to the residue in [0, m).
    static CoefficientSES integers_mod(long m);
    /// 0 -> Z -> Q -> Q/Z -> 0, lifting to the representative in [0, 1).
    static CoefficientSES rationals_mod_integers();
    /// 0 -> Z/m -(x n)-> Z/(mn) -> Z/n -> 0.
    static CoefficientSES cyclic(long m, long n);
    /// "Z->Z->Z/2", "Z->Q->Q/Z", "Z/2->Z/4->Z/2".
    static CoefficientSES parse(const std::string& text);
};

/// b in B with surjection(b) = c.
GroupElement lift(const CoefficientSES& ses, const GroupElement& c);

} // namespace diffcech
