#pragma once

// Čech cochains on finite presentations.
//
// Nerve cochains hold one group element per alive tuple. Quotient cochains
// are R-model valued: a degree-k cochain is a map (k_1, ..., k_k) -> function
// of y, evaluated at the point (y; k_1, ..., k_k) of N(Q)_k.

#include "diffcech/group.hpp"
#include "diffcech/presentation.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <variant>

namespace diffcech {

using Kappas = std::vector<KElement>;

/// Values of a crossed extension already computed, keyed by reduced element.
struct CrossedMemo {
    std::mutex mutex;
    std::map<KElement, MPoly> values;
};

/// Degree-1 data stored by generator values, extended by the crossed law.
struct CrossedData {
    std::vector<MPoly> values;
    std::shared_ptr<CrossedMemo> memo = std::make_shared<CrossedMemo>();
};
/// Every component listed (finite K).
struct TableData {
    std::map<Kappas, MPoly> values;
};
struct LazyData {
    std::function<MPoly(const Kappas&)> eval;
};

class Cochain {
public:
    using QuotientPayload = std::variant<MPoly, CrossedData, TableData, LazyData>;

    /// Values listed in the order of nerve.tuples_unchecked(k).
    static Cochain nerve(PresentationPtr p, GroupTag tag, int k, std::vector<GroupElement> values);
    static Cochain zero(PresentationPtr p, GroupTag tag, int k);
    static Cochain function(PresentationPtr p, MPoly h);
    static Cochain crossed(PresentationPtr p, std::vector<MPoly> generator_values);
    static Cochain table(PresentationPtr p, int k, std::map<Kappas, MPoly> values);
    static Cochain lazy(PresentationPtr p, int k, std::function<MPoly(const Kappas&)> eval);

    const PresentationPtr& presentation() const noexcept { return pres_; }
    int degree() const noexcept { return degree_; }
    const GroupTag& tag() const noexcept { return tag_; }
    bool on_nerve() const { return pres_->is_nerve(); }

    // Nerve side.
    const std::vector<GroupElement>& values() const;
    /// Value on any alive tuple; alternating cochains use the sign rule and vanish on repeats.
    GroupElement value(const Tuple& t) const;

    // Quotient side.
    const QuotientPayload& payload() const;
    /// The function y -> c(y; kappas).
    MPoly component(const Kappas& kappas) const;
    Scalar evaluate(const QuotientPoint& x) const;
    bool is_lazy() const;

    Cochain operator-() const;
    friend Cochain operator+(const Cochain& x, const Cochain& y);
    friend Cochain operator-(const Cochain& x, const Cochain& y) { return x + (-y); }
    Cochain scaled(const Scalar& s) const;

    /// Exact for nerves, finite K, degree 0 and generator-stored degree 1; lazy
    /// quotient cochains are compared on the box [-2, 2]^r of K.
    friend bool operator==(const Cochain& x, const Cochain& y);

private:
    Cochain(PresentationPtr p, GroupTag tag, int k) : pres_(std::move(p)), tag_(std::move(tag)), degree_(k) {}
    PresentationPtr pres_;
    GroupTag tag_;
    int degree_;
    std::vector<GroupElement> values_;
    std::shared_ptr<const QuotientPayload> payload_;
};

/// kappa(k) for a crossed homomorphism given by generator values.
MPoly crossed_extend(const GroupQuotient& q, const std::vector<MPoly>& generator_values, const KElement& k,
                     CrossedMemo* memo = nullptr);

/// Every tuple (k_1, ..., k_k) of a finite K, lexicographically.
std::vector<Kappas> all_kappas(const GroupQuotient& q, int k);

/// Test tuples for infinite K: all tuples with entries in [-radius, radius].
std::vector<Kappas> box_kappas(const GroupQuotient& q, int k, long radius);

std::string kappas_str(const Kappas& ks);
std::string tuple_str(const Tuple& t);

} // namespace diffcech
