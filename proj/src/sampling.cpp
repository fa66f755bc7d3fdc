#include "diffcech/sampling.hpp"

#include "diffcech/errors.hpp"

namespace diffcech {

namespace {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

std::uint64_t mix(std::uint64_t h, long v) {
    h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

Cochain times(const Cochain& c, long n) {
    std::vector<GroupElement> vals;
    for (const auto& v : c.values()) vals.push_back(v.times(n));
    return Cochain::nerve(c.presentation(), c.tag(), c.degree(), std::move(vals));
}

} // namespace

Scalar random_scalar(Rng& rng, bool with_alpha) {
    Scalar s(mpq_class(uniform(rng, -5, 5), uniform(rng, 1, 3)));
    if (with_alpha && uniform(rng, 0, 2) == 0) s += Scalar(uniform(rng, -3, 3)) * Scalar::alpha();
    return s;
}

GroupElement random_element(const GroupTag& tag, Rng& rng) {
    switch (tag.kind) {
    case GroupKind::Integers: return GroupElement::integer(tag, uniform(rng, -5, 5));
    case GroupKind::Cyclic: return GroupElement::integer(tag, uniform(rng, 0, tag.modulus - 1));
    case GroupKind::Rationals:
    case GroupKind::RationalsModIntegers:
        return GroupElement::rational(tag, mpq_class(uniform(rng, -5, 5), uniform(rng, 1, 6)));
    case GroupKind::Reals: return GroupElement::real(random_scalar(rng));
    case GroupKind::Product: {
        std::vector<GroupElement> parts;
        for (const auto& f : tag.factors) parts.push_back(random_element(f, rng));
        return GroupElement::tuple(tag, std::move(parts));
    }
    }
    throw TagError("unknown group");
}

MPoly random_polynomial(const FunctionClass& cls, Rng& rng) {
    ScalarVector v(cls.dimension());
    for (auto& x : v)
        if (uniform(rng, 0, 2) != 0) x = random_scalar(rng);
    return cls.element(v);
}

Cochain random_cochain(const PresentationPtr& p, const GroupTag& tag, int k, Rng& rng) {
    if (p->is_nerve()) {
        std::vector<GroupElement> vals;
        for (std::size_t i = 0; i < p->nerve().num_tuples(k); ++i) vals.push_back(random_element(tag, rng));
        return Cochain::nerve(p, tag, k, std::move(vals));
    }
    const GroupQuotient& q = p->quotient();
    const FunctionClass cls = q.function_class();
    if (k == 0) return Cochain::function(p, random_polynomial(cls, rng));
    if (q.finite()) {
        std::map<Kappas, MPoly> vals;
        for (const auto& ks : all_kappas(q, k)) vals[ks] = random_polynomial(cls, rng);
        return Cochain::table(p, k, std::move(vals));
    }
    if (k == 1) {
        std::vector<MPoly> gens;
        for (std::size_t i = 0; i < q.rank(); ++i) gens.push_back(random_polynomial(cls, rng));
        return Cochain::crossed(p, std::move(gens));
    }
    const std::uint64_t base = rng();
    return Cochain::lazy(p, k, [cls, base](const Kappas& ks) {
        std::uint64_t h = base;
        for (const auto& x : ks)
            for (long v : x) h = mix(h, v);
        Rng local(h);
        return random_polynomial(cls, local);
    });
}

Cochain random_cocycle(const PresentationPtr& p, const GroupTag& tag, int k, Rng& rng) {
    const CohomologyReport rep = cohomology(p, tag, k);
    Cochain out = Cochain::zero(p, tag, k);
    for (const auto& g : rep.generators) {
        if (tag.is_integral()) out = out + times(g, uniform(rng, -3, 3));
        else out = out + g.scaled(random_scalar(rng, tag.kind == GroupKind::Reals));
    }
    if (k > 0) {
        Cochain alpha = random_cochain(p, tag, k - 1, rng);
        if (!p->is_nerve()) {
            const GroupQuotient& q = p->quotient();
            if (!q.finite() && k == 1) alpha = Cochain::function(p, random_polynomial(q.function_class().raised(1), rng));
        }
        out = out + coboundary(alpha);
    }
    return out;
}

} // namespace diffcech

namespace diffcech {

bool vanishes(const Cochain& c, Rng& rng, int samples) {
    if (c.on_nerve()) {
        for (const auto& v : c.values())
            if (!v.is_zero()) return false;
        return true;
    }
    const GroupQuotient& q = c.presentation()->quotient();
    if (q.finite() || c.degree() == 0) return c == Cochain::zero(c.presentation(), c.tag(), c.degree());
    for (int s = 0; s < samples; ++s) {
        Kappas ks;
        for (int j = 0; j < c.degree(); ++j) {
            KElement e(q.rank());
            for (auto& v : e) v = std::uniform_int_distribution<long>(-3, 3)(rng);
            ks.push_back(q.reduce(e));
        }
        if (!c.component(ks).is_zero()) return false;
    }
    return true;
}

} // namespace diffcech
