#include "diffcech/cech.hpp"

#include "diffcech/errors.hpp"

#include <random>

namespace diffcech {

namespace {

/// ∂c at (k_1, ..., k_{k+1}) as a function of y.
MPoly quotient_coboundary_component(const GroupQuotient& q, const Cochain& c, const Kappas& ks) {
    Kappas shifted;
    for (std::size_t j = 1; j < ks.size(); ++j) shifted.push_back(q.sub(ks[j], ks[0]));
    MPoly out = act(q.action(ks[0]), c.component(shifted));
    for (std::size_t i = 1; i <= ks.size(); ++i) {
        Kappas dropped = ks;
        dropped.erase(dropped.begin() + static_cast<long>(i - 1));
        if (i % 2) out -= c.component(dropped);
        else out += c.component(dropped);
    }
    return out;
}

bool same_presentation(const PresentationPtr& a, const PresentationPtr& b) { return a == b || *a == *b; }

} // namespace

Cochain coboundary(const Cochain& c) {
    const int k = c.degree();
    const PresentationPtr& p = c.presentation();
    if (p->is_nerve()) {
        const FiniteNerve& n = p->nerve();
        const std::size_t count = n.num_tuples(k + 1);
        const auto& vals = c.values();
        std::vector<GroupElement> out;
        out.reserve(count);
        for (std::size_t idx = 0; idx < count; ++idx) {
            GroupElement acc = GroupElement::zero(c.tag());
            for (int i = 0; i <= k + 1; ++i) {
                const GroupElement& v = vals[n.face_index(k + 1, idx, i)];
                if (i % 2) acc -= v;
                else acc += v;
            }
            out.push_back(std::move(acc));
        }
        return Cochain::nerve(p, c.tag(), k + 1, std::move(out));
    }
    const GroupQuotient& q = p->quotient();
    if (q.finite()) {
        std::map<Kappas, MPoly> vals;
        for (const auto& ks : all_kappas(q, k + 1)) vals[ks] = quotient_coboundary_component(q, c, ks);
        return Cochain::table(p, k + 1, std::move(vals));
    }
    if (k == 0) {
        const MPoly h = c.component({});
        std::vector<MPoly> gens;
        for (std::size_t i = 0; i < q.rank(); ++i) gens.push_back(act(q.generators()[i].map, h) - h);
        return Cochain::crossed(p, std::move(gens));
    }
    return Cochain::lazy(p, k + 1, [c](const Kappas& ks) {
        return quotient_coboundary_component(c.presentation()->quotient(), c, ks);
    });
}

CocycleCheck is_cocycle(const Cochain& c, std::uint64_t seed, int probes) {
    const PresentationPtr& p = c.presentation();
    CocycleCheck out;
    if (p->is_nerve()) {
        const Cochain d = coboundary(c);
        const auto& ts = p->nerve().tuples_unchecked(c.degree() + 1);
        for (std::size_t i = 0; i < ts.size(); ++i)
            if (!d.values()[i].is_zero()) {
                out.ok = false;
                out.counterexample = tuple_str(ts[i]);
                return out;
            }
        return out;
    }
    const GroupQuotient& q = p->quotient();
    const int k = c.degree();
    auto check = [&](const Kappas& ks) {
        if (!quotient_coboundary_component(q, c, ks).is_zero()) {
            out.ok = false;
            out.counterexample = kappas_str(ks);
            return false;
        }
        return true;
    };
    if (q.finite()) {
        for (const auto& ks : all_kappas(q, k + 1))
            if (!check(ks)) return out;
        return out;
    }
    if (k > 2) throw DegreeError("cocycle test beyond degree 2 needs a finite K");
    const std::size_t r = q.rank();
    std::vector<Kappas> symbolic;
    if (k == 0) {
        for (std::size_t i = 0; i < r; ++i) symbolic.push_back({q.generator(i)});
    } else if (k == 1) {
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = i + 1; j < r; ++j)
                symbolic.push_back({q.generator(j), q.add(q.generator(i), q.generator(j))});
            if (q.generators()[i].torsion > 0) symbolic.push_back({q.generator(i), q.zero()});
        }
    } else {
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = 0; b < r; ++b)
                for (std::size_t e = 0; e < r; ++e) {
                    KElement x = q.generator(a), y = q.add(x, q.generator(b));
                    symbolic.push_back({x, y, q.add(y, q.generator(e))});
                }
    }
    for (const auto& ks : symbolic)
        if (!check(ks)) return out;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coord(-3, 3);
    for (int t = 0; t < probes && k > 0; ++t) {
        Kappas ks;
        for (int j = 0; j <= k; ++j) {
            KElement e(r);
            for (auto& v : e) v = coord(rng);
            ks.push_back(q.reduce(e));
        }
        if (!check(ks)) return out;
    }
    return out;
}

Cochain pullback_cochain(const PresentationMorphism& m, const Cochain& c) {
    if (!same_presentation(m.target(), c.presentation()))
        throw CompatibilityError("cochain does not live on the target of the morphism");
    const PresentationPtr& src = m.source();
    const int k = c.degree();
    if (src->is_nerve()) {
        const FiniteNerve& n = src->nerve();
        const auto& ts = n.tuples_unchecked(k);
        std::vector<GroupElement> vals;
        vals.reserve(ts.size());
        for (const auto& t : ts) vals.push_back(c.value(m.map_tuple(t)));
        return Cochain::nerve(src, c.tag(), k, std::move(vals));
    }
    const GroupQuotient& s = src->quotient();
    const AffineMap phi = m.domain_map();
    if (k > s.k_max() + 1) throw DegreeError("degree unsupported on the source presentation");
    if (k == 0) return Cochain::function(src, act(phi, c.component({})));
    auto mapped = [m, c, phi](const Kappas& ks) {
        Kappas image;
        for (const auto& x : ks) image.push_back(m.map_element(x));
        return act(phi, c.component(image));
    };
    if (s.finite()) {
        std::map<Kappas, MPoly> vals;
        for (const auto& ks : all_kappas(s, k)) vals[ks] = mapped(ks);
        return Cochain::table(src, k, std::move(vals));
    }
    if (k == 1 && std::holds_alternative<CrossedData>(c.payload())) {
        std::vector<MPoly> gens;
        for (std::size_t i = 0; i < s.rank(); ++i) gens.push_back(mapped({s.generator(i)}));
        return Cochain::crossed(src, std::move(gens));
    }
    return Cochain::lazy(src, k, mapped);
}

Cochain push_coefficients(const GroupHom& h, const Cochain& c) {
    if (!(c.tag() == h.source)) throw TagError("homomorphism source " + h.source.str() + " does not match " + c.tag().str());
    if (c.on_nerve()) {
        std::vector<GroupElement> vals;
        vals.reserve(c.values().size());
        for (const auto& v : c.values()) vals.push_back(h(v));
        return Cochain::nerve(c.presentation(), h.target, c.degree(), std::move(vals));
    }
    if (!h.scalar_factor || h.target.kind != GroupKind::Reals)
        throw UnsupportedError("only scalar multiples act on function-valued cochains");
    return c.scaled(*h.scalar_factor);
}

Cochain connecting_map(const CoefficientSES& ses, const Cochain& c,
                       const std::function<GroupElement(const GroupElement&)>& lift_fn) {
    if (!c.on_nerve()) throw UnsupportedError("connecting maps are computed on nerves");
    if (!(c.tag() == ses.c)) throw TagError("cochain is tagged " + c.tag().str() + ", sequence expects " + ses.c.str());
    if (auto chk = is_cocycle(c); !chk)
        throw CocycleError("connecting map needs a cocycle; ∂c is nonzero at " + chk.counterexample);
    std::vector<GroupElement> lifted;
    lifted.reserve(c.values().size());
    for (const auto& v : c.values()) {
        GroupElement b = lift_fn ? lift_fn(v) : lift(ses, v);
        if (!(ses.surjection(b) == v)) throw Error("lifting oracle is not a section of the surjection");
        lifted.push_back(std::move(b));
    }
    const Cochain db = coboundary(Cochain::nerve(c.presentation(), ses.b, c.degree(), std::move(lifted)));
    std::vector<GroupElement> out;
    out.reserve(db.values().size());
    for (const auto& v : db.values()) {
        auto a = ses.preimage(v);
        if (!a) throw Error("coboundary of the lift leaves the image of " + ses.a.str());
        out.push_back(std::move(*a));
    }
    return Cochain::nerve(c.presentation(), ses.a, c.degree() + 1, std::move(out));
}

} // namespace diffcech
