#include "diffcech/bundle.hpp"

#include "diffcech/errors.hpp"
#include "diffcech/sampling.hpp"

namespace diffcech {

namespace {

GroupElement value_at(const Cochain& alpha, const BundlePoint& p) {
    if (alpha.on_nerve()) return alpha.value({p.chart});
    return GroupElement::real(alpha.component({}).evaluate(p.y));
}

KElement arrow(const GroupQuotient& q, const BundlePoint& p, const BundlePoint& r) {
    auto ks = q.connecting_elements(p.y, r.y);
    if (ks.empty()) throw FiberError("points lie over different orbits");
    return ks.front();
}

} // namespace

BundlePresentation::BundlePresentation(Cochain f, std::uint64_t seed) : f_(std::move(f)) {
    if (f_.degree() != 1) throw DegreeError("a bundle is defined by a degree-1 cocycle");
    if (auto chk = is_cocycle(f_, seed); !chk) throw CocycleError("not a cocycle: ∂f is nonzero at " + chk.counterexample);
}

BundlePoint BundlePresentation::tau0_nerve(int chart, std::size_t site) const {
    const FiniteNerve& n = base()->nerve();
    const auto& carrier = n.site_carrier(site);
    if (std::find(carrier.begin(), carrier.end(), chart) == carrier.end())
        throw FiberError("site " + std::to_string(site) + " is not in chart " + std::to_string(chart));
    return {chart, site, {}, GroupElement::zero(group())};
}

BundlePoint BundlePresentation::tau0_quotient(const ScalarVector& y) const {
    if (y.size() != static_cast<std::size_t>(base()->quotient().dim())) throw ClassError("point has the wrong dimension");
    return {-1, 0, y, GroupElement::zero(group())};
}

BundlePoint BundlePresentation::act(const BundlePoint& p, const GroupElement& g) const {
    BundlePoint out = p;
    out.g += g;
    return out;
}

bool BundlePresentation::same_fiber(const BundlePoint& p, const BundlePoint& q) const {
    if (base()->is_nerve()) return p.site == q.site;
    return !base()->quotient().connecting_elements(p.y, q.y).empty();
}

GroupElement BundlePresentation::transition(const BundlePoint& p, const BundlePoint& q) const {
    if (!same_fiber(p, q)) throw FiberError("points lie over different base points");
    if (base()->is_nerve()) return f_.value({p.chart, q.chart});
    const KElement k = arrow(base()->quotient(), p, q);
    return GroupElement::real(f_.component({k}).evaluate(p.y));
}

bool BundlePresentation::equal(const BundlePoint& p, const BundlePoint& q) const {
    return same_fiber(p, q) && division(*this, p, q).is_zero();
}

BundlePresentation bundle_from_cocycle(const Cochain& f) { return BundlePresentation(f); }

GroupElement division(const BundlePresentation& b, const BundlePoint& p1, const BundlePoint& p2) {
    return b.transition(p1, p2) + p2.g - p1.g;
}

Cochain cocycle_from_bundle(const BundlePresentation& b, const std::optional<Cochain>& alpha) {
    const PresentationPtr& p = b.base();
    const Cochain& f = b.cocycle();
    if (alpha) {
        if (alpha->degree() != 0) throw DegreeError("a trivialization shift is a 0-cochain");
        if (!(alpha->tag() == b.group())) throw TagError("shift is valued in " + alpha->tag().str());
    }
    if (p->is_nerve()) {
        const FiniteNerve& n = p->nerve();
        std::vector<GroupElement> vals;
        for (const auto& t : n.tuples(1)) {
            // a site seen by both charts
            std::size_t site = 0;
            for (; site < n.num_sites(); ++site) {
                const auto& c = n.site_carrier(site);
                if (std::find(c.begin(), c.end(), t[0]) != c.end() && std::find(c.begin(), c.end(), t[1]) != c.end()) break;
            }
            BundlePoint x = b.tau0_nerve(t[0], site), y = b.tau0_nerve(t[1], site);
            if (alpha) {
                x.g = value_at(*alpha, x);
                y.g = value_at(*alpha, y);
            }
            vals.push_back(division(b, x, y));
        }
        return Cochain::nerve(p, b.group(), 1, std::move(vals));
    }
    // c(tau_alpha)(y, y.k) = f(y, y.k) + alpha(y.k) - alpha(y), as functions of y.
    const GroupQuotient& q = p->quotient();
    const MPoly a = alpha ? alpha->component({}) : MPoly();
    if (alpha) {
        const FunctionClass cls = q.function_class();
        if (!cls.raised(q.finite() ? 0 : 1).contains(a)) throw ClassError("shift lies outside the function class");
    }
    auto shifted = [&q, f, a](const Kappas& ks) { return f.component(ks) + act(q.action(ks[0]), a) - a; };
    if (q.finite()) {
        std::map<Kappas, MPoly> vals;
        for (const auto& ks : all_kappas(q, 1)) vals[ks] = shifted(ks);
        return Cochain::table(p, 1, std::move(vals));
    }
    std::vector<MPoly> gens;
    for (std::size_t i = 0; i < q.rank(); ++i) gens.push_back(shifted({q.generator(i)}));
    return Cochain::crossed(p, std::move(gens));
}

Trivialization is_trivializable(const BundlePresentation& b) {
    Trivialization out;
    const Cochain zero = Cochain::zero(b.base(), b.group(), 1);
    ClassComparison cmp = classes_equal(b.cocycle(), zero);
    out.trivial = cmp.equal;
    if (cmp.equal) {
        out.witness = cmp.witness;
        out.certificate = "global section y -> [y, alpha(y)] with ∂alpha = -f";
        return out;
    }
    if (b.base()->is_quotient())
        out.certificate = "nontrivial in class D=" + std::to_string(b.base()->quotient().function_class_degree());
    else
        out.certificate = "nontrivial: " + cmp.certificate;
    return out;
}

BundlePoint section_point(const BundlePresentation& b, const Cochain& alpha, const BundlePoint& base_point) {
    BundlePoint out = base_point;
    out.g = value_at(alpha, base_point);
    if (!(out.g.tag() == b.group())) throw TagError("section is valued in " + out.g.tag().str());
    return out;
}

BundlePresentation pullback_bundle(const PresentationMorphism& m, const BundlePresentation& b) {
    return BundlePresentation(pullback_cochain(m, b.cocycle()));
}

BundleIsomorphism isomorphic(const BundlePresentation& b1, const BundlePresentation& b2) {
    if (!(b1.group() == b2.group())) throw TagError("bundles have different structure groups");
    ClassComparison cmp = classes_equal(b1.cocycle(), b2.cocycle());
    BundleIsomorphism out;
    out.isomorphic = cmp.equal;
    out.alpha = cmp.witness;
    out.certificate = cmp.certificate;
    return out;
}

BundlePoint apply_isomorphism(const BundleIsomorphism& iso, const BundlePoint& p) {
    if (!iso.alpha) throw Error("no isomorphism to apply");
    BundlePoint out = p;
    out.g -= value_at(*iso.alpha, p);
    return out;
}

std::pair<BundlePoint, BundlePoint> random_fiber_pair(const BundlePresentation& b, std::uint64_t seed) {
    Rng rng(seed);
    auto pick = [&rng](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
    BundlePoint p, r;
    if (b.base()->is_nerve()) {
        const FiniteNerve& n = b.base()->nerve();
        const std::size_t site = pick(n.num_sites());
        const auto& carrier = n.site_carrier(site);
        p = b.tau0_nerve(carrier[pick(carrier.size())], site);
        r = b.tau0_nerve(carrier[pick(carrier.size())], site);
    } else {
        const GroupQuotient& q = b.base()->quotient();
        ScalarVector y(static_cast<std::size_t>(q.dim()));
        for (auto& v : y) v = random_scalar(rng, false);
        KElement k(q.rank());
        for (auto& v : k) v = std::uniform_int_distribution<long>(-3, 3)(rng);
        p = b.tau0_quotient(y);
        r = b.tau0_quotient(q.act_point(y, q.reduce(k)));
    }
    p.g = random_element(b.group(), rng);
    r.g = random_element(b.group(), rng);
    return {p, r};
}

} // namespace diffcech
