#include "diffcech/average.hpp"

#include "diffcech/errors.hpp"

namespace diffcech {

namespace {

const GroupQuotient& finite_quotient(const PresentationPtr& p) {
    if (!p->is_quotient()) throw CompatibilityError("averaging needs a group-quotient presentation");
    const GroupQuotient& q = p->quotient();
    if (!q.finite()) throw UnsupportedError("averaging needs a finite group K");
    return q;
}

} // namespace

MPoly haar_average_function(const PresentationPtr& p, const MPoly& h) {
    const GroupQuotient& q = finite_quotient(p);
    if (!q.function_class().contains(h)) throw ClassError("function lies outside " + q.function_class().str());
    MPoly sum;
    for (const auto& k : q.elements()) sum += act(q.action(k), h);
    sum *= Scalar(mpq_class(1, static_cast<long>(q.order())));
    return sum;
}

GroupElement haar_average(const PresentationPtr& p, const ScalarVector& u, const MPoly& h) {
    return GroupElement::real(haar_average_function(p, h).evaluate(u));
}

Homotopy trivializing_homotopy(const Cochain& f) {
    const PresentationPtr& p = f.presentation();
    const GroupQuotient& q = finite_quotient(p);
    if (f.tag().kind != GroupKind::Reals) throw TagError("averaging needs coefficients in R(alpha)");
    const int k = f.degree();
    if (k < 1) throw DegreeError("the homotopy is defined in degrees k >= 1");
    if (auto chk = is_cocycle(f); !chk) throw CocycleError("not a cocycle: ∂f is nonzero at " + chk.counterexample);

    const Scalar weight(mpq_class(1, static_cast<long>(q.order())));
    auto averaged = [&](const Kappas& head) {
        MPoly sum;
        for (const auto& gamma : q.elements()) {
            Kappas ks = head;
            ks.push_back(gamma);
            sum += f.component(ks);
        }
        sum *= weight;
        return sum;
    };
    Homotopy out{Cochain::zero(p, f.tag(), k - 1), false};
    if (k == 1) {
        out.g = Cochain::function(p, averaged({}));
    } else {
        std::map<Kappas, MPoly> vals;
        for (const auto& head : all_kappas(q, k - 1)) vals[head] = averaged(head);
        out.g = Cochain::table(p, k - 1, std::move(vals));
    }
    const Cochain expected = k % 2 ? -f : f;
    out.verified = coboundary(out.g) == expected;
    return out;
}

} // namespace diffcech
