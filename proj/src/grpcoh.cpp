#include "diffcech/grpcoh.hpp"

#include "diffcech/errors.hpp"

namespace diffcech {

namespace {

const GroupQuotient& quotient_of(const PresentationPtr& p) {
    if (!p->is_quotient()) throw CompatibilityError("crossed homomorphisms live on group-quotient presentations");
    return p->quotient();
}

ScalarVector stacked(const FunctionClass& cls, const std::vector<MPoly>& polys) {
    ScalarVector v;
    for (const auto& h : polys) {
        auto c = cls.coordinates(h);
        v.insert(v.end(), c.begin(), c.end());
    }
    return v;
}

std::vector<MPoly> unstacked(const FunctionClass& cls, const ScalarVector& v, std::size_t r) {
    const std::size_t d = cls.dimension();
    std::vector<MPoly> out;
    for (std::size_t i = 0; i < r; ++i)
        out.push_back(cls.element(ScalarVector(v.begin() + static_cast<long>(i * d), v.begin() + static_cast<long>((i + 1) * d))));
    return out;
}

/// Defects of the compatibility and torsion conditions; all zero iff beta is a crossed homomorphism.
std::vector<MPoly> defects(const GroupQuotient& q, const std::vector<MPoly>& beta) {
    std::vector<MPoly> out;
    const std::size_t r = q.rank();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) {
            const AffineMap& gi = q.generators()[i].map;
            const AffineMap& gj = q.generators()[j].map;
            out.push_back(beta[i] + act(gi, beta[j]) - beta[j] - act(gj, beta[i]));
        }
    for (std::size_t i = 0; i < r; ++i) {
        const long m = q.generators()[i].torsion;
        if (m == 0) continue;
        MPoly sum;
        KElement cur = q.zero();
        for (long t = 0; t < m; ++t) {
            sum += act(q.action(cur), beta[i]);
            cur = q.add(cur, q.generator(i));
        }
        out.push_back(sum);
    }
    return out;
}

/// Principal crossed homomorphisms: potentials in P_{D+1} whose differences land in P_D.
struct Principal {
    ScalarMatrix image; // columns: generator values in P_D coordinates
    ScalarMatrix potentials; // columns: potentials in P_{D+1} coordinates
};

Principal principal_space(const GroupQuotient& q) {
    const FunctionClass P = q.function_class(), P1 = P.raised(1);
    const std::size_t d = P.dimension(), d1 = P1.dimension(), r = q.rank();
    ScalarMatrix low(r * d, d1), top(r * (d1 - d), d1);
    for (std::size_t j = 0; j < d1; ++j) {
        const MPoly h = P1.basis_element(j);
        for (std::size_t i = 0; i < r; ++i) {
            const ScalarVector c = P1.coordinates(act(q.generators()[i].map, h) - h);
            for (std::size_t t = 0; t < d1; ++t) {
                if (t < d) low(i * d + t, j) = c[t];
                else top(i * (d1 - d) + t - d, j) = c[t];
            }
        }
    }
    Principal out;
    out.potentials = kernel(top);
    out.image = low * out.potentials;
    return out;
}

} // namespace

CrossedHom::CrossedHom(PresentationPtr p, std::vector<MPoly> generator_values)
    : p_(std::move(p)), values_(std::move(generator_values)) {
    if (values_.size() != quotient_of(p_).rank()) throw ValidationError("one value per generator of K is required");
}

MPoly CrossedHom::at(const KElement& k) const { return crossed_extend(p_->quotient(), values_, k, memo_.get()); }

bool CrossedHom::compatible() const {
    const GroupQuotient& q = p_->quotient();
    const std::size_t r = q.rank();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) {
            const MPoly lhs = values_[i] + act(q.generators()[i].map, values_[j]);
            const MPoly rhs = values_[j] + act(q.generators()[j].map, values_[i]);
            if (!(lhs == rhs)) return false;
        }
    return true;
}

bool CrossedHom::torsion_consistent() const {
    const GroupQuotient& q = p_->quotient();
    const auto d = defects(q, values_);
    const std::size_t pairs = q.rank() * (q.rank() - (q.rank() ? 1 : 0)) / 2;
    for (std::size_t i = pairs; i < d.size(); ++i)
        if (!d[i].is_zero()) return false;
    return true;
}

CrossedHom crossed_from_cocycle(const Cochain& f) {
    const GroupQuotient& q = quotient_of(f.presentation());
    if (f.degree() != 1) throw DegreeError("crossed homomorphisms come from degree-1 cochains");
    if (auto chk = is_cocycle(f); !chk) throw CocycleError("not a cocycle: ∂f is nonzero at " + chk.counterexample);
    std::vector<MPoly> vals;
    for (std::size_t i = 0; i < q.rank(); ++i) vals.push_back(f.component({q.generator(i)}));
    return CrossedHom(f.presentation(), std::move(vals));
}

Cochain cocycle_from_crossed(const CrossedHom& beta) {
    const PresentationPtr& p = beta.presentation();
    const GroupQuotient& q = p->quotient();
    if (!q.is_free()) throw FreenessError("the action of K is not free, so k(y1, y2) is not well defined");
    if (!beta.compatible() || !beta.torsion_consistent())
        throw ValidationError("generator values do not define a crossed homomorphism");
    if (q.finite()) {
        std::map<Kappas, MPoly> vals;
        for (const auto& k : q.elements()) vals[{k}] = beta.at(k);
        return Cochain::table(p, 1, std::move(vals));
    }
    return Cochain::crossed(p, beta.values());
}

CrossedHom principal_crossed(const PresentationPtr& p, const MPoly& h) {
    const GroupQuotient& q = quotient_of(p);
    std::vector<MPoly> vals;
    for (const auto& g : q.generators()) vals.push_back(act(g.map, h) - h);
    return CrossedHom(p, std::move(vals));
}

std::string H1Group::summary() const {
    if (dimension == 0) return "0";
    return dimension == 1 ? "R" : "R^" + std::to_string(dimension);
}

H1Group h1_group(const PresentationPtr& p) {
    const GroupQuotient& q = quotient_of(p);
    const FunctionClass P = q.function_class();
    const std::size_t d = P.dimension(), r = q.rank();

    // Linear constraints on the stacked generator values.
    const std::size_t rows = defects(q, std::vector<MPoly>(r)).size() * d;
    ScalarMatrix C(rows, r * d);
    for (std::size_t col = 0; col < r * d; ++col) {
        std::vector<MPoly> beta(r);
        beta[col / d] = P.basis_element(col % d);
        const ScalarVector v = stacked(P, defects(q, beta));
        for (std::size_t i = 0; i < rows; ++i) C(i, col) = v[i];
    }
    const ScalarMatrix Z = kernel(C);
    const Principal B = principal_space(q);

    const std::size_t nb = B.image.cols();
    RowEchelon e = rref(hconcat(B.image, Z));
    H1Group out;
    for (auto piv : e.pivots)
        if (piv >= nb) out.representatives.emplace_back(p, unstacked(P, Z.col(piv - nb), r));
    out.dimension = out.representatives.size();
    out.class_note = "relative to class " + P.str();
    out.free = q.is_free();
    out.description = out.free ? "crossed homomorphisms modulo principal crossed homomorphisms"
                               : "forward map only: the action is not free";
    return out;
}

std::optional<MPoly> principal_potential(const CrossedHom& beta) {
    const GroupQuotient& q = beta.presentation()->quotient();
    const FunctionClass P = q.function_class();
    ScalarVector v;
    try {
        v = stacked(P, beta.values());
    } catch (const ClassError&) {
        return std::nullopt;
    }
    const Principal B = principal_space(q);
    auto sol = solve(B.image, v);
    if (!sol) return std::nullopt;
    return P.raised(1).element(B.potentials.apply(*sol));
}

} // namespace diffcech
