#include "diffcech/cech.hpp"

#include "diffcech/errors.hpp"

namespace diffcech {

namespace {

mpz_class mod(const mpz_class& x, const mpz_class& m) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

IntMatrix delta_matrix(const FiniteNerve& n, int k) {
    if (k < 0) return IntMatrix(n.num_tuples(0), 0);
    IntMatrix M(n.num_tuples(k + 1), n.num_tuples(k));
    for (std::size_t idx = 0; idx < M.rows(); ++idx)
        for (int i = 0; i <= k + 1; ++i) M(idx, n.face_index(k + 1, idx, i)) += (i % 2) ? -1 : 1;
    return M;
}

void require_on(const Cochain& c, const PresentationPtr& p, int k, const GroupTag& tag) {
    if (!(c.presentation() == p || *c.presentation() == *p))
        throw CompatibilityError("cochain lives on a different presentation");
    if (c.degree() != k) throw DegreeError("expected a degree-" + std::to_string(k) + " cochain");
    if (!(c.tag() == tag)) throw TagError("expected coefficients in " + tag.str() + ", got " + c.tag().str());
}

// ---------------------------------------------------------------------------
// Z and Z/m coefficients on nerves

struct Component {
    enum Kind { Torsion, Split, Free } kind;
    std::size_t index;
    mpz_class order; // 0 for Z
};

class IntegralOracle : public ClassOracle {
public:
    IntegralOracle(PresentationPtr p, GroupTag tag, int k) : p_(std::move(p)), tag_(std::move(tag)), k_(k) {
        m_ = tag_.kind == GroupKind::Cyclic ? mpz_class(tag_.modulus) : mpz_class(0);
        const FiniteNerve& n = p_->nerve();
        A_ = delta_matrix(n, k - 1);
        B_ = delta_matrix(n, k);
        sA_ = smith_normal_form(A_, {true, true});
        r_ = sA_.rank;
        const std::size_t dim = A_.rows();
        IntMatrix BU = B_ * sA_.U_inv;
        IntMatrix Bp(B_.rows(), dim - r_);
        for (std::size_t i = 0; i < B_.rows(); ++i)
            for (std::size_t j = r_; j < dim; ++j) Bp(i, j - r_) = BU(i, j);
        sB_ = smith_normal_form(Bp, {false, true});
        rp_ = sB_.rank;

        const auto& d = sA_.invariant_factors;
        for (std::size_t i = 0; i < r_; ++i) {
            mpz_class g = m_ == 0 ? d[i] : gcd(d[i], m_);
            if (g > 1) comps_.push_back({Component::Torsion, i, g});
        }
        if (m_ != 0)
            for (std::size_t j = 0; j < rp_; ++j) {
                mpz_class g = gcd(sB_.invariant_factors[j], m_);
                if (g > 1) comps_.push_back({Component::Split, j, g});
            }
        for (std::size_t j = rp_; j < dim - r_; ++j) comps_.push_back({Component::Free, j, m_});
    }

    std::vector<mpz_class> orders() const {
        std::vector<mpz_class> out;
        for (const auto& c : comps_) out.push_back(c.order);
        return out;
    }

    std::vector<Cochain> generators() const {
        std::vector<Cochain> out;
        const std::size_t dim = A_.rows();
        for (const auto& c : comps_) {
            IntVector v(dim);
            if (c.kind == Component::Torsion) {
                v = sA_.U_inv.col(c.index);
            } else {
                for (std::size_t i = 0; i < dim; ++i)
                    for (std::size_t j = r_; j < dim; ++j) v[i] += sA_.U_inv(i, j) * sB_.V(j - r_, c.index);
                if (c.kind == Component::Split)
                    for (auto& x : v) x *= m_ / c.order;
            }
            out.push_back(to_cochain(v, k_));
        }
        return out;
    }

    std::vector<Scalar> coordinates(const Cochain& c) const override {
        require_on(c, p_, k_, tag_);
        IntVector x = to_vector(c);
        IntVector bx = B_.apply(x);
        for (std::size_t i = 0; i < bx.size(); ++i)
            if (reduce(bx[i]) != 0)
                throw CocycleError("not a cocycle: ∂c is nonzero at " +
                                   tuple_str(p_->nerve().tuples_unchecked(k_ + 1)[i]));
        IntVector w = sA_.U.apply(x);
        for (auto& v : w) v = reduce(v);
        IntVector tail(w.begin() + static_cast<long>(r_), w.end());
        IntVector z = sB_.V_inv.apply(tail);
        std::vector<Scalar> out;
        for (const auto& comp : comps_) {
            mpz_class v;
            switch (comp.kind) {
            case Component::Torsion: v = mod(w[comp.index], comp.order); break;
            case Component::Split: v = mod(mod(z[comp.index], m_) / (m_ / comp.order), comp.order); break;
            case Component::Free: v = m_ == 0 ? z[comp.index] : mod(z[comp.index], m_); break;
            }
            out.emplace_back(v);
        }
        return out;
    }

    std::optional<Cochain> primitive(const Cochain& c) const override {
        require_on(c, p_, k_, tag_);
        if (k_ == 0) return std::nullopt;
        IntVector w = sA_.U.apply(to_vector(c));
        IntVector y(A_.cols(), mpz_class(0));
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i >= r_) {
                if (reduce(w[i]) != 0) return std::nullopt;
                continue;
            }
            const mpz_class& d = sA_.invariant_factors[i];
            if (m_ == 0) {
                if (w[i] % d != 0) return std::nullopt;
                y[i] = w[i] / d;
            } else {
                mpz_class g = gcd(d, m_), wi = mod(w[i], m_);
                if (wi % g != 0) return std::nullopt;
                mpz_class mg = m_ / g, inv;
                mpz_class dg = mod(d / g, mg);
                if (mg == 1) {
                    y[i] = 0;
                } else {
                    mpz_invert(inv.get_mpz_t(), dg.get_mpz_t(), mg.get_mpz_t());
                    y[i] = mod((wi / g) * inv, mg);
                }
            }
        }
        return to_cochain(sA_.V.apply(y), k_ - 1);
    }

private:
    mpz_class reduce(const mpz_class& x) const { return m_ == 0 ? x : mod(x, m_); }

    IntVector to_vector(const Cochain& c) const {
        IntVector x;
        x.reserve(c.values().size());
        for (const auto& v : c.values()) x.push_back(v.as_integer());
        return x;
    }

    Cochain to_cochain(const IntVector& v, int k) const {
        std::vector<GroupElement> vals;
        vals.reserve(v.size());
        for (const auto& x : v) vals.push_back(GroupElement::integer(tag_, x));
        return Cochain::nerve(p_, tag_, k, std::move(vals));
    }

    PresentationPtr p_;
    GroupTag tag_;
    int k_;
    mpz_class m_;
    IntMatrix A_, B_;
    SmithForm sA_, sB_;
    std::size_t r_ = 0, rp_ = 0;
    std::vector<Component> comps_;
};

// ---------------------------------------------------------------------------
// Field coefficients: nerves over Q or R(alpha), and quotients over R(alpha)

struct LinearComplex {
    ScalarMatrix A; // C^{k-1} -> C^k
    ScalarMatrix B; // C^k -> test space of ∂
    std::function<ScalarVector(const Cochain&)> vec;
    std::function<Cochain(const ScalarVector&)> unvec;
    std::function<Cochain(const ScalarVector&)> unvec_prev;
    std::function<void(const Cochain&)> check;
};

class FieldOracle : public ClassOracle {
public:
    explicit FieldOracle(LinearComplex lc) : lc_(std::move(lc)) {
        ScalarMatrix K = kernel(lc_.B);
        RowEchelon e = rref(hconcat(lc_.A, K));
        std::vector<std::size_t> chosen;
        for (auto piv : e.pivots)
            if (piv >= lc_.A.cols()) chosen.push_back(piv - lc_.A.cols());
        reps_ = ScalarMatrix(K.rows(), chosen.size());
        for (std::size_t j = 0; j < chosen.size(); ++j)
            for (std::size_t i = 0; i < K.rows(); ++i) reps_(i, j) = K(i, chosen[j]);
        basis_ = hconcat(lc_.A, reps_);
    }

    std::size_t dimension() const { return reps_.cols(); }

    std::vector<Cochain> generators() const {
        std::vector<Cochain> out;
        for (std::size_t j = 0; j < reps_.cols(); ++j) out.push_back(lc_.unvec(reps_.col(j)));
        return out;
    }

    std::vector<Scalar> coordinates(const Cochain& c) const override {
        lc_.check(c);
        ScalarVector v = lc_.vec(c);
        ScalarVector bv = lc_.B.apply(v);
        for (const auto& x : bv)
            if (!x.is_zero()) {
                auto chk = is_cocycle(c);
                throw CocycleError("not a cocycle" + (chk ? std::string() : ": ∂c is nonzero at " + chk.counterexample));
            }
        auto sol = solve(basis_, v);
        if (!sol) throw Error("cocycle outside the computed cocycle space");
        return {sol->begin() + static_cast<long>(lc_.A.cols()), sol->end()};
    }

    std::optional<Cochain> primitive(const Cochain& c) const override {
        lc_.check(c);
        if (lc_.A.cols() == 0) {
            ScalarVector v = lc_.vec(c);
            for (const auto& x : v)
                if (!x.is_zero()) return std::nullopt;
            if (!lc_.unvec_prev) return std::nullopt;
            return lc_.unvec_prev(ScalarVector());
        }
        auto sol = solve(lc_.A, lc_.vec(c));
        if (!sol) return std::nullopt;
        return lc_.unvec_prev(*sol);
    }

private:
    LinearComplex lc_;
    ScalarMatrix reps_, basis_;
};

Scalar field_value(const GroupElement& g) {
    if (g.tag().kind == GroupKind::Rationals) return Scalar(g.as_rational());
    return g.as_scalar();
}

GroupElement field_element(const GroupTag& tag, const Scalar& s) {
    if (tag.kind == GroupKind::Rationals) {
        if (!s.is_rational()) throw TagError("non-rational value for Q");
        return GroupElement::rational(tag, s.to_rational());
    }
    return GroupElement::real(s);
}

ScalarMatrix to_scalar(const IntMatrix& M) {
    ScalarMatrix out(M.rows(), M.cols());
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j)
            if (M(i, j) != 0) out(i, j) = Scalar(M(i, j));
    return out;
}

LinearComplex nerve_field_complex(const PresentationPtr& p, const GroupTag& tag, int k) {
    const FiniteNerve& n = p->nerve();
    LinearComplex lc;
    lc.A = to_scalar(delta_matrix(n, k - 1));
    lc.B = to_scalar(delta_matrix(n, k));
    lc.vec = [](const Cochain& c) {
        ScalarVector v;
        for (const auto& x : c.values()) v.push_back(field_value(x));
        return v;
    };
    auto make = [p, tag](int deg) {
        return [p, tag, deg](const ScalarVector& v) {
            std::vector<GroupElement> vals;
            for (const auto& s : v) vals.push_back(field_element(tag, s));
            return Cochain::nerve(p, tag, deg, std::move(vals));
        };
    };
    lc.unvec = make(k);
    if (k > 0) lc.unvec_prev = make(k - 1);
    lc.check = [p, tag, k](const Cochain& c) { require_on(c, p, k, tag); };
    return lc;
}

/// Tabulated complex of a finite K: C^k = maps K^k -> P_D.
LinearComplex finite_quotient_complex(const PresentationPtr& p, int k) {
    const GroupQuotient& q = p->quotient();
    const FunctionClass P = q.function_class();
    const std::size_t d = P.dimension();
    auto keys = [q](int deg) { return all_kappas(q, deg); };
    auto vec_in = [P, keys](int deg) {
        return [P, keys, deg](const Cochain& c) {
            ScalarVector v;
            for (const auto& ks : keys(deg)) {
                auto coords = P.coordinates(c.component(ks));
                v.insert(v.end(), coords.begin(), coords.end());
            }
            return v;
        };
    };
    auto unvec_in = [p, P, keys, d](int deg) {
        return [p, P, keys, d, deg](const ScalarVector& v) {
            std::map<Kappas, MPoly> vals;
            auto ks = keys(deg);
            for (std::size_t i = 0; i < ks.size(); ++i)
                vals[ks[i]] = P.element(ScalarVector(v.begin() + static_cast<long>(i * d),
                                                     v.begin() + static_cast<long>((i + 1) * d)));
            if (deg == 0) return Cochain::function(p, vals[Kappas{}]);
            return Cochain::table(p, deg, std::move(vals));
        };
    };
    auto delta = [&](int deg) {
        const std::size_t cols = keys(deg).size() * d, rows = keys(deg + 1).size() * d;
        ScalarMatrix M(rows, cols);
        auto unvec = unvec_in(deg);
        auto vec = vec_in(deg + 1);
        for (std::size_t j = 0; j < cols; ++j) {
            ScalarVector e(cols);
            e[j] = Scalar(1);
            ScalarVector img = vec(coboundary(unvec(e)));
            for (std::size_t i = 0; i < rows; ++i) M(i, j) = img[i];
        }
        return M;
    };
    LinearComplex lc;
    lc.A = k == 0 ? ScalarMatrix(d, 0) : delta(k - 1);
    lc.B = delta(k);
    lc.vec = vec_in(k);
    lc.unvec = unvec_in(k);
    if (k > 0) lc.unvec_prev = unvec_in(k - 1);
    lc.check = [p, k](const Cochain& c) { require_on(c, p, k, GroupTag::reals()); };
    return lc;
}

/// Infinite K, degrees 0 and 1, with the degree policy P_D / P_{D+1}.
LinearComplex infinite_quotient_complex(const PresentationPtr& p, int k) {
    const GroupQuotient& q = p->quotient();
    const FunctionClass P = q.function_class();
    const std::size_t d = P.dimension(), r = q.rank();
    LinearComplex lc;
    lc.check = [p, k](const Cochain& c) { require_on(c, p, k, GroupTag::reals()); };
    if (k == 0) {
        lc.A = ScalarMatrix(d, 0);
        lc.B = ScalarMatrix(r * d, d);
        for (std::size_t j = 0; j < d; ++j) {
            const MPoly h = P.basis_element(j);
            for (std::size_t i = 0; i < r; ++i) {
                auto coords = P.coordinates(act(q.generators()[i].map, h) - h);
                for (std::size_t t = 0; t < d; ++t) lc.B(i * d + t, j) = coords[t];
            }
        }
        lc.vec = [P](const Cochain& c) { return P.coordinates(c.component({})); };
        lc.unvec = [p, P](const ScalarVector& v) { return Cochain::function(p, P.element(v)); };
        return lc;
    }
    if (k != 1) throw UnsupportedError("quotients with infinite K support cohomology in degrees 0 and 1");

    // Test tuples on which ∂f must vanish; they encode compatibility and torsion.
    std::vector<Kappas> tests;
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = i + 1; j < r; ++j) tests.push_back({q.generator(j), q.add(q.generator(i), q.generator(j))});
        if (q.generators()[i].torsion > 0) tests.push_back({q.generator(i), q.zero()});
    }
    lc.B = ScalarMatrix(tests.size() * d, r * d);
    for (std::size_t col = 0; col < r * d; ++col) {
        std::vector<MPoly> gens(r);
        gens[col / d] = P.basis_element(col % d);
        const Cochain f = Cochain::crossed(p, gens);
        const Cochain df = coboundary(f);
        for (std::size_t t = 0; t < tests.size(); ++t) {
            auto coords = P.coordinates(df.component(tests[t]));
            for (std::size_t s = 0; s < d; ++s) lc.B(t * d + s, col) = coords[s];
        }
    }

    // Coboundaries of P_{D+1} that land in P_D.
    const FunctionClass P1 = P.raised(1);
    const std::size_t d1 = P1.dimension();
    ScalarMatrix low(r * d, d1), top(r * (d1 - d), d1);
    for (std::size_t j = 0; j < d1; ++j) {
        const MPoly h = P1.basis_element(j);
        for (std::size_t i = 0; i < r; ++i) {
            auto coords = P1.coordinates(act(q.generators()[i].map, h) - h);
            for (std::size_t t = 0; t < d1; ++t) {
                if (t < d) low(i * d + t, j) = coords[t];
                else top(i * (d1 - d) + (t - d), j) = coords[t];
            }
        }
    }
    const ScalarMatrix T = kernel(top);
    lc.A = low * T;
    lc.vec = [P, r](const Cochain& c) {
        ScalarVector v;
        for (std::size_t i = 0; i < r; ++i) {
            KElement g(r, 0);
            g[i] = 1;
            auto coords = P.coordinates(c.component({g}));
            v.insert(v.end(), coords.begin(), coords.end());
        }
        return v;
    };
    lc.unvec = [p, P, r, d](const ScalarVector& v) {
        std::vector<MPoly> gens;
        for (std::size_t i = 0; i < r; ++i)
            gens.push_back(P.element(ScalarVector(v.begin() + static_cast<long>(i * d),
                                                  v.begin() + static_cast<long>((i + 1) * d))));
        return Cochain::crossed(p, std::move(gens));
    };
    lc.unvec_prev = [p, P1, T](const ScalarVector& y) { return Cochain::function(p, P1.element(T.apply(y))); };
    return lc;
}

std::string power(const std::string& base, std::size_t n) {
    return n == 1 ? base : base + "^" + std::to_string(n);
}

} // namespace

// ---------------------------------------------------------------------------

std::string CohomologyReport::summary() const {
    if (over_field) {
        if (dimension == 0) return "0";
        return power(coeff.kind == GroupKind::Rationals ? "Q" : "R", dimension);
    }
    std::vector<std::string> parts;
    if (invariants.free_rank > 0) parts.push_back(power("Z", invariants.free_rank));
    for (const auto& t : invariants.torsion) parts.push_back("Z/" + t.get_str());
    if (parts.empty()) return "0";
    std::string s = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) s += " ⊕ " + parts[i];
    return s;
}

bool CohomologyReport::is_zero() const {
    return over_field ? dimension == 0 : invariants.free_rank == 0 && invariants.torsion.empty();
}

bool CohomologyReport::class_is_zero(const Cochain& c) const {
    for (const auto& x : coordinates(c))
        if (!x.is_zero()) return false;
    return true;
}

CohomologyReport cohomology(const PresentationPtr& p, const GroupTag& tag, int k) {
    if (k < 0) throw DegreeError("negative degree");
    CohomologyReport rep;
    rep.degree = k;
    rep.coeff = tag;
    rep.presentation_id = p->id();
    if (p->is_nerve()) {
        if (k > p->nerve().k_max()) throw DegreeError("degree " + std::to_string(k) + " exceeds k_max");
        if (tag.is_integral()) {
            auto oracle = std::make_shared<IntegralOracle>(p, tag, k);
            rep.orders = oracle->orders();
            FGAbelian g;
            for (const auto& o : rep.orders) g.orders.push_back(tag.kind == GroupKind::Cyclic && o == tag.modulus ? o : o);
            rep.invariants = abelian_invariants(g);
            rep.generators = oracle->generators();
            rep.oracle = oracle;
            return rep;
        }
        if (tag.is_field()) {
            auto oracle = std::make_shared<FieldOracle>(nerve_field_complex(p, tag, k));
            rep.over_field = true;
            rep.dimension = oracle->dimension();
            rep.generators = oracle->generators();
            rep.oracle = oracle;
            return rep;
        }
        throw UnsupportedError("cohomology with coefficients in " + tag.str() + " is not supported");
    }
    if (tag.kind != GroupKind::Reals)
        throw UnsupportedError("quotient presentations take coefficients in R(alpha), not " + tag.str());
    const GroupQuotient& q = p->quotient();
    auto oracle = std::make_shared<FieldOracle>(q.finite() ? finite_quotient_complex(p, k) : infinite_quotient_complex(p, k));
    rep.over_field = true;
    rep.dimension = oracle->dimension();
    rep.generators = oracle->generators();
    rep.oracle = oracle;
    rep.class_note = "relative to class " + q.function_class().str();
    return rep;
}

CohomologyReport h0_global_sections(const PresentationPtr& p, const GroupTag& tag) {
    CohomologyReport rep = cohomology(p, tag, 0);
    if (p->is_nerve()) {
        const auto comps = p->nerve().components();
        const int count = comps.empty() ? 0 : *std::max_element(comps.begin(), comps.end()) + 1;
        rep.description = "locally constant " + tag.str() + "-valued functions: one value per connected component (" +
                          std::to_string(count) + (count == 1 ? " component)" : " components)");
    } else {
        rep.description = "K-invariant functions in class " + p->quotient().function_class().str();
    }
    return rep;
}

ClassComparison classes_equal(const Cochain& f1, const Cochain& f2) {
    if (!(f1.presentation() == f2.presentation() || *f1.presentation() == *f2.presentation())) {
        CommonRefinement cr = common_refinement(f1.presentation(), f2.presentation());
        ClassComparison out =
            classes_equal(pullback_cochain(cr.to_first, f1), pullback_cochain(cr.to_second, f2));
        out.certificate += (out.certificate.empty() ? "" : " ") + std::string("(on the common refinement)");
        return out;
    }
    if (f1.degree() != f2.degree()) throw DegreeError("cochains have different degrees");
    if (!(f1.tag() == f2.tag())) throw TagError("cochains have different coefficient groups");
    for (const Cochain* f : {&f1, &f2})
        if (auto chk = is_cocycle(*f); !chk) throw CocycleError("input is not a cocycle: ∂f is nonzero at " + chk.counterexample);

    ClassComparison out;
    const Cochain diff = f2 - f1;
    if (f1.degree() == 0) {
        out.equal = f1 == f2;
        out.certificate = out.equal ? "identical degree-0 cocycles" : "degree-0 cocycles differ";
        return out;
    }
    const PresentationPtr& p = f1.presentation();
    const CohomologyReport rep = cohomology(p, f1.tag(), f1.degree());
    if (auto alpha = rep.oracle->primitive(diff)) {
        out.equal = true;
        out.witness = std::move(alpha);
        out.certificate = "f2 - f1 = ∂α";
        return out;
    }
    auto show = [](const std::vector<Scalar>& v) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
        return s + "]";
    };
    out.certificate = "class coordinates " + show(rep.coordinates(f1)) + " vs " + show(rep.coordinates(f2));
    if (!rep.class_note.empty()) out.certificate += ", " + rep.class_note;
    return out;
}

} // namespace diffcech
