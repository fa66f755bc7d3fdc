#include "diffcech/cochain.hpp"

#include "diffcech/errors.hpp"

#include <algorithm>

namespace diffcech {

std::string tuple_str(const Tuple& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t[i]);
    }
    return s + ")";
}

std::string kappas_str(const Kappas& ks) {
    std::string s = "(";
    for (std::size_t i = 0; i < ks.size(); ++i) {
        if (i) s += ",";
        s += "[";
        for (std::size_t j = 0; j < ks[i].size(); ++j) {
            if (j) s += ",";
            s += std::to_string(ks[i][j]);
        }
        s += "]";
    }
    return s + ")";
}

namespace {

MPoly crossed_step(const GroupQuotient& q, const std::vector<MPoly>& generator_values, const KElement& k,
                   std::map<KElement, MPoly>& memo) {
    if (auto it = memo.find(k); it != memo.end()) return it->second;
    std::size_t i = k.size();
    while (i > 0 && k[i - 1] == 0) --i;
    if (i == 0) return MPoly();
    --i;
    // kappa(k) = kappa(k - s) + kappa(s) . (k - s); the path runs through g_0 first, then g_1, ...
    // The symbolic cocycle tests depend on this order.
    const KElement step = k[i] > 0 ? q.generator(i) : q.neg(q.generator(i));
    const KElement rest = q.reduce(q.add(k, q.neg(step)));
    const MPoly step_value = k[i] > 0 ? generator_values[i] : -act(q.action(step), generator_values[i]);
    MPoly out = crossed_step(q, generator_values, rest, memo) + act(q.action(rest), step_value);
    memo.emplace(k, out);
    return out;
}

} // namespace

MPoly crossed_extend(const GroupQuotient& q, const std::vector<MPoly>& generator_values, const KElement& k,
                     CrossedMemo* memo) {
    const KElement r = q.reduce(k);
    if (!memo) {
        std::map<KElement, MPoly> local;
        return crossed_step(q, generator_values, r, local);
    }
    std::lock_guard<std::mutex> lock(memo->mutex);
    return crossed_step(q, generator_values, r, memo->values);
}

std::vector<Kappas> all_kappas(const GroupQuotient& q, int k) {
    std::vector<Kappas> out{{}};
    const auto elems = q.elements();
    for (int d = 0; d < k; ++d) {
        std::vector<Kappas> next;
        next.reserve(out.size() * elems.size());
        for (const auto& prefix : out)
            for (const auto& e : elems) {
                Kappas t = prefix;
                t.push_back(e);
                next.push_back(std::move(t));
            }
        out = std::move(next);
    }
    return out;
}

std::vector<Kappas> box_kappas(const GroupQuotient& q, int k, long radius) {
    std::vector<KElement> elems;
    KElement e(q.rank(), -radius);
    for (;;) {
        elems.push_back(q.reduce(e));
        std::size_t i = e.size();
        while (i-- > 0) {
            if (++e[i] <= radius) break;
            e[i] = -radius;
        }
        if (i == static_cast<std::size_t>(-1)) break;
    }
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    std::vector<Kappas> out{{}};
    for (int d = 0; d < k; ++d) {
        std::vector<Kappas> next;
        for (const auto& prefix : out)
            for (const auto& x : elems) {
                Kappas t = prefix;
                t.push_back(x);
                next.push_back(std::move(t));
            }
        out = std::move(next);
    }
    return out;
}

// ---------------------------------------------------------------------------

Cochain Cochain::nerve(PresentationPtr p, GroupTag tag, int k, std::vector<GroupElement> values) {
    const FiniteNerve& n = p->nerve();
    if (values.size() != n.num_tuples(k))
        throw Error("cochain needs " + std::to_string(n.num_tuples(k)) + " values in degree " + std::to_string(k));
    for (const auto& v : values)
        if (!(v.tag() == tag)) throw TagError("cochain value tagged " + v.tag().str() + ", expected " + tag.str());
    Cochain c(std::move(p), std::move(tag), k);
    c.values_ = std::move(values);
    return c;
}

Cochain Cochain::zero(PresentationPtr p, GroupTag tag, int k) {
    if (p->is_nerve()) {
        std::vector<GroupElement> vals(p->nerve().num_tuples(k), GroupElement::zero(tag));
        return nerve(std::move(p), std::move(tag), k, std::move(vals));
    }
    if (tag.kind != GroupKind::Reals) throw TagError("quotient cochains take values in R(alpha)");
    if (k == 0) return function(std::move(p), MPoly());
    if (k == 1) return crossed(p, std::vector<MPoly>(p->quotient().rank()));
    return lazy(std::move(p), k, [](const Kappas&) { return MPoly(); });
}

Cochain Cochain::function(PresentationPtr p, MPoly h) {
    if (h.num_variables() > p->quotient().dim()) throw ClassError("function " + h.str() + " uses too many variables");
    Cochain c(std::move(p), GroupTag::reals(), 0);
    c.payload_ = std::make_shared<const QuotientPayload>(std::move(h));
    return c;
}

Cochain Cochain::crossed(PresentationPtr p, std::vector<MPoly> generator_values) {
    if (generator_values.size() != p->quotient().rank())
        throw Error("crossed data needs one value per generator of K");
    Cochain c(std::move(p), GroupTag::reals(), 1);
    c.payload_ = std::make_shared<const QuotientPayload>(CrossedData{std::move(generator_values), std::make_shared<CrossedMemo>()});
    return c;
}

Cochain Cochain::table(PresentationPtr p, int k, std::map<Kappas, MPoly> values) {
    const GroupQuotient& q = p->quotient();
    if (!q.finite()) throw DegreeError("tabulated cochains need a finite K");
    Cochain c(std::move(p), GroupTag::reals(), k);
    c.payload_ = std::make_shared<const QuotientPayload>(TableData{std::move(values)});
    return c;
}

Cochain Cochain::lazy(PresentationPtr p, int k, std::function<MPoly(const Kappas&)> eval) {
    (void)p->quotient();
    Cochain c(std::move(p), GroupTag::reals(), k);
    c.payload_ = std::make_shared<const QuotientPayload>(LazyData{std::move(eval)});
    return c;
}

const std::vector<GroupElement>& Cochain::values() const {
    if (!on_nerve()) throw CompatibilityError("cochain does not live on a nerve");
    return values_;
}

GroupElement Cochain::value(const Tuple& t) const {
    const FiniteNerve& n = pres_->nerve();
    if (static_cast<int>(t.size()) != degree_ + 1) throw DegreeError("tuple length does not match the cochain degree");
    if (auto idx = n.index_of(t)) return values_[*idx];
    if (!n.tuple_alive(t)) throw CompatibilityError("tuple " + tuple_str(t) + " is not alive");
    // alternating mode: sort with sign, zero on repeats
    Tuple s = t;
    bool odd = false;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j + 1 < s.size() - i; ++j)
            if (s[j] > s[j + 1]) {
                std::swap(s[j], s[j + 1]);
                odd = !odd;
            }
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) return GroupElement::zero(tag_);
    const GroupElement& v = values_[*n.index_of(s)];
    return odd ? -v : v;
}

const Cochain::QuotientPayload& Cochain::payload() const {
    if (!payload_) throw CompatibilityError("cochain does not live on a group quotient");
    return *payload_;
}

bool Cochain::is_lazy() const { return payload_ && std::holds_alternative<LazyData>(*payload_); }

MPoly Cochain::component(const Kappas& kappas) const {
    const GroupQuotient& q = pres_->quotient();
    if (static_cast<int>(kappas.size()) != degree_) throw DegreeError("wrong number of group elements for the degree");
    Kappas reduced;
    for (const auto& k : kappas) reduced.push_back(q.reduce(k));
    return std::visit(
        [&](const auto& data) -> MPoly {
            using T = std::decay_t<decltype(data)>;
            if constexpr (std::is_same_v<T, MPoly>) {
                return data;
            } else if constexpr (std::is_same_v<T, CrossedData>) {
                return crossed_extend(q, data.values, reduced[0], data.memo.get());
            } else if constexpr (std::is_same_v<T, TableData>) {
                auto it = data.values.find(reduced);
                return it == data.values.end() ? MPoly() : it->second;
            } else {
                return data.eval(reduced);
            }
        },
        payload());
}

Scalar Cochain::evaluate(const QuotientPoint& x) const { return component(x.kappas).evaluate(x.y); }

Cochain Cochain::operator-() const {
    if (on_nerve()) {
        std::vector<GroupElement> vals;
        vals.reserve(values_.size());
        for (const auto& v : values_) vals.push_back(-v);
        return nerve(pres_, tag_, degree_, std::move(vals));
    }
    return scaled(Scalar(-1));
}

Cochain Cochain::scaled(const Scalar& s) const {
    if (on_nerve()) {
        std::vector<GroupElement> vals;
        if (tag_.kind == GroupKind::Rationals) {
            if (!s.is_rational()) throw TagError("non-rational multiple of a Q-valued cochain");
            for (const auto& v : values_) vals.push_back(GroupElement::rational(tag_, v.as_rational() * s.to_rational()));
            return nerve(pres_, tag_, degree_, std::move(vals));
        }
        if (tag_.kind != GroupKind::Reals) throw TagError("scalar multiple of a cochain valued in " + tag_.str());
        for (const auto& v : values_) vals.push_back(GroupElement::real(v.as_scalar() * s));
        return nerve(pres_, tag_, degree_, std::move(vals));
    }
    const PresentationPtr p = pres_;
    return std::visit(
        [&](const auto& data) -> Cochain {
            using T = std::decay_t<decltype(data)>;
            if constexpr (std::is_same_v<T, MPoly>) {
                MPoly h = data;
                h *= s;
                return function(p, h);
            } else if constexpr (std::is_same_v<T, CrossedData>) {
                auto vals = data.values;
                for (auto& v : vals) v *= s;
                return crossed(p, vals);
            } else if constexpr (std::is_same_v<T, TableData>) {
                auto vals = data.values;
                for (auto& [k, v] : vals) v *= s;
                return table(p, degree_, vals);
            } else {
                auto self = *this;
                return lazy(p, degree_, [self, s](const Kappas& k) {
                    MPoly h = self.component(k);
                    h *= s;
                    return h;
                });
            }
        },
        payload());
}

Cochain operator+(const Cochain& x, const Cochain& y) {
    if (x.pres_ != y.pres_ && !(*x.pres_ == *y.pres_)) throw CompatibilityError("cochains live on different presentations");
    if (x.degree_ != y.degree_) throw DegreeError("cochains have different degrees");
    if (!(x.tag_ == y.tag_)) throw TagError("cochains have different coefficient groups");
    if (x.on_nerve()) {
        std::vector<GroupElement> vals;
        vals.reserve(x.values_.size());
        for (std::size_t i = 0; i < x.values_.size(); ++i) vals.push_back(x.values_[i] + y.values_[i]);
        return Cochain::nerve(x.pres_, x.tag_, x.degree_, std::move(vals));
    }
    const auto& px = x.payload();
    const auto& py = y.payload();
    if (px.index() == py.index()) {
        if (auto a = std::get_if<MPoly>(&px)) return Cochain::function(x.pres_, *a + std::get<MPoly>(py));
        if (auto a = std::get_if<CrossedData>(&px)) {
            auto vals = a->values;
            const auto& b = std::get<CrossedData>(py).values;
            for (std::size_t i = 0; i < vals.size(); ++i) vals[i] += b[i];
            return Cochain::crossed(x.pres_, vals);
        }
        if (auto a = std::get_if<TableData>(&px)) {
            auto vals = a->values;
            for (const auto& [k, v] : std::get<TableData>(py).values) vals[k] += v;
            return Cochain::table(x.pres_, x.degree_, vals);
        }
    }
    if (x.pres_->quotient().finite()) {
        std::map<Kappas, MPoly> vals;
        for (const auto& k : all_kappas(x.pres_->quotient(), x.degree_)) vals[k] = x.component(k) + y.component(k);
        return Cochain::table(x.pres_, x.degree_, vals);
    }
    return Cochain::lazy(x.pres_, x.degree_, [x, y](const Kappas& k) { return x.component(k) + y.component(k); });
}

bool operator==(const Cochain& x, const Cochain& y) {
    if (x.degree_ != y.degree_ || !(x.tag_ == y.tag_)) return false;
    if (x.on_nerve() != y.on_nerve()) return false;
    if (x.on_nerve()) return x.values_ == y.values_;
    const GroupQuotient& q = x.pres_->quotient();
    if (x.degree_ == 0) return x.component({}) == y.component({});
    if (q.finite()) {
        for (const auto& k : all_kappas(q, x.degree_))
            if (!(x.component(k) == y.component(k))) return false;
        return true;
    }
    if (x.degree_ == 1 && std::holds_alternative<CrossedData>(x.payload()) &&
        std::holds_alternative<CrossedData>(y.payload())) {
        const auto& a = std::get<CrossedData>(x.payload()).values;
        const auto& b = std::get<CrossedData>(y.payload()).values;
        return a == b;
    }
    for (const auto& k : box_kappas(q, x.degree_, x.degree_ >= 3 ? 1 : 2))
        if (!(x.component(k) == y.component(k))) return false;
    return true;
}

} // namespace diffcech
