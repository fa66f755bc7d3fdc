#include "diffcech/mpoly.hpp"

#include "diffcech/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace diffcech {

bool ExponentLess::operator()(const Exponent& x, const Exponent& y) const {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

bool graded_before(const Exponent& x, const Exponent& y) {
    const int dx = std::accumulate(x.begin(), x.end(), 0);
    const int dy = std::accumulate(y.begin(), y.end(), 0);
    if (dx != dy) return dx > dy;
    const std::size_t n = std::max(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i) {
        const int a = i < x.size() ? x[i] : 0;
        const int b = i < y.size() ? y[i] : 0;
        if (a != b) return a > b;
    }
    return false;
}

Exponent MPoly::canonical(Exponent e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
    return e;
}

MPoly::MPoly(const Scalar& c) {
    if (!c.is_zero()) terms_.emplace(Exponent{}, c);
}

MPoly MPoly::variable(int index) {
    Exponent e(static_cast<std::size_t>(index) + 1, 0);
    e.back() = 1;
    return monomial(Scalar(1), std::move(e));
}

MPoly MPoly::monomial(const Scalar& c, Exponent e) {
    MPoly p;
    if (!c.is_zero()) p.terms_.emplace(canonical(std::move(e)), c);
    return p;
}

int MPoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

int MPoly::num_variables() const {
    int n = 0;
    for (const auto& [e, c] : terms_) n = std::max(n, static_cast<int>(e.size()));
    return n;
}

Scalar MPoly::constant_value() const { return coeff({}); }

Scalar MPoly::coeff(const Exponent& e) const {
    auto it = terms_.find(canonical(e));
    return it == terms_.end() ? Scalar() : it->second;
}

void MPoly::add_term(const Exponent& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MPoly& MPoly::operator*=(const MPoly& o) {
    MPoly out;
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            Exponent e(std::max(e1.size(), e2.size()), 0);
            for (std::size_t i = 0; i < e1.size(); ++i) e[i] += e1[i];
            for (std::size_t i = 0; i < e2.size(); ++i) e[i] += e2[i];
            out.add_term(e, c1 * c2);
        }
    }
    *this = std::move(out);
    return *this;
}

MPoly& MPoly::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MPoly MPoly::pow(int e) const {
    if (e < 0) throw Error("negative power of a polynomial");
    MPoly result(Scalar(1)), base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

MPoly MPoly::substitute(const std::vector<MPoly>& images) const {
    // powers[i][p] = images[i]^p, grown on demand
    std::vector<std::vector<MPoly>> powers(images.size());
    auto power = [&](std::size_t i, int p) -> const MPoly& {
        auto& ps = powers[i];
        if (ps.empty()) ps.push_back(MPoly(Scalar(1)));
        while (static_cast<int>(ps.size()) <= p) ps.push_back(ps.back() * images[i]);
        return ps[static_cast<std::size_t>(p)];
    };
    MPoly out;
    for (const auto& [e, c] : terms_) {
        MPoly term(c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (i >= images.size()) throw Error("substitution is missing variable x" + std::to_string(i));
            term *= power(i, e[i]);
        }
        out += term;
    }
    return out;
}

Scalar MPoly::evaluate(const std::vector<Scalar>& point) const {
    Scalar out;
    for (const auto& [e, c] : terms_) {
        Scalar term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (i >= point.size()) throw Error("evaluation point is missing coordinate x" + std::to_string(i));
            term *= point[i].pow(e[i]);
        }
        out += term;
    }
    return out;
}

namespace {

std::string monomial_str(const Exponent& e) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!first) os << "*";
        first = false;
        os << "x" << i;
        if (e[i] > 1) os << "^" << e[i];
    }
    return os.str();
}

bool plain_integer(const std::string& s) {
    std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (start == s.size()) return false;
    return std::all_of(s.begin() + static_cast<long>(start), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
}

} // namespace

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exponent, Scalar>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) { return graded_before(x.first, y.first); });
    auto render = [](const Exponent& e, const Scalar& c) {
        std::string cs = c.str();
        if (e.empty()) return cs;
        std::string m = monomial_str(e);
        if (cs == "1") return m;
        if (cs == "-1") return "-" + m;
        if (plain_integer(cs)) return cs + "*" + m;
        return "(" + cs + ")*" + m;
    };
    std::string out;
    bool first = true;
    for (const auto& [e, c] : sorted) {
        const bool negative = c.is_rational() && c.to_rational() < 0;
        if (first) out = render(e, c);
        else if (negative) out += " - " + render(e, -c);
        else out += " + " + render(e, c);
        first = false;
    }
    return out;
}

} // namespace diffcech
