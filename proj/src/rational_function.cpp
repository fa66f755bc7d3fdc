#include "diffcech/rational_function.hpp"

#include "diffcech/errors.hpp"
#include "diffcech/expr.hpp"

#include <algorithm>
#include <sstream>

namespace diffcech {

RatPoly::RatPoly(const mpq_class& c) {
    if (c != 0) {
        coeffs_.push_back(c);
        coeffs_.back().canonicalize();
    }
}

RatPoly::RatPoly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

RatPoly RatPoly::monomial(const mpq_class& c, std::size_t degree) {
    if (c == 0) return {};
    std::vector<mpq_class> v(degree + 1, mpq_class(0));
    v[degree] = c;
    v[degree].canonicalize();
    return RatPoly(std::move(v));
}

void RatPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RatPoly RatPoly::operator-() const {
    RatPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), mpq_class(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), mpq_class(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

RatPoly& RatPoly::operator*=(const RatPoly& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<mpq_class> out(coeffs_.size() + o.coeffs_.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

RatPoly& RatPoly::operator*=(const mpq_class& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& dividend, const RatPoly& divisor) {
    if (divisor.is_zero()) throw Error("polynomial division by zero");
    RatPoly rem = dividend;
    if (rem.degree() < divisor.degree()) return {RatPoly(), rem};
    std::vector<mpq_class> quot(static_cast<std::size_t>(rem.degree() - divisor.degree() + 1), mpq_class(0));
    const mpq_class lead = divisor.leading();
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        const auto shift = static_cast<std::size_t>(rem.degree() - divisor.degree());
        mpq_class q = rem.leading() / lead;
        quot[shift] = q;
        for (std::size_t i = 0; i < divisor.coeffs_.size(); ++i) rem.coeffs_[i + shift] -= q * divisor.coeffs_[i];
        rem.trim();
    }
    return {RatPoly(std::move(quot)), rem};
}

RatPoly RatPoly::monic() const {
    if (is_zero()) return {};
    RatPoly r = *this;
    r *= mpq_class(1) / leading();
    return r;
}

RatPoly RatPoly::gcd(RatPoly x, RatPoly y) {
    while (!y.is_zero()) {
        auto r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

std::vector<mpz_class> RatPoly::primitive_integer_coeffs(mpq_class* scale) const {
    mpz_class lcm = 1;
    for (const auto& c : coeffs_) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> ints;
    ints.reserve(coeffs_.size());
    mpz_class content = 0;
    for (const auto& c : coeffs_) {
        mpz_class v = c.get_num() * (lcm / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        ints.push_back(v);
    }
    if (content == 0) content = 1;
    for (auto& v : ints) v /= content;
    if (scale) {
        *scale = mpq_class(lcm, content);
        scale->canonicalize();
    }
    return ints;
}

bool operator<(const RatPoly& x, const RatPoly& y) {
    if (x.coeffs_.size() != y.coeffs_.size()) return x.coeffs_.size() < y.coeffs_.size();
    for (std::size_t i = x.coeffs_.size(); i-- > 0;) {
        if (x.coeffs_[i] != y.coeffs_[i]) return x.coeffs_[i] < y.coeffs_[i];
    }
    return false;
}

// ---------------------------------------------------------------------------

Scalar::Scalar(RatPoly num, RatPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("scalar with zero denominator");
    normalize();
}

Scalar Scalar::alpha() { return Scalar(RatPoly::monomial(1, 1)); }

void Scalar::normalize() {
    if (num_.is_zero()) {
        den_ = RatPoly(1);
        return;
    }
    if (den_.degree() > 0) {
        RatPoly g = RatPoly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = RatPoly::divmod(num_, g).first;
            den_ = RatPoly::divmod(den_, g).first;
        }
    }
    const mpq_class lc = den_.leading();
    if (lc != 1) {
        const mpq_class inv = mpq_class(1) / lc;
        num_ *= inv;
        den_ *= inv;
    }
}

bool Scalar::is_integer() const {
    return is_rational() && to_rational().get_den() == 1;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
        if (den_.degree() > 0) normalize();
        else if (num_.is_zero()) den_ = RatPoly(1);
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    if (den_.degree() == 0 && o.den_.degree() == 0) {
        num_ *= o.num_;
        if (num_.is_zero()) den_ = RatPoly(1);
        return *this;
    }
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("division by zero scalar");
    return Scalar(den_, num_);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar result(1), base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

bool operator<(const Scalar& x, const Scalar& y) {
    if (!(x.den_ == y.den_)) return x.den_ < y.den_;
    return x.num_ < y.num_;
}

std::string format_integer_poly(const std::vector<mpz_class>& coeffs, const std::string& var) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        const mpz_class& c = coeffs[i];
        if (c == 0) continue;
        mpz_class mag = abs(c);
        if (c < 0) os << "-";
        else if (!first) os << "+";
        first = false;
        if (i == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << "*";
        os << var;
        if (i > 1) os << "^" << i;
    }
    if (first) return "0";
    return os.str();
}

namespace {

std::size_t term_count(const std::vector<mpz_class>& coeffs) {
    return static_cast<std::size_t>(std::count_if(coeffs.begin(), coeffs.end(), [](const mpz_class& c) { return c != 0; }));
}

} // namespace

std::string Scalar::str() const {
    if (is_zero()) return "0";
    mpq_class sn, sd;
    auto n = num_.primitive_integer_coeffs(&sn);
    auto d = den_.primitive_integer_coeffs(&sd);
    // num/den = (n/sn)/(d/sd) = n*sd / (d*sn)
    mpq_class ratio = sd / sn;
    for (auto& c : n) c *= ratio.get_num();
    for (auto& c : d) c *= ratio.get_den();
    std::string ns = format_integer_poly(n);
    if (d.size() == 1 && d[0] == 1) return ns;
    std::string ds = format_integer_poly(d);
    if (term_count(n) > 1) ns = "(" + ns + ")";
    if (term_count(d) > 1) ds = "(" + ds + ")";
    return ns + "/" + ds;
}

Scalar Scalar::parse(const std::string& text) { return parse_scalar_expression(text); }

} // namespace diffcech
