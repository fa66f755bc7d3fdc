#include "diffcech/group.hpp"

#include "diffcech/errors.hpp"
#include "diffcech/expr.hpp"

#include <algorithm>

namespace diffcech {

namespace {

mpz_class mod_floor(const mpz_class& x, long m) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(m));
    return r;
}

mpq_class frac(const mpq_class& q) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    mpq_class r = q - mpq_class(fl);
    r.canonicalize();
    return r;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\n\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\n\r");
    return s.substr(b, e - b + 1);
}

/// Splits on commas not nested in (), [].
std::vector<std::string> split_top_level(const std::string& s) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!trim(cur).empty() || !parts.empty()) parts.push_back(trim(cur));
    return parts;
}

void require_same(const GroupTag& x, const GroupTag& y) {
    if (!(x == y)) throw TagError("group tag mismatch: " + x.str() + " vs " + y.str());
}

} // namespace

GroupTag GroupTag::cyclic(long m) {
    if (m < 1) throw Error("cyclic group order must be positive");
    return {GroupKind::Cyclic, m, {}};
}

GroupTag GroupTag::product(std::vector<GroupTag> factors) {
    if (factors.empty()) throw Error("product group needs at least one factor");
    return {GroupKind::Product, 0, std::move(factors)};
}

std::string GroupTag::str() const {
    switch (kind) {
    case GroupKind::Integers: return "Z";
    case GroupKind::Cyclic: return "Z/" + std::to_string(modulus);
    case GroupKind::Rationals: return "Q";
    case GroupKind::RationalsModIntegers: return "Q/Z";
    case GroupKind::Reals: return "R(alpha)";
    case GroupKind::Product: {
        std::string s = "prod[";
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) s += ",";
            s += factors[i].str();
        }
        return s + "]";
    }
    }
    return "?";
}

GroupTag GroupTag::parse(const std::string& raw) {
    const std::string text = trim(raw);
    if (text == "Z") return integers();
    if (text == "Q") return rationals();
    if (text == "Q/Z") return rationals_mod_integers();
    if (text == "R(alpha)" || text == "R" || text == "R(a)") return reals();
    if (text.rfind("Z/", 0) == 0) {
        const std::string m = text.substr(2);
        if (m.empty() || !std::all_of(m.begin(), m.end(), ::isdigit) || m.size() > 9)
            throw ParseError("", "bad cyclic group tag \"" + text + "\"");
        long v = std::stol(m);
        if (v < 1) throw ParseError("", "cyclic group order must be positive in \"" + text + "\"");
        return cyclic(v);
    }
    if (text.rfind("prod[", 0) == 0 && text.back() == ']') {
        std::vector<GroupTag> fs;
        for (const auto& part : split_top_level(text.substr(5, text.size() - 6))) fs.push_back(parse(part));
        if (fs.empty()) throw ParseError("", "empty product group \"" + text + "\"");
        return product(std::move(fs));
    }
    throw ParseError("", "unknown group tag \"" + text + "\"");
}

// ---------------------------------------------------------------------------

GroupElement GroupElement::zero(const GroupTag& tag) {
    switch (tag.kind) {
    case GroupKind::Integers:
    case GroupKind::Cyclic: return GroupElement(tag, mpz_class(0));
    case GroupKind::Rationals:
    case GroupKind::RationalsModIntegers: return GroupElement(tag, mpq_class(0));
    case GroupKind::Reals: return GroupElement(tag, Scalar());
    case GroupKind::Product: {
        std::vector<GroupElement> parts;
        for (const auto& f : tag.factors) parts.push_back(zero(f));
        return GroupElement(tag, std::move(parts));
    }
    }
    throw Error("unreachable");
}

GroupElement GroupElement::integer(const GroupTag& tag, const mpz_class& value) {
    if (tag.kind == GroupKind::Integers) return GroupElement(tag, value);
    if (tag.kind == GroupKind::Cyclic) return GroupElement(tag, mod_floor(value, tag.modulus));
    if (tag.kind == GroupKind::Rationals || tag.kind == GroupKind::RationalsModIntegers)
        return rational(tag, mpq_class(value));
    if (tag.kind == GroupKind::Reals) return real(Scalar(value));
    throw TagError("integer value for group " + tag.str());
}

GroupElement GroupElement::rational(const GroupTag& tag, const mpq_class& value) {
    mpq_class v = value;
    v.canonicalize();
    if (tag.kind == GroupKind::Rationals) return GroupElement(tag, v);
    if (tag.kind == GroupKind::RationalsModIntegers) return GroupElement(tag, frac(v));
    if (tag.kind == GroupKind::Reals) return real(Scalar(v));
    if (tag.is_integral() && v.get_den() == 1) return integer(tag, v.get_num());
    throw TagError("rational value for group " + tag.str());
}

GroupElement GroupElement::real(const Scalar& value) { return GroupElement(GroupTag::reals(), value); }

GroupElement GroupElement::tuple(const GroupTag& tag, std::vector<GroupElement> parts) {
    if (tag.kind != GroupKind::Product || parts.size() != tag.factors.size())
        throw TagError("tuple shape does not match " + tag.str());
    for (std::size_t i = 0; i < parts.size(); ++i) require_same(parts[i].tag(), tag.factors[i]);
    return GroupElement(tag, std::move(parts));
}

const mpz_class& GroupElement::as_integer() const {
    if (auto p = std::get_if<mpz_class>(&value_)) return *p;
    throw TagError("not an integer-valued group element (" + tag_.str() + ")");
}

const mpq_class& GroupElement::as_rational() const {
    if (auto p = std::get_if<mpq_class>(&value_)) return *p;
    throw TagError("not a rational-valued group element (" + tag_.str() + ")");
}

const Scalar& GroupElement::as_scalar() const {
    if (auto p = std::get_if<Scalar>(&value_)) return *p;
    throw TagError("not a scalar-valued group element (" + tag_.str() + ")");
}

const std::vector<GroupElement>& GroupElement::as_tuple() const {
    if (auto p = std::get_if<std::vector<GroupElement>>(&value_)) return *p;
    throw TagError("not a product group element (" + tag_.str() + ")");
}

bool GroupElement::is_zero() const {
    return std::visit(
        [](const auto& v) -> bool {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::vector<GroupElement>>)
                return std::all_of(v.begin(), v.end(), [](const GroupElement& e) { return e.is_zero(); });
            else if constexpr (std::is_same_v<T, Scalar>)
                return v.is_zero();
            else
                return v == 0;
        },
        value_);
}

GroupElement GroupElement::operator-() const {
    switch (tag_.kind) {
    case GroupKind::Integers:
    case GroupKind::Cyclic: return integer(tag_, -as_integer());
    case GroupKind::Rationals:
    case GroupKind::RationalsModIntegers: return rational(tag_, -as_rational());
    case GroupKind::Reals: return real(-as_scalar());
    case GroupKind::Product: {
        std::vector<GroupElement> parts;
        for (const auto& p : as_tuple()) parts.push_back(-p);
        return GroupElement(tag_, std::move(parts));
    }
    }
    throw Error("unreachable");
}

GroupElement& GroupElement::operator+=(const GroupElement& o) {
    require_same(tag_, o.tag_);
    switch (tag_.kind) {
    case GroupKind::Integers: std::get<mpz_class>(value_) += o.as_integer(); break;
    case GroupKind::Cyclic: {
        auto& v = std::get<mpz_class>(value_);
        v += o.as_integer();
        if (v >= tag_.modulus) v -= tag_.modulus;
        break;
    }
    case GroupKind::Rationals: std::get<mpq_class>(value_) += o.as_rational(); break;
    case GroupKind::RationalsModIntegers: {
        auto& v = std::get<mpq_class>(value_);
        v += o.as_rational();
        if (v >= 1) v -= 1;
        break;
    }
    case GroupKind::Reals: std::get<Scalar>(value_) += o.as_scalar(); break;
    case GroupKind::Product: {
        auto& parts = std::get<std::vector<GroupElement>>(value_);
        const auto& other = o.as_tuple();
        for (std::size_t i = 0; i < parts.size(); ++i) parts[i] += other[i];
        break;
    }
    }
    return *this;
}

GroupElement& GroupElement::operator-=(const GroupElement& o) {
    require_same(tag_, o.tag_);
    return *this += -o;
}

GroupElement GroupElement::times(const mpz_class& n) const {
    switch (tag_.kind) {
    case GroupKind::Integers:
    case GroupKind::Cyclic: return integer(tag_, as_integer() * n);
    case GroupKind::Rationals:
    case GroupKind::RationalsModIntegers: return rational(tag_, as_rational() * mpq_class(n));
    case GroupKind::Reals: return real(as_scalar() * Scalar(n));
    case GroupKind::Product: {
        std::vector<GroupElement> parts;
        for (const auto& p : as_tuple()) parts.push_back(p.times(n));
        return GroupElement(tag_, std::move(parts));
    }
    }
    throw Error("unreachable");
}

bool operator==(const GroupElement& x, const GroupElement& y) {
    return x.tag_ == y.tag_ && x.value_ == y.value_;
}

std::string GroupElement::str() const {
    switch (tag_.kind) {
    case GroupKind::Integers:
    case GroupKind::Cyclic: return as_integer().get_str();
    case GroupKind::Rationals:
    case GroupKind::RationalsModIntegers: return as_rational().get_str();
    case GroupKind::Reals: return as_scalar().str();
    case GroupKind::Product: {
        std::string s = "[";
        const auto& parts = as_tuple();
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ",";
            s += parts[i].str();
        }
        return s + "]";
    }
    }
    return "?";
}

GroupElement GroupElement::parse(const GroupTag& tag, const std::string& raw) {
    const std::string text = trim(raw);
    if (tag.kind == GroupKind::Product) {
        if (text.size() < 2 || text.front() != '[' || text.back() != ']')
            throw ParseError("", "product element must be bracketed: \"" + text + "\"");
        auto parts = split_top_level(text.substr(1, text.size() - 2));
        if (parts.size() != tag.factors.size())
            throw ParseError("", "product element \"" + text + "\" has the wrong number of components");
        std::vector<GroupElement> elems;
        for (std::size_t i = 0; i < parts.size(); ++i) elems.push_back(parse(tag.factors[i], parts[i]));
        return tuple(tag, std::move(elems));
    }
    Scalar s = parse_scalar_expression(text);
    if (tag.kind == GroupKind::Reals) return real(s);
    if (!s.is_rational()) throw ParseError("", "\"" + text + "\" is not rational, required by " + tag.str());
    mpq_class q = s.to_rational();
    if (tag.is_integral()) {
        if (q.get_den() != 1) throw ParseError("", "\"" + text + "\" is not an integer, required by " + tag.str());
        return integer(tag, q.get_num());
    }
    return rational(tag, q);
}

GroupElement group_arith(GroupOp op, std::span<const GroupElement> args) {
    switch (op) {
    case GroupOp::Zero:
        if (args.size() != 1) throw Error("zero takes one argument (for its tag)");
        return GroupElement::zero(args[0].tag());
    case GroupOp::Neg:
        if (args.size() != 1) throw Error("neg takes one argument");
        return -args[0];
    case GroupOp::Add: {
        if (args.empty()) throw Error("add needs at least one argument");
        GroupElement acc = args[0];
        for (std::size_t i = 1; i < args.size(); ++i) acc += args[i];
        return acc;
    }
    }
    throw Error("unreachable");
}

// ---------------------------------------------------------------------------

GroupElement GroupHom::operator()(const GroupElement& x) const {
    require_same(x.tag(), source);
    return map(x);
}

GroupHom GroupHom::identity(const GroupTag& tag) {
    return {tag, tag, "id", [](const GroupElement& x) { return x; }, Scalar(1)};
}

GroupHom GroupHom::zero(const GroupTag& source, const GroupTag& target) {
    return {source, target, "0", [target](const GroupElement&) { return GroupElement::zero(target); }, Scalar(0)};
}

GroupHom GroupHom::multiply(const GroupTag& tag, long n) {
    std::optional<Scalar> factor;
    if (tag.kind == GroupKind::Reals) factor = Scalar(n);
    return {tag, tag, "x" + std::to_string(n), [n](const GroupElement& x) { return x.times(n); }, factor};
}

GroupHom GroupHom::multiply_into(const GroupTag& source, const GroupTag& target, long n) {
    if (source.kind != GroupKind::Cyclic || target.kind != GroupKind::Cyclic || source.modulus * n != target.modulus)
        throw TagError("multiply_into needs Z/m -> Z/(m*n)");
    return {source, target, "x" + std::to_string(n),
            [target, n](const GroupElement& x) { return GroupElement::integer(target, x.as_integer() * n); },
            std::nullopt};
}

GroupHom GroupHom::reduction(const GroupTag& source, long m) {
    const GroupTag target = GroupTag::cyclic(m);
    const bool ok = source.kind == GroupKind::Integers || (source.kind == GroupKind::Cyclic && source.modulus % m == 0);
    if (!ok) throw TagError("no reduction " + source.str() + " -> " + target.str());
    return {source, target, "mod " + std::to_string(m),
            [target](const GroupElement& x) { return GroupElement::integer(target, x.as_integer()); }, std::nullopt};
}

GroupHom GroupHom::inclusion(const GroupTag& source, const GroupTag& target) {
    const bool ok = (source.kind == GroupKind::Integers &&
                     (target.kind == GroupKind::Rationals || target.kind == GroupKind::Reals)) ||
                    (source.kind == GroupKind::Rationals && target.kind == GroupKind::Reals);
    if (!ok) throw TagError("no inclusion " + source.str() + " -> " + target.str());
    return {source, target, "incl",
            [target](const GroupElement& x) {
                if (x.tag().kind == GroupKind::Integers) return GroupElement::integer(target, x.as_integer());
                return GroupElement::rational(target, x.as_rational());
            },
            std::nullopt};
}

GroupHom GroupHom::fractional_part() {
    const GroupTag target = GroupTag::rationals_mod_integers();
    return {GroupTag::rationals(), target, "frac",
            [target](const GroupElement& x) { return GroupElement::rational(target, x.as_rational()); }, std::nullopt};
}

GroupHom GroupHom::scale(const Scalar& factor) {
    return {GroupTag::reals(), GroupTag::reals(), "x(" + factor.str() + ")",
            [factor](const GroupElement& x) { return GroupElement::real(x.as_scalar() * factor); }, factor};
}

// ---------------------------------------------------------------------------

CoefficientSES CoefficientSES::integers_mod(long m) {
    const GroupTag z = GroupTag::integers();
    const GroupTag zm = GroupTag::cyclic(m);
    CoefficientSES ses{z, z, zm, GroupHom::multiply(z, m), GroupHom::reduction(z, m), {}, {}, "Z->Z->Z/" + std::to_string(m)};
    ses.lift_oracle = [z](const GroupElement& c) { return GroupElement::integer(z, c.as_integer()); };
    ses.preimage = [z, m](const GroupElement& b) -> std::optional<GroupElement> {
        mpz_class q, r;
        mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), b.as_integer().get_mpz_t(), static_cast<unsigned long>(m));
        if (r != 0) return std::nullopt;
        return GroupElement::integer(z, q);
    };
    return ses;
}

CoefficientSES CoefficientSES::rationals_mod_integers() {
    const GroupTag z = GroupTag::integers();
    const GroupTag q = GroupTag::rationals();
    CoefficientSES ses{z, q, GroupTag::rationals_mod_integers(), GroupHom::inclusion(z, q), GroupHom::fractional_part(),
                       {}, {}, "Z->Q->Q/Z"};
    ses.lift_oracle = [q](const GroupElement& c) { return GroupElement::rational(q, c.as_rational()); };
    ses.preimage = [z](const GroupElement& b) -> std::optional<GroupElement> {
        if (b.as_rational().get_den() != 1) return std::nullopt;
        return GroupElement::integer(z, b.as_rational().get_num());
    };
    return ses;
}

CoefficientSES CoefficientSES::cyclic(long m, long n) {
    const GroupTag a = GroupTag::cyclic(m);
    const GroupTag b = GroupTag::cyclic(m * n);
    const GroupTag c = GroupTag::cyclic(n);
    CoefficientSES ses{a, b, c, GroupHom::multiply_into(a, b, n), GroupHom::reduction(b, n), {}, {},
                       a.str() + "->" + b.str() + "->" + c.str()};
    ses.lift_oracle = [b](const GroupElement& x) { return GroupElement::integer(b, x.as_integer()); };
    ses.preimage = [a, n](const GroupElement& x) -> std::optional<GroupElement> {
        mpz_class q, r;
        mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), x.as_integer().get_mpz_t(), static_cast<unsigned long>(n));
        if (r != 0) return std::nullopt;
        return GroupElement::integer(a, q);
    };
    return ses;
}

CoefficientSES CoefficientSES::parse(const std::string& raw) {
    std::string text;
    for (char c : raw)
        if (c != ' ') text += c;
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (;;) {
        auto pos = text.find("->", start);
        parts.push_back(text.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
        if (pos == std::string::npos) break;
        start = pos + 2;
    }
    if (parts.size() != 3) throw ParseError("--ses", "expected A->B->C, got \"" + raw + "\"");
    const GroupTag a = GroupTag::parse(parts[0]), b = GroupTag::parse(parts[1]), c = GroupTag::parse(parts[2]);
    if (a.kind == GroupKind::Integers && b.kind == GroupKind::Integers && c.kind == GroupKind::Cyclic)
        return integers_mod(c.modulus);
    if (a.kind == GroupKind::Integers && b.kind == GroupKind::Rationals && c.kind == GroupKind::RationalsModIntegers)
        return rationals_mod_integers();
    if (a.kind == GroupKind::Cyclic && b.kind == GroupKind::Cyclic && c.kind == GroupKind::Cyclic &&
        a.modulus * c.modulus == b.modulus)
        return cyclic(a.modulus, c.modulus);
    throw ParseError("--ses", "unsupported short exact sequence \"" + raw + "\"");
}

GroupElement lift(const CoefficientSES& ses, const GroupElement& c) {
    require_same(c.tag(), ses.c);
    return ses.lift_oracle(c);
}

} // namespace diffcech
