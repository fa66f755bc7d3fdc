#include "diffcech/expr.hpp"

#include "diffcech/errors.hpp"

#include <cctype>

namespace diffcech {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    MPoly parse() {
        MPoly v = expression();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("", "cannot parse \"" + s_ + "\" at offset " + std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    MPoly expression() {
        MPoly v = term();
        for (;;) {
            if (accept('+')) v += term();
            else if (accept('-')) v -= term();
            else return v;
        }
    }

    MPoly term() {
        MPoly v = unary();
        for (;;) {
            if (accept('*')) {
                v *= unary();
            } else if (accept('/')) {
                MPoly d = unary();
                if (!d.is_constant()) fail("division by an expression containing x-variables");
                Scalar c = d.constant_value();
                if (c.is_zero()) fail("division by zero");
                v *= c.inverse();
            } else {
                return v;
            }
        }
    }

    MPoly unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    MPoly power() {
        MPoly base = atom();
        if (!accept('^')) return base;
        bool negative = accept('-');
        skip_ws();
        long e = integer();
        if (negative) {
            if (!base.is_constant()) fail("negative exponent on an x-dependent base");
            Scalar c = base.constant_value();
            if (c.is_zero()) fail("zero to a negative power");
            return MPoly(c.pow(-e));
        }
        return base.pow(static_cast<int>(e));
    }

    long integer() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        if (pos_ - start > 6) fail("exponent too large");
        return std::stol(s_.substr(start, pos_ - start));
    }

    MPoly atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            MPoly v = expression();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return MPoly(Scalar(mpz_class(s_.substr(start, pos_ - start))));
        }
        if (s_.compare(pos_, 5, "alpha") == 0) {
            pos_ += 5;
            return MPoly(Scalar::alpha());
        }
        if (c == 'a') {
            ++pos_;
            return MPoly(Scalar::alpha());
        }
        if (c == 'x') {
            ++pos_;
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("variable x needs an index, e.g. x0");
            if (pos_ - start > 3) fail("variable index too large");
            return MPoly::variable(std::stoi(s_.substr(start, pos_ - start)));
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

} // namespace

MPoly parse_polynomial_expression(const std::string& text) { return Parser(text).parse(); }

Scalar parse_scalar_expression(const std::string& text) {
    MPoly p = parse_polynomial_expression(text);
    if (!p.is_constant()) throw ParseError("", "\"" + text + "\" is not a scalar (contains x-variables)");
    return p.constant_value();
}

} // namespace diffcech
