#include "dcla/pbw_text.hpp"

#include <cctype>
#include <string>

namespace dcla::pbw {

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    Expression parse() {
        Expression e = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    std::string digits() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return std::string(s_.substr(start, pos_ - start));
    }

    std::uint32_t degree() {
        std::string d = digits();
        if (d.size() > 9) fail("degree too large");
        return static_cast<std::uint32_t>(std::stoul(d));
    }

    Expression expr() {
        Expression e;
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        Expression first = term();
        e = negate ? -first : first;
        for (;;) {
            if (accept('+'))
                e += term();
            else if (accept('-'))
                e -= term();
            else
                return e;
        }
    }

    Expression term() {
        Expression e = factor();
        while (accept('*')) e = e * factor();
        return e;
    }

    Expression factor() {
        if (accept('-')) return -factor();
        Expression base = primary();
        if (accept('^')) {
            std::string d = digits();
            if (d.size() > 4) fail("exponent too large");
            base = base.pow(static_cast<unsigned>(std::stoul(d)));
        }
        return base;
    }

    Expression primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num(digits(), 10);
            mpz_class den = 1;
            if (accept('/')) {
                den = mpz_class(digits(), 10);
                if (den == 0) fail("zero denominator");
            }
            return Expression(QPolynomial(Rational(num, den)));
        }
        if (c == 'Q') {
            ++pos_;
            return Expression(Q());
        }
        if (c == 'X') {
            ++pos_;
            Kind k;
            if (accept('+'))
                k = Kind::Xplus;
            else if (accept('-'))
                k = Kind::Xminus;
            else
                fail("expected '+' or '-' after X");
            expect('(');
            std::uint32_t t = degree();
            expect(')');
            return Expression(Generator{k, t});
        }
        if (c == 'J') {
            ++pos_;
            expect('(');
            std::uint32_t t = degree();
            expect(')');
            return Expression(Jg(t));
        }
        if (c == '(') {
            ++pos_;
            Expression e = expr();
            expect(')');
            return e;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

Expression parse_expression(std::string_view text) { return Parser(text).parse(); }

}  // namespace dcla::pbw
