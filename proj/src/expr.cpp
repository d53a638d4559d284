#include "woundlab/expr.hpp"

#include <cctype>

namespace woundlab {

namespace {

class Parser {
public:
    Parser(const std::string& s, int p) : s_(s), p_(p) {}

    RatFunc parse() {
        RatFunc r = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError("parse error at position " + std::to_string(pos_) + ": " + msg);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    RatFunc expr() {
        RatFunc r = eat('-') ? -term() : term();
        for (;;) {
            if (eat('+'))
                r = r + term();
            else if (eat('-'))
                r = r - term();
            else
                return r;
        }
    }

    RatFunc term() {
        RatFunc r = factor();
        for (;;) {
            if (eat('*'))
                r = r * factor();
            else if (eat('/')) {
                RatFunc d = factor();
                if (d.is_zero()) fail("division by zero");
                r = r / d;
            } else
                return r;
        }
    }

    RatFunc factor() {
        RatFunc b = base();
        if (eat('^')) {
            long long e = integer();
            b = b.pow(e);
        }
        return b;
    }

    long long integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected integer");
        return std::stoll(s_.substr(start, pos_ - start));
    }

    RatFunc base() {
        char c = peek();
        if (c == '(') {
            eat('(');
            RatFunc r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (c == '-') {
            eat('-');
            return -factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return RatFunc::constant(p_, integer());
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            ++pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            return RatFunc::variable(p_, s_.substr(start, pos_ - start));
        }
        fail("unexpected character");
    }

    const std::string& s_;
    int p_;
    size_t pos_ = 0;
};

} // namespace

RatFunc parse_ratfunc(const std::string& text, int p) { return Parser(text, p).parse(); }

} // namespace woundlab
