#ifndef SURJ_PARSER_HPP
#define SURJ_PARSER_HPP

#include <cctype>
#include <string>

#include "surj/polynomial.hpp"

namespace surj {

namespace detail {

// Grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' uint)?
//   atom   := '(' expr ')' | rational | variable
//   rational := uint ('/' uint)?
class PolyParser {
   public:
    PolyParser(const std::string& text, RingPtr ring)
        : text_(text), ring_(std::move(ring)) {}

    Polynomial parse() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

   private:
    const std::string& text_;
    RingPtr ring_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }
    bool accept(char c) {
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expr() {
        bool neg = false;
        skip_ws();
        if (accept('-'))
            neg = true;
        else
            accept('+');
        Polynomial acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (accept('+'))
                acc = acc + term();
            else if (accept('-'))
                acc = acc - term();
            else
                break;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (accept('*')) acc = acc * factor();
        return acc;
    }

    Polynomial factor() {
        Polynomial base = atom();
        if (accept('^')) {
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (pos_ == start) fail("expected non-negative integer exponent");
            int n = std::stoi(text_.substr(start, pos_ - start));
            return base.pow(n);
        }
        return base;
    }

    Polynomial atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return variable();
        fail(std::string("unexpected character '") + c + "'");
    }

    Polynomial number() {
        std::string digits = read_digits();
        if (peek('/')) {
            ++pos_;
            std::string den = read_digits();
            if (den.find_first_not_of('0') == std::string::npos) fail("zero denominator");
            return Polynomial::constant(ring_, parse_rational(digits + "/" + den));
        }
        return Polynomial::constant(ring_, parse_rational(digits));
    }

    std::string read_digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start) fail("expected digits");
        return text_.substr(start, pos_ - start);
    }

    Polynomial variable() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        int idx = ring_->index_of(name);
        if (idx < 0) {
            pos_ = start;
            fail("unknown variable name: " + name);
        }
        return Polynomial::variable(ring_, static_cast<std::size_t>(idx));
    }
};

}  // namespace detail

inline Polynomial parse_polynomial(const std::string& text, RingPtr ring) {
    return detail::PolyParser(text, std::move(ring)).parse();
}

}  // namespace surj

#endif
