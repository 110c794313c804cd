#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "starcore/common.hpp"
#include "starcore/polynomial.hpp"
#include "starcore/ring.hpp"

namespace starcore {

// Recursive-descent parser for polynomial expressions.
//
//   expr    := term (('+' | '-') term)*
//   term    := ['-'] factor ('*'? factor)*        adjacency multiplies
//   factor  := primary ('^' integer)?
//   primary := integer | variable | '(' expr ')'
//
// Variable names are matched longest-first against the ring's variables, so
// "xy^3z^6" reads as x*y^3*z^6 when x, y, z are ring variables. Integer
// literals are reduced mod p while lexing.
class PolyParser {
public:
    PolyParser(std::string_view src, Ring ring, std::size_t line_base = 1,
               std::size_t col_base = 1)
        : src_(src), ring_(std::move(ring)), line_(line_base), col_(col_base) {}

    Polynomial parse() {
        Polynomial result = parse_expr();
        skip_ws();
        if (!at_end()) fail("unexpected trailing input");
        return result;
    }

private:
    Polynomial parse_expr() {
        Polynomial acc = parse_term();
        for (;;) {
            skip_ws();
            if (consume('+')) {
                acc = acc + parse_term();
            } else if (consume('-')) {
                acc = acc - parse_term();
            } else {
                return acc;
            }
        }
    }

    Polynomial parse_term() {
        skip_ws();
        bool negate = consume('-');
        Polynomial acc = parse_factor();
        for (;;) {
            skip_ws();
            if (consume('*')) {
                acc = acc * parse_factor();
                continue;
            }
            char c = peek();
            if (std::isalpha(static_cast<unsigned char>(c)) ||
                std::isdigit(static_cast<unsigned char>(c)) || c == '(') {
                acc = acc * parse_factor();
                continue;
            }
            break;
        }
        return negate ? -acc : acc;
    }

    Polynomial parse_factor() {
        Polynomial base = parse_primary();
        skip_ws();
        if (consume('^')) {
            skip_ws();
            if (peek() == '-') fail("negative exponent");
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                fail("expected exponent");
            std::uint64_t e = 0;
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                e = e * 10 + static_cast<std::uint64_t>(peek() - '0');
                if (e > 0xffffffffull) fail("exponent too large");
                advance();
            }
            return base.pow(e);
        }
        return base;
    }

    Polynomial parse_primary() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            advance();
            Polynomial inner = parse_expr();
            skip_ws();
            if (!consume(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::int64_t v = 0;
            std::uint32_t p = ring_.p();
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                v = (v * 10 + (peek() - '0')) % p;
                advance();
            }
            return Polynomial::constant(ring_, v);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t best_len = 0, best_index = 0;
            for (std::size_t i = 0; i < ring_.var_count(); ++i) {
                const std::string& name = ring_.var_name(i);
                if (name.size() > best_len && src_.substr(pos_, name.size()) == name) {
                    best_len = name.size();
                    best_index = i;
                }
            }
            if (best_len == 0) {
                std::size_t len = 0;
                while (pos_ + len < src_.size() &&
                       (std::isalnum(static_cast<unsigned char>(src_[pos_ + len])) ||
                        src_[pos_ + len] == '_'))
                    ++len;
                fail("unknown variable '" + std::string(src_.substr(pos_, len)) + "'");
            }
            for (std::size_t i = 0; i < best_len; ++i) advance();
            return Polynomial::variable(ring_, best_index);
        }
        if (at_end()) fail("unexpected end of input");
        fail(std::string("unexpected character '") + c + "'");
        return Polynomial::zero(ring_);  // unreachable
    }

    bool at_end() const { return pos_ >= src_.size(); }
    char peek() const { return at_end() ? '\0' : src_[pos_]; }

    void advance() {
        if (at_end()) return;
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    bool consume(char c) {
        if (peek() == c) {
            advance();
            return true;
        }
        return false;
    }

    void skip_ws() {
        while (!at_end() && (src_[pos_] == ' ' || src_[pos_] == '\t' ||
                             src_[pos_] == '\r' || src_[pos_] == '\n'))
            advance();
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, line_, col_);
    }

    std::string_view src_;
    Ring ring_;
    std::size_t pos_ = 0;
    std::size_t line_;
    std::size_t col_;
};

inline Polynomial parse_poly(std::string_view src, const Ring& ring,
                             std::size_t line_base = 1, std::size_t col_base = 1) {
    return PolyParser(src, ring, line_base, col_base).parse();
}

}  // namespace starcore
