#pragma once

#include "gk/integer.hpp"

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace gk::expr {

/// Evaluates the order expressions printed in the torus tables, e.g.
/// "(εq+1)((εq)^3-1)" or "q^6+(εq)^3+1". Multiplication is juxtaposition
/// of parenthesized groups; "εq" substitutes sign(eps)*q and plain "q"
/// stays sign-independent.
class Evaluator {
  public:
    Evaluator(std::string_view text, const Integer& q, Sign eps) : text_(text), q_(q), eps_(eps) {}

    Integer run() {
        Integer v = expression();
        skip_spaces();
        if (pos_ != text_.size()) throw std::domain_error("expression: trailing input in '" + std::string(text_) + "'");
        return v;
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;
    Integer q_;
    Sign eps_;

    void skip_spaces() {
        while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
    }
    bool consume(char c) {
        skip_spaces();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool consume_epsilon() {
        skip_spaces();
        // "ε" is the two UTF-8 bytes 0xCE 0xB5
        if (pos_ + 1 < text_.size() && static_cast<unsigned char>(text_[pos_]) == 0xCE &&
            static_cast<unsigned char>(text_[pos_ + 1]) == 0xB5) {
            pos_ += 2;
            return true;
        }
        return false;
    }
    bool at_atom_start() {
        skip_spaces();
        if (pos_ >= text_.size()) return false;
        char c = text_[pos_];
        if (c == '(' || c == 'q' || std::isdigit(static_cast<unsigned char>(c))) return true;
        return static_cast<unsigned char>(c) == 0xCE;  // epsilon
    }

    Integer expression() {
        Integer v = term();
        while (true) {
            if (consume('+'))
                v += term();
            else if (consume('-'))
                v -= term();
            else
                return v;
        }
    }
    Integer term() {
        Integer v = factor();
        while (at_atom_start()) v *= factor();
        return v;
    }
    Integer factor() {
        Integer v = atom();
        if (consume('^')) {
            unsigned long e = number();
            v = pow(v, static_cast<unsigned>(e));
        }
        return v;
    }
    Integer atom() {
        skip_spaces();
        if (consume_epsilon()) {
            if (!consume('q')) throw std::domain_error("expression: expected q after epsilon");
            return sign_value(eps_) * q_;
        }
        if (consume('q')) return q_;
        if (consume('(')) {
            Integer v = expression();
            if (!consume(')')) throw std::domain_error("expression: missing ')'");
            return v;
        }
        return Integer(number());
    }
    unsigned long number() {
        skip_spaces();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw std::domain_error("expression: expected a number in '" + std::string(text_) + "'");
        return std::stoul(std::string(text_.substr(start, pos_ - start)));
    }
};

inline Integer eval(std::string_view text, const Integer& q, Sign eps) {
    return Evaluator(text, q, eps).run();
}

/// Splits a printed table cell like "(Z_{εq-1})^2×Z_{q^2-1}" into its cyclic
/// factors' order expressions, expanding the power shorthand.
inline std::vector<std::string> split_cell(std::string_view cell) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    const auto expect = [&](std::string_view token) {
        if (cell.substr(pos, token.size()) != token)
            throw std::domain_error("cell: expected '" + std::string(token) + "' in '" + std::string(cell) + "'");
        pos += token.size();
    };
    while (pos < cell.size()) {
        bool wrapped = cell[pos] == '(';
        if (wrapped) ++pos;
        expect("Z_{");
        unsigned depth = 0;
        std::size_t start = pos;
        for (;; ++pos) {
            if (pos >= cell.size()) throw std::domain_error("cell: missing '}' in '" + std::string(cell) + "'");
            if (cell[pos] == '{') ++depth;
            if (cell[pos] == '}') {
                if (depth == 0) break;
                --depth;
            }
        }
        std::string inner(cell.substr(start, pos - start));
        ++pos;  // '}'
        unsigned long copies = 1;
        if (wrapped) {
            expect(")");
            if (pos < cell.size() && cell[pos] == '^') {
                ++pos;
                std::size_t s = pos;
                while (pos < cell.size() && std::isdigit(static_cast<unsigned char>(cell[pos]))) ++pos;
                if (s == pos) throw std::domain_error("cell: missing exponent in '" + std::string(cell) + "'");
                copies = std::stoul(std::string(cell.substr(s, pos - s)));
            }
        }
        for (unsigned long i = 0; i < copies; ++i) out.push_back(inner);
        if (pos < cell.size()) {
            // factors are joined by the UTF-8 multiplication sign 0xC3 0x97
            if (pos + 1 < cell.size() && static_cast<unsigned char>(cell[pos]) == 0xC3 &&
                static_cast<unsigned char>(cell[pos + 1]) == 0x97)
                pos += 2;
            else
                throw std::domain_error("cell: expected separator in '" + std::string(cell) + "'");
        }
    }
    return out;
}

}  // namespace gk::expr
