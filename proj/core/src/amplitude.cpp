// Copyright 2026 The wkqfa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wkqfa/amplitude.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

#include "wkqfa/errors.hpp"

namespace wkqfa {

namespace {

class ExprParser {
  public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    Complex parse() {
        Complex value = parse_term();
        skip_spaces();
        if (peek() == '+' || peek() == '-') {
            char op = take();
            Complex rhs = parse_term();
            value = (op == '+') ? value + rhs : value - rhs;
        }
        skip_spaces();
        if (pos_ != text_.size()) {
            fail("unexpected trailing input");
        }
        if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
            fail("expression does not evaluate to a finite value");
        }
        return value;
    }

  private:
    Complex parse_term() {
        skip_spaces();
        if (peek() == 'i') {
            take();
            return Complex(0.0, 1.0);
        }
        Complex coeff = parse_coeff();
        skip_spaces();
        if (peek() == '*') {
            take();
            skip_spaces();
            if (take() != 'i') {
                fail("expected 'i' after '*'");
            }
            return coeff * Complex(0.0, 1.0);
        }
        return coeff;
    }

    // coeff := rational | rational "/" "sqrt(" n ")" | "exp(2*pi*i*" k "/" n ")"
    Complex parse_coeff() {
        skip_spaces();
        if (starts_with("exp(")) {
            expect_literal("exp(2*pi*i*");
            std::int64_t k = parse_integer();
            expect_char('/');
            std::int64_t n = parse_positive_integer();
            expect_char(')');
            double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
            return Complex(std::cos(angle), std::sin(angle));
        }
        std::int64_t numer = parse_integer();
        double value = static_cast<double>(numer);
        skip_spaces();
        if (peek() == '/') {
            take();
            skip_spaces();
            if (starts_with("sqrt(")) {
                expect_literal("sqrt(");
                std::int64_t n = parse_positive_integer();
                expect_char(')');
                return Complex(value / std::sqrt(static_cast<double>(n)), 0.0);
            }
            value /= static_cast<double>(parse_positive_integer());
            skip_spaces();
            if (peek() == '/') {
                take();
                skip_spaces();
                expect_literal("sqrt(");
                std::int64_t n = parse_positive_integer();
                expect_char(')');
                value /= std::sqrt(static_cast<double>(n));
            }
        }
        return Complex(value, 0.0);
    }

    std::int64_t parse_integer() {
        skip_spaces();
        std::size_t start = pos_;
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            take();
        }
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
            fail("expected integer");
        }
        std::int64_t value = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (take() - '0');
            if (value > (std::int64_t{1} << 53)) {
                pos_ = start;
                fail("integer literal too large");
            }
        }
        return negative ? -value : value;
    }

    std::int64_t parse_positive_integer() {
        std::size_t start = pos_;
        std::int64_t value = parse_integer();
        if (value <= 0) {
            pos_ = start;
            fail("positive integer required (division by zero or negative)");
        }
        return value;
    }

    void expect_literal(std::string_view literal) {
        for (char c : literal) {
            if (peek() != c) {
                fail("expected \"" + std::string(literal) + "\"");
            }
            take();
        }
    }

    void expect_char(char c) {
        if (peek() != c) {
            fail(std::string("expected '") + c + "'");
        }
        take();
    }

    bool starts_with(std::string_view prefix) const {
        return text_.substr(pos_, prefix.size()) == prefix;
    }

    void skip_spaces() {
        while (pos_ < text_.size() && text_[pos_] == ' ') {
            ++pos_;
        }
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char take() { return pos_ < text_.size() ? text_[pos_++] : '\0'; }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("amplitude expression: " + what + " at position " +
                         std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Complex parse_amplitude(std::string_view text) {
    return ExprParser(text).parse();
}

bool approx_eq(Complex a, Complex b, double tol) {
    return std::abs(a - b) <= tol;
}

} // namespace wkqfa
