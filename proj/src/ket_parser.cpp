// Copyright 2026 The threepi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "threepi/ket_parser.hpp"

#include <cctype>
#include <charconv>
#include <string>
#include <vector>

#include "threepi/error.hpp"

namespace threepi {

namespace {

class KetParser {
  public:
    explicit KetParser(std::string_view src) : src_(src) {}

    PureState parse(bool normalize) {
        parse_term(1.0);
        for (;;) {
            skip_ws();
            if (at_end()) break;
            const char c = peek();
            if (c == '+') {
                ++pos_;
                parse_term(1.0);
            } else if (c == '-') {
                ++pos_;
                parse_term(-1.0);
            } else {
                fail("expected '+', '-', or end of expression");
            }
        }
        return PureState::from_amplitudes(n_qubits_, std::move(amps_), normalize);
    }

  private:
    bool at_end() const { return pos_ >= src_.size(); }
    char peek() const { return src_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw Error::at_offset(errc::syntax_error, pos_, message);
    }

    // term := coeff? ket
    void parse_term(double sign) {
        skip_ws();
        if (at_end()) fail("expected a term");
        Complex coeff(sign, 0.0);
        if (peek() != '|') {
            coeff *= parse_coeff();
            skip_ws();
            while (!at_end() && peek() == '*') {
                ++pos_;
                skip_ws();
            }
        }
        parse_ket_token(coeff);
    }

    // coeff := real | '(' real (('+'|'-') real 'i')? ')'
    Complex parse_coeff() {
        skip_ws();
        if (at_end()) fail("expected a coefficient");
        if (peek() == '(') {
            ++pos_;
            skip_ws();
            const double re = parse_real();
            double im = 0.0;
            skip_ws();
            if (!at_end() && (peek() == '+' || peek() == '-')) {
                const double s = peek() == '+' ? 1.0 : -1.0;
                ++pos_;
                skip_ws();
                im = s * parse_real();
                skip_ws();
                if (at_end() || peek() != 'i') fail("expected 'i' after imaginary part");
                ++pos_;
                skip_ws();
            }
            if (at_end() || peek() != ')') fail("expected ')'");
            ++pos_;
            return Complex(re, im);
        }
        return Complex(parse_real(), 0.0);
    }

    double parse_real() {
        skip_ws();
        const std::size_t start = pos_;
        if (!at_end() && (peek() == '+' || peek() == '-')) ++pos_;
        const std::size_t digits_start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (!at_end() && peek() == '.') {
            ++pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        }
        if (pos_ == digits_start || (pos_ == digits_start + 1 && src_[digits_start] == '.')) {
            pos_ = start;
            fail("expected a number");
        }
        if (!at_end() && (peek() == 'e' || peek() == 'E')) {
            const std::size_t exp_mark = pos_;
            ++pos_;
            if (!at_end() && (peek() == '+' || peek() == '-')) ++pos_;
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
                pos_ = exp_mark;
                fail("malformed exponent");
            }
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        }
        double value = 0.0;
        const char* first = src_.data() + start;
        const char* last = src_.data() + pos_;
        if (*first == '+') ++first;  // from_chars rejects a leading '+'
        const auto res = std::from_chars(first, last, value);
        if (res.ec != std::errc() || res.ptr != last) {
            pos_ = start;
            fail("unparseable number");
        }
        return value;
    }

    // ket := '|' bit+ '>' with no interior whitespace
    void parse_ket_token(Complex coeff) {
        skip_ws();
        if (at_end() || peek() != '|') fail("expected '|'");
        const std::size_t ket_start = pos_;
        ++pos_;
        std::size_t index = 0;
        int bits = 0;
        while (!at_end() && (peek() == '0' || peek() == '1')) {
            index = (index << 1) | static_cast<std::size_t>(peek() - '0');
            ++bits;
            ++pos_;
        }
        if (bits == 0) fail("expected at least one bit inside the ket");
        if (bits > 10) fail("kets support at most 10 qubits");
        if (at_end() || peek() != '>') fail("expected '>'");
        ++pos_;

        if (n_qubits_ == 0) {
            n_qubits_ = bits;
            amps_.assign(std::size_t(1) << bits, Complex(0.0, 0.0));
        } else if (bits != n_qubits_) {
            throw Error::at_offset(errc::mixed_qubit_counts, ket_start,
                                   "all kets in one expression must have the same bit count");
        }
        amps_[index] += coeff;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int n_qubits_ = 0;
    std::vector<Complex> amps_;
};

}  // namespace

PureState parse_ket(std::string_view expr, bool normalize) {
    return KetParser(expr).parse(normalize);
}

}  // namespace threepi
