// Copyright 2026 The hypsign Authors
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

#include "hypsign/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

#include "hypsign/errors.hpp"

namespace hypsign {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

}  // namespace

Rational::Rational(long num, long den) : value_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    std::size_t offset = 0;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
        offset = 1;
    }
    if (body.empty()) throw ParseError("empty rational", std::string(text), offset);

    mpq_class q;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto num = body.substr(0, slash);
        auto den = body.substr(slash + 1);
        if (!all_digits(num)) throw ParseError("bad numerator", std::string(text), offset);
        if (!all_digits(den)) throw ParseError("bad denominator", std::string(text), offset + slash + 1);
        mpz_class n(std::string(num), 10), d(std::string(den), 10);
        if (d == 0) throw ParseError("zero denominator", std::string(text), offset + slash + 1);
        q = mpq_class(n, d);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        auto whole = body.substr(0, dot);
        auto frac = body.substr(dot + 1);
        if (!whole.empty() && !all_digits(whole))
            throw ParseError("bad integer part", std::string(text), offset);
        if (!frac.empty() && !all_digits(frac))
            throw ParseError("bad fractional part", std::string(text), offset + dot + 1);
        if (whole.empty() && frac.empty())
            throw ParseError("bare decimal point", std::string(text), offset + dot);
        std::string digits = std::string(whole) + std::string(frac);
        mpz_class n(digits.empty() ? std::string("0") : digits, 10);
        mpz_class d;
        mpz_ui_pow_ui(d.get_mpz_t(), 10, frac.size());
        q = mpq_class(n, d);
    } else {
        if (!all_digits(body)) {
            std::size_t pos = 0;
            while (pos < body.size() && std::isdigit(static_cast<unsigned char>(body[pos]))) ++pos;
            throw ParseError("unexpected character", std::string(text), offset + pos);
        }
        q = mpq_class(mpz_class(std::string(body), 10));
    }
    q.canonicalize();
    if (negative) q = -q;
    return Rational(q);
}

Rational Rational::round_to_denominator(double x, std::uint64_t den) {
    if (!std::isfinite(x)) throw std::domain_error("Rational: non-finite value");
    mpz_class n;
    mpz_set_d(n.get_mpz_t(), std::floor(x * static_cast<double>(den) + 0.5));
    mpz_class d;
    mpz_set_ui(d.get_mpz_t(), static_cast<unsigned long>(den));
    return Rational(mpq_class(n, d));
}

Rational Rational::pow(const Rational &base, unsigned exponent) {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.value_.get_num_mpz_t(), exponent);
    mpz_pow_ui(d.get_mpz_t(), base.value_.get_den_mpz_t(), exponent);
    return Rational(mpq_class(n, d));
}

std::string Rational::str() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1 / value_));
}

Rational &Rational::operator/=(const Rational &o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    value_ /= o.value_;
    return *this;
}

}  // namespace hypsign
