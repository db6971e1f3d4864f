// Copyright 2026 The wshare Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wshare/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace wshare {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

[[noreturn]] void bad(std::string_view text) {
  throw std::invalid_argument("not a rational number: '" + std::string(text) +
                              "'");
}

mpz_class pow10(unsigned long k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
  return r;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

void Rational::add_mul(const Rational& b, const Rational& c) {
  thread_local mpq_class t;
  mpq_mul(t.get_mpq_t(), b.v_.get_mpq_t(), c.v_.get_mpq_t());
  mpq_add(v_.get_mpq_t(), v_.get_mpq_t(), t.get_mpq_t());
}

void Rational::sub_mul(const Rational& b, const Rational& c) {
  thread_local mpq_class t;
  mpq_mul(t.get_mpq_t(), b.v_.get_mpq_t(), c.v_.get_mpq_t());
  mpq_sub(v_.get_mpq_t(), v_.get_mpq_t(), t.get_mpq_t());
}

Rational Rational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) bad(text);

  std::string_view body = s;
  bool negative = false;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const std::string_view p = body.substr(0, slash);
    const std::string_view q = body.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) bad(text);
    const mpz_class num(std::string(p), 10);
    const mpz_class den(std::string(q), 10);
    if (den == 0) bad(text);
    mpq_class v(negative ? mpz_class(-num) : num, den);
    v.canonicalize();
    return Rational(v);
  }

  long exponent = 0;
  if (const auto e = body.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp = body.substr(e + 1);
    bool exp_negative = false;
    if (!exp.empty() && (exp.front() == '+' || exp.front() == '-')) {
      exp_negative = exp.front() == '-';
      exp.remove_prefix(1);
    }
    if (!all_digits(exp) || exp.size() > 6) bad(text);
    exponent = std::stol(std::string(exp));
    if (exp_negative) exponent = -exponent;
    body = body.substr(0, e);
  }

  std::string digits;
  if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = body.substr(0, dot);
    const std::string_view frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) bad(text);
    if ((!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      bad(text);
    }
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    if (!all_digits(body)) bad(text);
    digits = std::string(body);
  }

  mpz_class num(digits, 10);
  if (negative) num = -num;
  mpq_class v;
  if (exponent >= 0) {
    v = mpq_class(num * pow10(static_cast<unsigned long>(exponent)));
  } else {
    v = mpq_class(num, pow10(static_cast<unsigned long>(-exponent)));
    v.canonicalize();
  }
  return Rational(v);
}

std::string Rational::str() const { return v_.get_str(); }

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }
Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Rational& x) {
  return os << x.str();
}

Rational sum(const RationalVector& xs) {
  Rational s;
  for (const auto& x : xs) s += x;
  return s;
}

std::string to_string(const RationalVector& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += xs[i].str();
  }
  return out + ")";
}

}  // namespace wshare
