// Copyright 2026 The macrules Authors
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

#include "mac/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace mac {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::optional<Rational> Rational::parse(std::string_view s) {
  // Grammar: '-'? digits ('/' digits)?   with a nonzero denominator.
  std::size_t pos = 0;
  if (pos < s.size() && s[pos] == '-') ++pos;
  std::size_t num_begin = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == num_begin) return std::nullopt;
  std::size_t den_begin = 0, den_end = 0;
  if (pos < s.size()) {
    if (s[pos] != '/') return std::nullopt;
    ++pos;
    den_begin = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == den_begin || pos != s.size()) return std::nullopt;
    den_end = pos;
  }
  mpq_class v;
  if (den_end > den_begin) {
    mpz_class den(std::string(s.substr(den_begin, den_end - den_begin)), 10);
    if (den == 0) return std::nullopt;
    mpz_class num(std::string(s.substr(0, den_begin - 1)), 10);
    v = mpq_class(num, den);
  } else {
    v = mpq_class(mpz_class(std::string(s), 10));
  }
  v.canonicalize();
  return Rational(std::move(v));
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

}  // namespace mac
