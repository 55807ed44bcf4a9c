// Copyright 2026 The tlhom Authors.
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

#ifndef TLHOM_SCALARS_HPP_
#define TLHOM_SCALARS_HPP_

#include <gmpxx.h>

#include <complex>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace tlhom {

using Integer = mpz_class;
using Rational = mpq_class;
using ComplexF = std::complex<double>;

// Raised when a scalar operation is asked to leave its domain (division by
// zero, evaluating at A = 0, odd powers of A in the Gaussian pipeline).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Exact Laurent polynomial in the formal variable A with arbitrary-precision
// integer coefficients. Zero coefficients are never stored, so two
// polynomials are equal iff their term maps are equal.
class LaurentPoly {
 public:
  using Terms = std::map<int, Integer>;

  LaurentPoly() = default;
  LaurentPoly(int constant);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const Integer& constant);

  // coeff * A^exponent
  static LaurentPoly Monomial(int exponent, const Integer& coeff = 1);
  // -A^2 - A^-2, the value of a closed loop.
  static LaurentPoly LoopValue();

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;
  bool all_exponents_even() const;

  // Multiplication by A^k.
  LaurentPoly shifted(int k) const;
  // Substitutes A -> A^-1.
  LaurentPoly mirrored() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    return a += b;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    return a -= b;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
    return !(a == b);
  }

  // Human-readable form such as "-A^-2 + 3 + A^4"; "0" for the zero
  // polynomial.
  std::string to_string() const;

 private:
  void add_term(int exponent, const Integer& coeff);

  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

// {"exp": "coeff"} with decimal strings for exponents and coefficients.
nlohmann::json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const nlohmann::json& j);

// Exact element re + im*i of Q(i).
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(int re);  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im = 0);

  static GaussianRational I() { return GaussianRational(0, 1); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend GaussianRational operator+(GaussianRational a,
                                    const GaussianRational& b) {
    return a += b;
  }
  friend GaussianRational operator-(GaussianRational a,
                                    const GaussianRational& b) {
    return a -= b;
  }
  friend GaussianRational operator*(GaussianRational a,
                                    const GaussianRational& b) {
    return a *= b;
  }
  friend GaussianRational operator/(GaussianRational a,
                                    const GaussianRational& b) {
    return a /= b;
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
    return !(a == b);
  }

  ComplexF to_complex() const { return {re_.get_d(), im_.get_d()}; }
  std::string to_string() const;

 private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

// (-i)^k, exactly.
GaussianRational minus_i_power(long k);

// Sum of coeff * a^exp. Each power is formed by repeated squaring.
// Throws DomainError for a == 0.
ComplexF eval_laurent(const LaurentPoly& p, ComplexF a);

// Exact value at A = exp(-pi i/4), where A^2 = -i. Only even exponents are
// allowed; an odd exponent throws DomainError.
GaussianRational eval_laurent_gaussian(const LaurentPoly& p);

// A = exp(-pi i x/4), the point used by spectral-radius scans.
ComplexF a_from_x(double x);
// A = exp(2 pi i p/q).
ComplexF a_from_fraction(long p, long q);

}  // namespace tlhom

#endif  // TLHOM_SCALARS_HPP_
