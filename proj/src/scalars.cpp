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

#include "tlhom/scalars.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace tlhom {

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(int constant) {
  if (constant != 0) terms_.emplace(0, Integer(constant));
}

LaurentPoly::LaurentPoly(const Integer& constant) {
  if (sgn(constant) != 0) terms_.emplace(0, constant);
}

LaurentPoly LaurentPoly::Monomial(int exponent, const Integer& coeff) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

LaurentPoly LaurentPoly::LoopValue() {
  return Monomial(2, -1) + Monomial(-2, -1);
}

void LaurentPoly::add_term(int exponent, const Integer& coeff) {
  if (sgn(coeff) == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Integer LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw DomainError("min_exponent of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw DomainError("max_exponent of zero polynomial");
  return terms_.rbegin()->first;
}

bool LaurentPoly::all_exponents_even() const {
  for (const auto& [e, c] : terms_) {
    if (e % 2 != 0) return false;
  }
  return true;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + k, c);
  return out;
}

LaurentPoly LaurentPoly::mirrored() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  Integer prod;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      mpz_mul(prod.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
      out.add_term(ea + eb, prod);
    }
  }
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << "A";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
  return os << p.to_string();
}

nlohmann::json to_json(const LaurentPoly& p) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c.get_str();
  return j;
}

LaurentPoly laurent_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw DomainError("Laurent polynomial JSON must be an object");
  LaurentPoly p;
  for (const auto& [key, value] : j.items()) {
    int exponent = std::stoi(key);
    Integer coeff;
    if (value.is_string()) {
      if (coeff.set_str(value.get<std::string>(), 10) != 0) {
        throw DomainError("bad coefficient string: " + value.get<std::string>());
      }
    } else if (value.is_number_integer()) {
      coeff = Integer(std::to_string(value.get<long long>()));
    } else {
      throw DomainError("coefficient must be a decimal string");
    }
    p += LaurentPoly::Monomial(exponent, coeff);
  }
  return p;
}

// ---------------------------------------------------------------------------
// GaussianRational

GaussianRational::GaussianRational(int re) : re_(re), im_(0) {}

GaussianRational::GaussianRational(Rational re, Rational im)
    : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(o.im_) == 0) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw DomainError("division by zero in Q(i)");
  Rational n = o.norm();
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string GaussianRational::to_string() const {
  std::ostringstream os;
  if (sgn(im_) == 0) {
    os << re_;
  } else if (sgn(re_) == 0) {
    os << im_ << "i";
  } else {
    os << re_ << (sgn(im_) < 0 ? "-" : "+") << abs(im_) << "i";
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
  return os << z.to_string();
}

GaussianRational minus_i_power(long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, -1};
    case 2: return {-1, 0};
    default: return {0, 1};
  }
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

using ComplexL = std::complex<long double>;

ComplexL int_power(ComplexL base, unsigned long e) {
  ComplexL result(1.0L, 0.0L);
  while (e != 0) {
    if (e & 1UL) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

}  // namespace

// Accumulates in long double: long words give entries with ~100 terms whose
// integer coefficients cancel heavily.
ComplexF eval_laurent(const LaurentPoly& p, ComplexF a) {
  if (a == ComplexF(0.0, 0.0)) throw DomainError("cannot evaluate a Laurent polynomial at A = 0");
  const ComplexL al(a.real(), a.imag());
  const ComplexL inv = 1.0L / al;
  ComplexL sum(0.0L, 0.0L);
  for (const auto& [e, c] : p.terms()) {
    ComplexL power = e >= 0 ? int_power(al, static_cast<unsigned long>(e))
                            : int_power(inv, static_cast<unsigned long>(-static_cast<long>(e)));
    sum += static_cast<long double>(c.get_d()) * power;
  }
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

GaussianRational eval_laurent_gaussian(const LaurentPoly& p) {
  GaussianRational sum;
  for (const auto& [e, c] : p.terms()) {
    if (e % 2 != 0) {
      throw DomainError("odd power A^" + std::to_string(e) +
                        " has no value in Q(i) at A^2 = -i");
    }
    sum += minus_i_power(e / 2) * GaussianRational(Rational(c), 0);
  }
  return sum;
}

ComplexF a_from_x(double x) {
  return std::polar(1.0, -std::numbers::pi * x / 4.0);
}

ComplexF a_from_fraction(long p, long q) {
  if (q == 0) throw DomainError("A = exp(2 pi i p/q) needs q != 0");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  // Reduce first so large p keeps full accuracy in the angle.
  long r = ((p % q) + q) % q;
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) /
                             static_cast<double>(q));
}

}  // namespace tlhom
