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

#include "tlhom/homology.hpp"

#include <cstdlib>
#include <stdexcept>

#include "tlhom/exterior.hpp"
#include "tlhom/tl_diagram.hpp"

namespace tlhom {

std::string to_string(SurfaceKind kind) {
  switch (kind) {
    case SurfaceKind::kClosed:
      return "closed";
    case SurfaceKind::kOneBoundary:
      return "one-boundary";
    case SurfaceKind::kTwoBoundary:
      return "two-boundary";
  }
  return "?";
}

SurfaceKind surface_kind_from_string(const std::string& text) {
  if (text == "closed") return SurfaceKind::kClosed;
  if (text == "one-boundary" || text == "one_boundary") return SurfaceKind::kOneBoundary;
  if (text == "two-boundary" || text == "two_boundary") return SurfaceKind::kTwoBoundary;
  throw std::invalid_argument("unknown surface kind '" + text + "'");
}

int HomologySetup::genus() const {
  return kind == SurfaceKind::kTwoBoundary ? (dim - 1) / 2 : dim / 2;
}

Integer HomologySetup::omega(const IntVector& x, const IntVector& y) const {
  Integer total = 0;
  for (int r = 0; r < dim; ++r) {
    if (x[r] == 0) continue;
    for (int c = 0; c < dim; ++c) {
      if (y[c] == 0 || pairing(r, c) == 0) continue;
      total += x[r] * pairing(r, c) * y[c];
    }
  }
  return total;
}

HomologySetup build_setup(SurfaceKind kind, int strands) {
  const bool even = strands % 2 == 0;
  if (strands < 2) throw ParityError("surface needs at least 2 strands");
  if (kind == SurfaceKind::kOneBoundary && even)
    throw ParityError("one-boundary surface needs an odd strand count, got " +
                      std::to_string(strands));
  if (kind != SurfaceKind::kOneBoundary && !even)
    throw ParityError(to_string(kind) + " surface needs an even strand count, got " +
                      std::to_string(strands));

  HomologySetup s;
  s.kind = kind;
  s.strands = strands;
  s.dim = kind == SurfaceKind::kClosed ? strands - 2 : strands - 1;
  s.pairing = Matrix<Integer>(s.dim, s.dim);
  for (int i = 0; i + 1 < s.dim; ++i) {
    s.pairing(i + 1, i) = 1;
    s.pairing(i, i + 1) = -1;
  }
  for (int i = 0; i < s.dim; ++i) {
    IntVector e(s.dim, Integer(0));
    e[i] = 1;
    s.chain.push_back(std::move(e));
  }
  if (kind == SurfaceKind::kClosed) {
    // c_{n-1} = -(c_1 + c_3 + ... + c_{n-3})
    IntVector last(s.dim, Integer(0));
    for (int k = 1; k <= strands - 3; k += 2) last[k - 1] = -1;
    s.relation = last;
    s.chain.push_back(std::move(last));
  }
  return s;
}

IntVector transvect(const IntVector& c, const IntVector& x, const HomologySetup& setup) {
  const Integer f = setup.omega(x, c);
  IntVector out = x;
  if (f != 0)
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += f * c[k];
  return out;
}

Matrix<Integer> transvection_matrix(const IntVector& c, const HomologySetup& setup, bool inverse) {
  Matrix<Integer> m = Matrix<Integer>::Identity(setup.dim);
  // Column j is the image of e_j: e_j +- omega(e_j, c) c.
  for (int j = 0; j < setup.dim; ++j) {
    Integer f = 0;
    for (int k = 0; k < setup.dim; ++k) f += setup.pairing(j, k) * c[k];
    if (inverse) f = -f;
    if (f == 0) continue;
    for (int r = 0; r < setup.dim; ++r) m(r, j) += f * c[r];
  }
  return m;
}

Matrix<Integer> psi_matrix(const BraidWord& word, const HomologySetup& setup) {
  if (word.strands() != setup.strands)
    throw std::invalid_argument("braid has " + std::to_string(word.strands()) +
                                " strands but the surface is driven by " +
                                std::to_string(setup.strands));
  std::vector<Matrix<Integer>> fwd, inv;
  for (const auto& c : setup.chain) {
    fwd.push_back(transvection_matrix(c, setup, false));
    inv.push_back(transvection_matrix(c, setup, true));
  }
  Matrix<Integer> m = Matrix<Integer>::Identity(setup.dim);
  for (const auto& letter : word.letters()) {
    const auto& g = letter.exponent > 0 ? fwd[letter.generator - 1] : inv[letter.generator - 1];
    for (int k = 0; k < std::abs(letter.exponent); ++k) m = m * g;
  }
  return m;
}

bool is_symplectic(const Matrix<Integer>& m, const HomologySetup& setup) {
  if (m.rows() != static_cast<std::size_t>(setup.dim) || !m.square()) return false;
  return m.transpose() * setup.pairing * m == setup.pairing;
}

namespace {

using RatVector = std::vector<Rational>;

Rational omega_q(const RatVector& x, const RatVector& y, const HomologySetup& setup) {
  Rational total = 0;
  for (int r = 0; r < setup.dim; ++r) {
    if (x[r] == 0) continue;
    for (int c = 0; c < setup.dim; ++c) {
      if (setup.pairing(r, c) == 0 || y[c] == 0) continue;
      total += x[r] * Rational(setup.pairing(r, c)) * y[c];
    }
  }
  return total;
}

}  // namespace

SymplecticBivector symplectic_bivector(const HomologySetup& setup) {
  std::vector<RatVector> rest;
  for (int i = 0; i < setup.dim; ++i) {
    RatVector e(setup.dim, Rational(0));
    e[i] = 1;
    rest.push_back(std::move(e));
  }
  SymplecticBivector out;
  out.base_dim = setup.dim;
  WedgeVector<Rational> total = WedgeVector<Rational>::zero(setup.dim, 2);
  while (!rest.empty()) {
    RatVector u = rest.front();
    std::size_t vi = 1;
    Rational w;
    for (; vi < rest.size(); ++vi) {
      w = omega_q(rest[vi], u, setup);
      if (w != 0) break;
    }
    if (vi >= rest.size())
      throw std::domain_error("pairing is degenerate on the " + to_string(setup.kind) +
                              " surface; no symplectic bivector");
    RatVector v = rest[vi];
    for (auto& x : v) x /= w;
    std::vector<RatVector> next;
    for (std::size_t k = 1; k < rest.size(); ++k) {
      if (k == vi) continue;
      RatVector x = rest[k];
      const Rational xv = omega_q(x, v, setup);
      const Rational xu = omega_q(x, u, setup);
      for (int r = 0; r < setup.dim; ++r) x[r] += xv * u[r] - xu * v[r];
      next.push_back(std::move(x));
    }
    rest = std::move(next);
    total += wedge<Rational>({u, v}, setup.dim);
    out.pairs.emplace_back(std::move(u), std::move(v));
  }
  out.coefficients = std::move(total.coeffs);
  return out;
}

}  // namespace tlhom
