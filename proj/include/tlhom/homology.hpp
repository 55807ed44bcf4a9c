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

// First homology of the branched double cover of a punctured disk, modelled
// through a chain of curves c_1, ..., c_{n-1}. The braid generator sigma_i
// acts as the Dehn twist along c_i, i.e. the transvection
//   x -> x + omega(x, c_i) c_i,
// with orientations fixed by omega(c_{i+1}, c_i) = +1, so that
// t_{c_i}(c_{i+1}) = c_{i+1} + c_i.
//
// Surfaces:
//   closed        n = 2m strands, genus m-1, basis c_1..c_{n-2},
//                 c_{n-1} = -(c_1 + c_3 + ... + c_{n-3});
//   one_boundary  n = 2m+1 strands, genus m, basis c_1..c_{n-1};
//   two_boundary  n = 2m strands, genus m-1, basis c_1..c_{n-1}
//                 (the pairing is degenerate: rank n-2).

#ifndef TLHOM_HOMOLOGY_HPP_
#define TLHOM_HOMOLOGY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "tlhom/braid.hpp"
#include "tlhom/matrix.hpp"
#include "tlhom/scalars.hpp"

namespace tlhom {

enum class SurfaceKind { kClosed, kOneBoundary, kTwoBoundary };

std::string to_string(SurfaceKind kind);
// Accepts "closed", "one-boundary"/"one_boundary", "two-boundary"/"two_boundary".
SurfaceKind surface_kind_from_string(const std::string& text);

using IntVector = std::vector<Integer>;

struct HomologySetup {
  SurfaceKind kind;
  int strands;
  int dim;                             // rank of the coordinate space
  std::vector<IntVector> chain;        // c_1..c_{n-1}, each of length dim
  Matrix<Integer> pairing;             // omega(x, y) = x^T * pairing * y
  // Closed surfaces: coefficients expressing c_{n-1} in c_1..c_{n-2}.
  std::optional<IntVector> relation;

  int genus() const;
  const IntVector& c(int i) const { return chain.at(i - 1); }
  Integer omega(const IntVector& x, const IntVector& y) const;
};

// Throws ParityError for strand counts the surface cannot carry.
HomologySetup build_setup(SurfaceKind kind, int strands);

// x + omega(x, c) c
IntVector transvect(const IntVector& c, const IntVector& x, const HomologySetup& setup);

// Matrix of the twist along c (or its inverse), acting on column vectors.
Matrix<Integer> transvection_matrix(const IntVector& c, const HomologySetup& setup,
                                    bool inverse = false);

// Homology action of a braid word: the ordered product of the generator
// twists.
Matrix<Integer> psi_matrix(const BraidWord& word, const HomologySetup& setup);

// M^T omega M == omega
bool is_symplectic(const Matrix<Integer>& m, const HomologySetup& setup);

// Symplectic bivector sum_k a_k ^ b_k in coordinates of the setup basis,
// built by symplectic Gram-Schmidt over Q (lowest-index pivots, pairs
// normalised so that omega(b_k, a_k) = 1). Throws std::domain_error for a
// degenerate pairing.
struct SymplecticBivector {
  std::vector<std::pair<std::vector<Rational>, std::vector<Rational>>> pairs;  // (a_k, b_k)
  int base_dim = 0;
  // Coefficients on Lambda^2 in colex order of the index pairs.
  std::vector<Rational> coefficients;
};

SymplecticBivector symplectic_bivector(const HomologySetup& setup);

}  // namespace tlhom

#endif  // TLHOM_HOMOLOGY_HPP_
