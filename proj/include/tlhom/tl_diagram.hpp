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

// The diagram basis of V^{n,d}: non-crossing pairings of n top points and d
// bottom points in which every bottom point is joined to a top point. The
// Temperley-Lieb generator e_i caps the top points i, i+1; the braid
// generator sigma_i acts by A*id + A^-1*e_i.

#ifndef TLHOM_TL_DIAGRAM_HPP_
#define TLHOM_TL_DIAGRAM_HPP_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tlhom/braid.hpp"
#include "tlhom/matrix.hpp"
#include "tlhom/scalars.hpp"

namespace tlhom {

class ParityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A basis diagram. Top points are labelled 1..n. partner(p) is the other
// end of the arc at p, or kInfinity when p runs to a bottom point. Bottom
// points are implicit: the k-th infinity-connected top point (left to
// right) meets the k-th bottom point.
class Diagram {
 public:
  static constexpr int kInfinity = 0;

  // From a 1-based partner table (entry p-1 is the partner of p, or
  // kInfinity). Throws std::invalid_argument if the pairing is not a valid
  // basis diagram.
  explicit Diagram(std::vector<int> partners);

  // Parses "(1 4)(2 3)(5 inf)(6 inf)"; "∞" is accepted for "inf".
  static Diagram parse(const std::string& text);

  int n() const { return static_cast<int>(partners_.size()); }
  int d() const;
  int partner(int point) const { return partners_.at(point - 1); }
  bool to_infinity(int point) const { return partner(point) == kInfinity; }
  const std::vector<int>& partners() const { return partners_; }

  // Top-top arcs (a0 < a1), ordered by starting point.
  std::vector<std::pair<int, int>> arcs() const;
  int arc_count() const;

  // Canonical sort key: partners with infinity mapped past every label.
  std::vector<int> order_key() const;

  // "(1 4)(2 3)(5 ∞)(6 ∞)"
  std::string to_string() const;

  friend bool operator==(const Diagram&, const Diagram&) = default;
  friend bool operator<(const Diagram& a, const Diagram& b) {
    return a.order_key() < b.order_key();
  }

 private:
  std::vector<int> partners_;
};

// Checks every basis-diagram invariant on a raw 1-based partner table.
bool is_valid_diagram(const std::vector<int>& partners);

// binom(n, (n-d)/2) - binom(n, (n-d)/2 - 1).
long long basis_dimension(int n, int d);

// All diagrams of V^{n,d} in canonical order (lexicographic on the partner
// sequence with infinity last). Throws ParityError unless 0 <= d <= n and
// d = n mod 2.
std::vector<Diagram> enumerate_basis(int n, int d);

// Result of stacking e_i on a diagram. `diagram` is empty for the zero
// outcome (two bottom points joined).
struct EAction {
  std::optional<Diagram> diagram;
  LaurentPoly coefficient;

  bool is_zero() const { return !diagram.has_value(); }
};

EAction apply_e(int i, const Diagram& diagram);

// Basis of V^{n,d} with a lookup from diagram to position.
class DiagramBasis {
 public:
  DiagramBasis(int n, int d);

  int n() const { return n_; }
  int d() const { return d_; }
  std::size_t size() const { return diagrams_.size(); }
  const std::vector<Diagram>& diagrams() const { return diagrams_; }
  const Diagram& operator[](std::size_t k) const { return diagrams_[k]; }
  std::size_t index_of(const Diagram& diagram) const;

 private:
  int n_;
  int d_;
  std::vector<Diagram> diagrams_;
  std::map<std::vector<int>, std::size_t> index_;
};

// Matrix of e_i on V^{n,d}; column k is e_i applied to basis element k.
Matrix<LaurentPoly> rep_e(int i, const DiagramBasis& basis);

// Matrix of sigma_i^{+1} (A*id + A^-1*e_i) or sigma_i^{-1}
// (A^-1*id + A*e_i) on V^{n,d}.
Matrix<LaurentPoly> rep_sigma(int i, const DiagramBasis& basis, bool inverse = false);

// How braid matrices are normalised. kRescaled multiplies each letter
// sigma_i^{+-1} by A^{-+1}; at A^2 = -i it sends sigma_i to id + i*e_i.
enum class Normalization { kRaw, kRescaled };

// Per-generator matrices for one (n, d), cached so that words can be
// evaluated in any scalar domain without rebuilding the action.
class JonesRepresentation {
 public:
  JonesRepresentation(int n, int d);

  const DiagramBasis& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }

  const Matrix<LaurentPoly>& e(int i) const { return e_.at(i - 1); }
  const Matrix<LaurentPoly>& sigma(int i, bool inverse = false) const {
    return inverse ? sigma_inv_.at(i - 1) : sigma_.at(i - 1);
  }

  // Symbolic matrix of a word over Z[A, A^-1].
  Matrix<LaurentPoly> word(const BraidWord& w,
                           Normalization norm = Normalization::kRaw) const;
  // Numeric matrix at a given A; letters are evaluated before multiplying.
  Matrix<ComplexF> word_at(const BraidWord& w, ComplexF a,
                           Normalization norm = Normalization::kRaw) const;
  // Exact matrix at A = exp(-pi i/4) over Q(i); always rescaled, since the
  // raw generators have odd powers of A.
  Matrix<GaussianRational> word_gaussian(const BraidWord& w) const;

 private:
  void check_word(const BraidWord& w) const;

  DiagramBasis basis_;
  std::vector<Matrix<LaurentPoly>> e_;
  std::vector<Matrix<LaurentPoly>> sigma_;
  std::vector<Matrix<LaurentPoly>> sigma_inv_;
};

Matrix<ComplexF> evaluate(const Matrix<LaurentPoly>& m, ComplexF a);
Matrix<GaussianRational> evaluate_gaussian(const Matrix<LaurentPoly>& m);

}  // namespace tlhom

#endif  // TLHOM_TL_DIAGRAM_HPP_
