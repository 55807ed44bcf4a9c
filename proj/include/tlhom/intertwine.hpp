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

// The map phi : V^{n,d} -> Lambda^l H_1 at A = exp(-pi i/4), l the number of
// top-top arcs. A diagram D goes to
//   f(D) * X_{e_1} ^ ... ^ X_{e_l},   f(D) = (-i)^{sum_e w(e) + v(e)},
// arcs ordered by starting point, X_e = c_{e0} + ... + c_{e1 - 1}.
// On closed surfaces (d = 0, n even) phi_tilde first drops the arc through
// point n and sends its other end to infinity.

#ifndef TLHOM_INTERTWINE_HPP_
#define TLHOM_INTERTWINE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "tlhom/braid.hpp"
#include "tlhom/exterior.hpp"
#include "tlhom/homology.hpp"
#include "tlhom/matrix.hpp"
#include "tlhom/scalars.hpp"
#include "tlhom/tl_diagram.hpp"

namespace tlhom {

using GaussVector = WedgeVector<GaussianRational>;
using GaussMatrix = Matrix<GaussianRational>;

struct ArcData {
  int e0 = 0;
  int e1 = 0;
  int w = 0;  // arcs starting strictly inside (e0, e1)
  int v = 0;  // infinity points to the right of e1
  IntVector x;  // X_e, length base_dim
};

// Arc data for every top-top arc of D, ordered by starting point. X_e uses
// coordinate vectors of length base_dim; every index e1 - 1 must be < base_dim
// + 1 (c_k is the k-th unit vector).
std::vector<ArcData> arc_data(const Diagram& diagram, int base_dim);

// The exponent sum_e w(e) + v(e).
int f_exponent(const Diagram& diagram);

// The diagram D~ of V^{n-1,1} for D in V^{n,0}. Throws std::invalid_argument
// if d != 0.
Diagram tilde(const Diagram& diagram);

// phi(D). The setup must be one-boundary or two-boundary on n strands.
GaussVector phi(const Diagram& diagram, const HomologySetup& setup);
// phi(D~) in the one-boundary coordinates identified with the closed ones.
GaussVector phi_tilde(const Diagram& diagram, const HomologySetup& closed_setup);

// Either phi or phi_tilde, chosen by the setup kind.
GaussVector intertwine(const Diagram& diagram, const HomologySetup& setup);
// Wedge degree of the image of V^{n,d} under intertwine().
int image_degree(int n, int d, SurfaceKind kind);

// Columns are intertwine(D) for the canonical basis of V^{n,d}.
GaussMatrix intertwiner_matrix(const DiagramBasis& basis, const HomologySetup& setup);

// omega_hat over Q(i).
GaussVector omega_hat_gaussian(const HomologySetup& setup);

// Checks phi(D) + i phi(T_i D) = t_{c_i} phi(D) for every basis diagram
// and every i.
struct EquivarianceReport {
  int n = 0;
  int d = 0;
  SurfaceKind kind = SurfaceKind::kOneBoundary;
  long checks = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

EquivarianceReport verify_equivariance(int n, int d, SurfaceKind kind);

struct RankReport {
  int n = 0;
  int d = 0;
  SurfaceKind kind = SurfaceKind::kOneBoundary;
  long long dim_v = 0;
  long long target_dim = 0;  // quotient dim, or binom(D, l) for two-boundary
  long long rank = 0;
  bool ok = false;  // isomorphism (one-boundary, closed) or injection
};

RankReport verify_rank(int n, int d, SurfaceKind kind);

// Two-boundary debug view. Diagrams split by whether point n runs to
// infinity (first kind) or not; target coordinates split by whether the
// subset contains c_{n-1}. phi is block triangular: first-kind columns
// vanish on the c_{n-1} rows.
struct BlockStructure {
  long long first_kind = 0;
  long long second_kind = 0;
  bool off_block_zero = false;
  long long rank_first = 0;   // first kind, rows without c_{n-1}
  long long rank_second = 0;  // second kind, rows with c_{n-1}
};

BlockStructure block_structure(int n, int d);

// X_a ^ (wedge of X_e over arcs e nested in a) against the same wedge with
// X_a replaced by sum_{k = a0, a0+2, ..., a1-1} c_k.
struct NestedReduction {
  WedgeVector<Integer> lhs;
  WedgeVector<Integer> rhs;
  bool holds() const { return lhs == rhs; }
};

NestedReduction nested_arc_reduction(const Diagram& diagram, std::pair<int, int> arc);

// Phi * M_V(w) against M_H(w) * Phi, over Q(i). M_V is the rescaled Jones
// matrix at A^2 = -i, M_H the induced action on Lambda^l (or on the
// omega_hat quotient for one-boundary and closed surfaces, where Phi is
// projected first). `power` is the smallest k in 0..3 with
// Phi M_V = (-i)^k M_H Phi, if any.
struct EquivalenceCheck {
  bool exact = false;
  std::optional<int> power;
};

EquivalenceCheck check_equivalence(const BraidWord& word, int d, SurfaceKind kind);

}  // namespace tlhom

#endif  // TLHOM_INTERTWINE_HPP_
