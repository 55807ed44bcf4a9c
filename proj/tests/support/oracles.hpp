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

// Independent oracles and property checks shared by the unit tests and the
// acceptance binary. Nothing here calls the code path it is checking.

#ifndef TLHOM_TESTS_ORACLES_HPP_
#define TLHOM_TESTS_ORACLES_HPP_

#include <random>
#include <string>
#include <vector>

#include "tlhom/braid.hpp"
#include "tlhom/matrix.hpp"
#include "tlhom/scalars.hpp"

namespace tlhom::testing {

struct PropertyResult {
  bool ok = true;
  long cases = 0;
  std::string detail;  // first failure

  void fail(const std::string& what) {
    if (ok) detail = what;
    ok = false;
  }
};

using Rng = std::mt19937_64;

// Partner tables (1-based, 0 = infinity) of every basis diagram of V^{n,d},
// found by trying all involutions and checking the geometric conditions
// pairwise.
std::vector<std::vector<int>> brute_force_diagrams(int n, int d);

BraidWord random_word(Rng& rng, int strands, int length);
BraidExpr random_expr(Rng& rng, int strands, int depth);

// Exact characteristic polynomial over Q(i) (Faddeev-LeVerrier, so it does
// not share code with the library's Berkowitz routine), rooted with Eigen's
// complex eigen solver on the companion matrix, then Newton-polished in
// long double.
std::vector<ComplexF> charpoly_roots(const Matrix<GaussianRational>& m);

// Greedy nearest matching of two multisets; returns the worst relative
// distance max |a - b| / max(1, |b|).
double multiset_distance(std::vector<ComplexF> a, std::vector<ComplexF> b);

// Property suites.
PropertyResult tl_relations(int max_n);
PropertyResult jones_braid_relations(int max_n);
PropertyResult homology_braid_relations(int max_n);
PropertyResult induced_functoriality(Rng& rng, int trials);
PropertyResult wedge_eigen_products(Rng& rng, int trials);
PropertyResult dx_binomial_count(Rng& rng, int trials);
PropertyResult solver_vs_charpoly(Rng& rng, int trials, int max_dim, double tol);
PropertyResult parser_round_trip(Rng& rng, int trials);

}  // namespace tlhom::testing

#endif  // TLHOM_TESTS_ORACLES_HPP_
