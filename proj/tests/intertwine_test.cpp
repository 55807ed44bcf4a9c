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

#include <set>

#include "doctest.h"
#include "support/oracles.hpp"
#include "tlhom/intertwine.hpp"

using tlhom::Diagram;
using tlhom::GaussianRational;
using tlhom::GaussVector;
using tlhom::SurfaceKind;

namespace {

struct Case {
  int n;
  int d;
  SurfaceKind kind;
};

std::vector<Case> theorem_cases(int max_n) {
  std::vector<Case> out;
  for (int n = 2; n <= max_n; ++n) {
    for (int d = n % 2; d <= n; d += 2) {
      if (n % 2 == 1) {
        out.push_back({n, d, SurfaceKind::kOneBoundary});
      } else {
        out.push_back({n, d, SurfaceKind::kTwoBoundary});
        if (d == 0 && n >= 4) out.push_back({n, d, SurfaceKind::kClosed});
      }
    }
  }
  return out;
}

GaussVector gauss_wedge(const std::vector<tlhom::IntVector>& xs, int dim) {
  std::vector<std::vector<GaussianRational>> vs;
  for (const auto& x : xs) {
    std::vector<GaussianRational> v;
    for (const auto& c : x) v.emplace_back(tlhom::Rational(c));
    vs.push_back(v);
  }
  return tlhom::wedge(vs, dim);
}

}  // namespace

TEST_CASE("arc data of a seventeen point diagram") {
  const Diagram d = Diagram::parse(
      "(1 inf)(2 15)(3 10)(4 7)(5 6)(8 9)(11 14)(12 13)(16 inf)(17 inf)");
  CHECK(d.d() == 3);
  const auto arcs = tlhom::arc_data(d, 16);
  REQUIRE(arcs.size() == 7);
  CHECK(arcs[0].e0 == 2);
  CHECK(arcs[0].e1 == 15);
  CHECK(arcs[0].w == 6);
  CHECK(arcs[0].v == 2);
  CHECK(arcs[1].e0 == 3);
  CHECK(arcs[1].e1 == 10);
  CHECK(arcs[1].w == 3);
  CHECK(arcs[1].v == 2);
  // X_(3,10) = c_3 + ... + c_9
  for (int k = 0; k < 16; ++k) CHECK(arcs[1].x[k] == ((k >= 2 && k <= 8) ? 1 : 0));
  CHECK(arcs[3].w == 0);
  CHECK(arcs[3].v == 2);
  CHECK(tlhom::f_exponent(d) == 25);
}

TEST_CASE("single arc images") {
  const auto s = tlhom::build_setup(SurfaceKind::kOneBoundary, 3);
  const auto a = tlhom::phi(Diagram::parse("(1 2)(3 inf)"), s);
  CHECK(a.degree == 1);
  CHECK(a.coeffs == std::vector<GaussianRational>{GaussianRational(0, -1), 0});
  const auto b = tlhom::phi(Diagram::parse("(1 inf)(2 3)"), s);
  CHECK(b.coeffs == std::vector<GaussianRational>{0, 1});
  const auto c = tlhom::phi(Diagram::parse("(1 inf)(2 inf)(3 inf)"), s);
  CHECK(c.degree == 0);
  CHECK(c.coeffs == std::vector<GaussianRational>{1});
}

TEST_CASE("all-infinity diagrams map to the scalar 1") {
  for (int n = 3; n <= 9; n += 2) {
    const auto s = tlhom::build_setup(SurfaceKind::kOneBoundary, n);
    const auto basis = tlhom::enumerate_basis(n, n);
    REQUIRE(basis.size() == 1);
    CHECK(tlhom::phi(basis[0], s).coeffs == std::vector<GaussianRational>{1});
  }
}

TEST_CASE("phi rejects the closed setup") {
  const auto s = tlhom::build_setup(SurfaceKind::kClosed, 4);
  CHECK_THROWS(tlhom::phi(Diagram::parse("(1 2)(3 4)"), s));
}

TEST_CASE("tilde is a bijection V^{2m,0} -> V^{2m-1,1}") {
  CHECK(tlhom::tilde(Diagram::parse("(1 6)(2 5)(3 4)")) == Diagram::parse("(1 inf)(2 5)(3 4)"));
  CHECK(tlhom::tilde(Diagram::parse("(1 2)(3 4)(5 6)")) == Diagram::parse("(1 2)(3 4)(5 inf)"));
  for (int m = 1; m <= 5; ++m) {
    std::set<std::vector<int>> images;
    for (const auto& d : tlhom::enumerate_basis(2 * m, 0)) images.insert(tlhom::tilde(d).partners());
    std::set<std::vector<int>> target;
    for (const auto& d : tlhom::enumerate_basis(2 * m - 1, 1)) target.insert(d.partners());
    CHECK(images == target);
  }
  CHECK_THROWS(tlhom::tilde(Diagram::parse("(1 2)(3 inf)(4 inf)")));
}

TEST_CASE("image degrees") {
  CHECK(tlhom::image_degree(7, 1, SurfaceKind::kOneBoundary) == 3);
  CHECK(tlhom::image_degree(8, 2, SurfaceKind::kTwoBoundary) == 3);
  CHECK(tlhom::image_degree(8, 0, SurfaceKind::kClosed) == 3);
}

TEST_CASE("phi equals f times the wedge of the arc vectors") {
  tlhom::testing::Rng rng(2);
  const auto s = tlhom::build_setup(SurfaceKind::kOneBoundary, 9);
  for (const auto& d : tlhom::enumerate_basis(9, 3)) {
    std::vector<tlhom::IntVector> xs;
    for (const auto& a : tlhom::arc_data(d, s.dim)) xs.push_back(a.x);
    GaussVector expect = gauss_wedge(xs, s.dim);
    expect *= tlhom::minus_i_power(tlhom::f_exponent(d));
    CHECK(tlhom::phi(d, s) == expect);
  }
}

TEST_CASE("equivariance against the Jones matrices and homology twists") {
  for (auto [n, d] : {std::pair{5, 1}, std::pair{7, 3}, std::pair{6, 2}}) {
    const auto kind = n % 2 ? SurfaceKind::kOneBoundary : SurfaceKind::kTwoBoundary;
    const auto s = tlhom::build_setup(kind, n);
    const tlhom::JonesRepresentation rep(n, d);
    const auto& basis = rep.basis();
    for (int i = 1; i < n; ++i) {
      const auto mv = rep.word_gaussian(tlhom::BraidWord(n, {{i, 1}}));
      const auto twist = tlhom::transvection_matrix(s.c(i), s);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        const int l = tlhom::image_degree(n, d, kind);
        GaussVector lhs = GaussVector::zero(s.dim, l);
        for (std::size_t j = 0; j < basis.size(); ++j) {
          if (mv(j, k).is_zero()) continue;
          GaussVector term = tlhom::phi(basis[j], s);
          term *= mv(j, k);
          lhs += term;
        }
        std::vector<tlhom::IntVector> xs;
        for (const auto& a : tlhom::arc_data(basis[k], s.dim)) xs.push_back(twist * a.x);
        GaussVector rhs = gauss_wedge(xs, s.dim);
        rhs *= tlhom::minus_i_power(tlhom::f_exponent(basis[k]));
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("equivariance reports for n <= 9") {
  for (const auto& c : theorem_cases(9)) {
    CAPTURE(c.n);
    CAPTURE(c.d);
    const auto r = tlhom::verify_equivariance(c.n, c.d, c.kind);
    CHECK(r.ok());
    CHECK(r.checks == static_cast<long>((c.n - 1) * tlhom::basis_dimension(c.n, c.d)));
  }
}

TEST_CASE("ranks for n <= 9") {
  for (const auto& c : theorem_cases(9)) {
    CAPTURE(c.n);
    CAPTURE(c.d);
    CAPTURE(tlhom::to_string(c.kind));
    const auto r = tlhom::verify_rank(c.n, c.d, c.kind);
    CHECK(r.ok);
    CHECK(r.rank == r.dim_v);
    if (c.kind != SurfaceKind::kTwoBoundary) CHECK(r.target_dim == r.dim_v);
  }
}

TEST_CASE("random words intertwine exactly") {
  tlhom::testing::Rng rng(31);
  std::uniform_int_distribution<int> pick_n(3, 8), pick_len(0, 12);
  for (int t = 0; t < 50; ++t) {
    const int n = pick_n(rng);
    std::vector<int> ds;
    for (int d = n % 2; d <= n; d += 2) ds.push_back(d);
    const int d = ds[std::uniform_int_distribution<std::size_t>(0, ds.size() - 1)(rng)];
    SurfaceKind kind = n % 2 ? SurfaceKind::kOneBoundary : SurfaceKind::kTwoBoundary;
    if (n % 2 == 0 && d == 0 && n >= 4 && t % 2 == 0) kind = SurfaceKind::kClosed;
    const auto w = tlhom::testing::random_word(rng, n, pick_len(rng));
    CAPTURE(w.to_string());
    CAPTURE(n);
    CAPTURE(d);
    const auto r = tlhom::check_equivalence(w, d, kind);
    CHECK(r.exact);
    REQUIRE(r.power.has_value());
    CHECK(*r.power == 0);
  }
}

TEST_CASE("nested arc reduction") {
  const Diagram d = Diagram::parse("(1 14)(2 7)(3 6)(4 5)(8 9)(10 13)(11 12)");
  const auto r = tlhom::nested_arc_reduction(d, {1, 14});
  CHECK(r.holds());
  CHECK_FALSE(r.lhs.is_zero());
  for (const auto& diagram : tlhom::enumerate_basis(9, 1)) {
    for (const auto& arc : diagram.arcs()) {
      CAPTURE(diagram.to_string());
      CHECK(tlhom::nested_arc_reduction(diagram, arc).holds());
    }
  }
}

TEST_CASE("two-boundary block structure") {
  for (int n = 4; n <= 8; n += 2) {
    for (int d = 0; d <= n; d += 2) {
      CAPTURE(n);
      CAPTURE(d);
      const auto b = tlhom::block_structure(n, d);
      CHECK(b.first_kind + b.second_kind == tlhom::basis_dimension(n, d));
      CHECK(b.off_block_zero);
      CHECK(b.rank_first == b.first_kind);
      CHECK(b.rank_second == b.second_kind);
    }
  }
}
