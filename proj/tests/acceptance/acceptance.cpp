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

// Acceptance run: one PASS/FAIL line per criterion, with wall time and the
// time limit. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "support/oracles.hpp"
#include "tlhom/exterior.hpp"
#include "tlhom/homology.hpp"
#include "tlhom/intertwine.hpp"
#include "tlhom/spectral.hpp"
#include "tlhom/tl_diagram.hpp"

namespace {

using tlhom::LaurentPoly;
using tlhom::SurfaceKind;

struct Outcome {
  bool ok = false;
  std::string detail;
};

LaurentPoly mono(int e, int c = 1) { return LaurentPoly::Monomial(e, c); }

// Reference 5x5 matrix of sigma_1 sigma_2 sigma_3^-1 on V^{6,0}, without
// its overall factor A.
tlhom::Matrix<LaurentPoly> reference_fixture() {
  const LaurentPoly zero;
  const std::vector<std::vector<LaurentPoly>> rows = {
      {zero, mono(-6), zero, mono(0, -1), mono(2)},
      {mono(2), mono(0, -1) + mono(-4), mono(0, -1), zero, zero},
      {zero, zero, zero, mono(-6) - mono(-2), mono(0)},
      {zero, zero, mono(-2, -1), mono(0, -1) + mono(-4), mono(2)},
      {zero, zero, zero, mono(2, -1), mono(4)},
  };
  tlhom::Matrix<LaurentPoly> m(5, 5);
  for (std::size_t r = 0; r < 5; ++r)
    for (std::size_t c = 0; c < 5; ++c) m(r, c) = rows[r][c];
  return m;
}

std::string poly_list(const std::vector<LaurentPoly>& p) {
  std::ostringstream os;
  os << "[";
  for (std::size_t k = 0; k < p.size(); ++k) os << (k ? ", " : "") << p[k];
  os << "]";
  return os.str();
}

const tlhom::BraidWord& golden_word() {
  static const tlhom::BraidWord w = tlhom::braid_word("s1 s2 s3^-1", 6);
  return w;
}

Outcome golden_matrix() {
  const tlhom::JonesRepresentation rep(6, 0);
  const auto eta = rep.word(golden_word());
  const auto fixture = reference_fixture() * mono(1);
  const auto ours = tlhom::characteristic_polynomial(eta);
  const auto theirs = tlhom::characteristic_polynomial(fixture);
  if (ours == theirs) return {true, "char polys agree: " + poly_list(ours)};
  std::string detail = "ours " + poly_list(ours) + " vs fixture " + poly_list(theirs);
  // The two can differ by the sign character sigma_i -> -sigma_i.
  const auto negated = tlhom::characteristic_polynomial(fixture * LaurentPoly(-1));
  if (ours == negated) detail += "; they agree after negating the fixture";
  return {false, detail};
}

Outcome golden_value() {
  const tlhom::ComplexF a = tlhom::a_from_fraction(3, 40);
  const tlhom::JonesRepresentation rep(6, 0);
  const double ours = tlhom::spectral_radius(rep.word_at(golden_word(), a));
  const double fixture =
      tlhom::spectral_radius(tlhom::evaluate(reference_fixture() * mono(1), a));
  const bool ok = std::abs(ours - 1.665) <= 1e-3 && std::abs(fixture - 1.665) <= 1e-3;
  return {ok, "sr = " + std::to_string(ours) + " (fixture " + std::to_string(fixture) +
                  "), target 1.665 +- 0.001"};
}

struct Case {
  int n;
  int d;
  SurfaceKind kind;
};

std::vector<Case> theorem_cases() {
  std::vector<Case> out;
  for (int n = 2; n <= 9; ++n) {
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

Outcome equivariance() {
  long checks = 0;
  for (const auto& c : theorem_cases()) {
    const auto r = tlhom::verify_equivariance(c.n, c.d, c.kind);
    checks += r.checks;
    if (!r.ok()) return {false, r.violations.front()};
  }
  return {true, std::to_string(checks) + " identities, all exact"};
}

Outcome ranks() {
  int cases = 0;
  for (const auto& c : theorem_cases()) {
    const auto r = tlhom::verify_rank(c.n, c.d, c.kind);
    ++cases;
    if (!r.ok) {
      return {false, "n=" + std::to_string(c.n) + " d=" + std::to_string(c.d) + " " +
                         tlhom::to_string(c.kind) + ": rank " + std::to_string(r.rank) +
                         " dim " + std::to_string(r.dim_v) + " target " +
                         std::to_string(r.target_dim)};
    }
  }
  const long long dim = tlhom::basis_dimension(6, 0);
  const bool dim_ok = dim == 5 && tlhom::binomial(4, 2) - tlhom::binomial(4, 0) == 5;
  return {dim_ok, std::to_string(cases) + " cases; dim V^{6,0} = " + std::to_string(dim)};
}

Outcome kernel() {
  const tlhom::JonesRepresentation rep(5, 3);
  const auto m = rep.word(tlhom::braid_word("@bigelow", 5));
  const bool ok = m == tlhom::Matrix<LaurentPoly>::Identity(rep.dim());
  return {ok, ok ? "symbolic identity" : "not the identity"};
}

Outcome torelli() {
  const auto word = tlhom::braid_word("@brown", 6);
  const auto setup = tlhom::build_setup(SurfaceKind::kClosed, 6);
  if (tlhom::psi_matrix(word, setup) != tlhom::Matrix<tlhom::Integer>::Identity(4))
    return {false, "homology action is not the identity"};
  double worst = 0;
  for (double x : {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 1.0})
    worst = std::max(worst, std::abs(tlhom::sr_at(word, 0, x) - 1));
  const auto scan = tlhom::sr_scan(word, 0, 512);
  double bump = 0;
  for (std::size_t k = 0; k < scan.grid.size(); ++k) {
    if (scan.grid[k] > 0.5 && scan.grid[k] < 1 && std::isfinite(scan.values[k]))
      bump = std::max(bump, scan.values[k]);
  }
  const bool ok = worst <= 1e-6 && bump > 1 + 1e-3;
  return {ok, "max |sr - 1| on sample points " + std::to_string(worst) +
                  ", max sr on (0.5, 1) " + std::to_string(bump)};
}

Outcome stretch() {
  const double target = (3 + std::sqrt(5.0)) / 2;
  const double s = tlhom::stretch_estimate(tlhom::braid_word("@lt3", 3), SurfaceKind::kOneBoundary);
  const auto products = tlhom::eigen_pair_products(tlhom::braid_word("@lt3", 3), 1, 1.0);
  double nearest = 1e300;
  for (double p : products) nearest = std::min(nearest, std::abs(p - target));
  const bool ok = std::abs(s - target) <= 1e-9 && nearest <= 1e-5;
  char buf[160];
  std::snprintf(buf, sizeof(buf), "stretch %.12f (err %.2e), nearest pair product err %.2e", s,
                std::abs(s - target), nearest);
  return {ok, buf};
}

Outcome properties() {
  using namespace tlhom::testing;
  Rng rng(20261016);
  struct Suite {
    const char* name;
    std::function<PropertyResult()> run;
  };
  const std::vector<Suite> suites = {
      {"tl_relations", [] { return tl_relations(8); }},
      {"braid_relations", [] { return jones_braid_relations(8); }},
      {"homology_braid_relations", [] { return homology_braid_relations(10); }},
      {"induced_functoriality", [&] { return induced_functoriality(rng, 60); }},
      {"wedge_eigen_products", [&] { return wedge_eigen_products(rng, 30); }},
      {"dx_binomial_count", [&] { return dx_binomial_count(rng, 30); }},
      {"solver_vs_charpoly", [&] { return solver_vs_charpoly(rng, 100, 12, 1e-8); }},
      {"parser_round_trip", [&] { return parser_round_trip(rng, 400); }},
  };
  std::string detail;
  bool ok = true;
  for (const auto& s : suites) {
    const auto r = s.run();
    detail += std::string(detail.empty() ? "" : ", ") + s.name + " " + (r.ok ? "ok" : "FAILED") +
              " (" + std::to_string(r.cases) + ")";
    if (!r.ok) {
      ok = false;
      detail += " [" + r.detail + "]";
    }
  }
  return {ok, detail};
}

Outcome certificate() {
  const auto certs = tlhom::order_certificates(golden_word(), 0, 2, 8, 8);
  if (certs.size() != 1) return {false, "expected one certificate"};
  const auto& c = certs[0];
  return {c.verdict == tlhom::Verdict::kInfiniteOrder,
          tlhom::to_string(c.verdict) + ", sr " + std::to_string(c.sr) + " at A = exp(2 pi i " +
              std::to_string(c.l) + "/40)"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "golden matrix char poly", 1, golden_matrix},
      {2, "golden spectral radius", 1, golden_value},
      {3, "exact equivariance n <= 9", 60, equivariance},
      {4, "intertwiner ranks n <= 9", 60, ranks},
      {5, "Burau kernel element on V^{5,3}", 10, kernel},
      {6, "Torelli braid", 30, torelli},
      {7, "homological stretch", 0, stretch},
      {8, "property suites", 0, properties},
      {9, "level 8 certificate", 1, certificate},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_s <= 0 || secs < c.limit_s;
    const bool pass = o.ok && in_time;
    if (!pass) ++failures;
    char timing[96];
    if (c.limit_s > 0)
      std::snprintf(timing, sizeof(timing), "%.3fs, limit %.0fs", secs, c.limit_s);
    else
      std::snprintf(timing, sizeof(timing), "%.3fs, no limit", secs);
    std::printf("criterion %d: %s  %s  (%s)  %s%s\n", c.id, pass ? "PASS" : "FAIL", c.name, timing,
                o.detail.c_str(), in_time ? "" : " [over time limit]");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
