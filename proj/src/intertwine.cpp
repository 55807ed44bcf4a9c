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

#include "tlhom/intertwine.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tlhom {

namespace {

GaussianRational to_gauss(const Integer& x) { return GaussianRational(Rational(x)); }

std::vector<GaussianRational> to_gauss(const IntVector& v) {
  std::vector<GaussianRational> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(to_gauss(x));
  return out;
}

GaussMatrix to_gauss(const Matrix<Integer>& m) {
  return convert<GaussianRational>(m, [](const Integer& x) { return to_gauss(x); });
}

// Matrix-vector product that skips zero entries of the vector.
std::vector<GaussianRational> sparse_apply(const GaussMatrix& m,
                                           const std::vector<GaussianRational>& v) {
  std::vector<GaussianRational> out(m.rows(), GaussianRational(0));
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (m(r, c).is_zero()) continue;
      out[r] += m(r, c) * v[c];
    }
  }
  return out;
}

std::string format_vector(const std::vector<GaussianRational>& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? ", " : "") << v[k];
  os << "]";
  return os.str();
}

GaussMatrix select(const GaussMatrix& m, const std::vector<std::size_t>& rows,
                   const std::vector<std::size_t>& cols) {
  GaussMatrix out(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = m(rows[r], cols[c]);
  return out;
}

IntVector chain_sum(int from, int to, int step, int base_dim) {
  if (to > base_dim)
    throw std::invalid_argument("arc needs c_" + std::to_string(to) + " but the surface has " +
                                std::to_string(base_dim) + " coordinates");
  IntVector x(base_dim, Integer(0));
  for (int k = from; k <= to; k += step) x[k - 1] = 1;
  return x;
}

}  // namespace

std::vector<ArcData> arc_data(const Diagram& diagram, int base_dim) {
  const auto arcs = diagram.arcs();
  std::vector<ArcData> out;
  for (const auto& [e0, e1] : arcs) {
    ArcData a;
    a.e0 = e0;
    a.e1 = e1;
    for (const auto& [f0, f1] : arcs)
      if (e0 < f0 && f0 < e1) ++a.w;
    for (int p = e1 + 1; p <= diagram.n(); ++p)
      if (diagram.to_infinity(p)) ++a.v;
    a.x = chain_sum(e0, e1 - 1, 1, base_dim);
    out.push_back(std::move(a));
  }
  return out;
}

int f_exponent(const Diagram& diagram) {
  int total = 0;
  for (const auto& a : arc_data(diagram, diagram.n())) total += a.w + a.v;
  return total;
}

Diagram tilde(const Diagram& diagram) {
  if (diagram.d() != 0) throw std::invalid_argument("tilde needs a diagram without bottom points");
  const int n = diagram.n();
  std::vector<int> partners(diagram.partners().begin(), diagram.partners().end() - 1);
  partners[diagram.partner(n) - 1] = Diagram::kInfinity;
  return Diagram(std::move(partners));
}

GaussVector phi(const Diagram& diagram, const HomologySetup& setup) {
  if (setup.kind == SurfaceKind::kClosed)
    throw std::invalid_argument("phi needs a one-boundary or two-boundary surface");
  if (setup.strands != diagram.n())
    throw std::invalid_argument("diagram has " + std::to_string(diagram.n()) +
                                " points but the surface has " + std::to_string(setup.strands) +
                                " strands");
  std::vector<std::vector<GaussianRational>> factors;
  long exponent = 0;
  for (const auto& a : arc_data(diagram, setup.dim)) {
    exponent += a.w + a.v;
    factors.push_back(to_gauss(a.x));
  }
  GaussVector out = wedge(factors, setup.dim);
  out *= minus_i_power(exponent);
  return out;
}

GaussVector phi_tilde(const Diagram& diagram, const HomologySetup& closed_setup) {
  if (closed_setup.kind != SurfaceKind::kClosed)
    throw std::invalid_argument("phi_tilde needs the closed surface");
  if (closed_setup.strands != diagram.n())
    throw std::invalid_argument("diagram size does not match the surface");
  // The one-boundary surface on n-1 strands has the same coordinates.
  const HomologySetup open = build_setup(SurfaceKind::kOneBoundary, diagram.n() - 1);
  return phi(tilde(diagram), open);
}

GaussVector intertwine(const Diagram& diagram, const HomologySetup& setup) {
  return setup.kind == SurfaceKind::kClosed ? phi_tilde(diagram, setup) : phi(diagram, setup);
}

int image_degree(int n, int d, SurfaceKind kind) {
  const int arcs = (n - d) / 2;
  return kind == SurfaceKind::kClosed ? arcs - 1 : arcs;
}

GaussMatrix intertwiner_matrix(const DiagramBasis& basis, const HomologySetup& setup) {
  const int l = image_degree(basis.n(), basis.d(), setup.kind);
  GaussMatrix m(static_cast<std::size_t>(binomial(setup.dim, l)), basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    m.set_col(k, intertwine(basis[k], setup).coeffs);
  }
  return m;
}

GaussVector omega_hat_gaussian(const HomologySetup& setup) {
  const SymplecticBivector b = symplectic_bivector(setup);
  GaussVector out{setup.dim, 2, {}};
  for (const auto& c : b.coefficients) out.coeffs.push_back(GaussianRational(c));
  return out;
}

EquivarianceReport verify_equivariance(int n, int d, SurfaceKind kind) {
  if (kind == SurfaceKind::kClosed && d != 0)
    throw ParityError("the closed surface only carries V^{n,0}");
  const HomologySetup setup = build_setup(kind, n);
  const DiagramBasis basis(n, d);
  const int l = image_degree(n, d, kind);

  std::vector<std::vector<GaussianRational>> images;
  for (const auto& diagram : basis.diagrams()) images.push_back(intertwine(diagram, setup).coeffs);

  EquivarianceReport report;
  report.n = n;
  report.d = d;
  report.kind = kind;
  const GaussianRational i_unit = GaussianRational::I();
  for (int i = 1; i <= n - 1; ++i) {
    const GaussMatrix twist =
        to_gauss(induced_map(transvection_matrix(setup.c(i), setup), l));
    for (std::size_t k = 0; k < basis.size(); ++k) {
      std::vector<GaussianRational> lhs = images[k];
      const EAction t = apply_e(i, basis[k]);
      if (!t.is_zero()) {
        const GaussianRational coef = i_unit * eval_laurent_gaussian(t.coefficient);
        if (!coef.is_zero()) {
          const auto& other = images[basis.index_of(*t.diagram)];
          for (std::size_t r = 0; r < lhs.size(); ++r) lhs[r] += coef * other[r];
        }
      }
      const std::vector<GaussianRational> rhs = sparse_apply(twist, images[k]);
      ++report.checks;
      if (lhs != rhs) {
        report.violations.push_back("D = " + basis[k].to_string() + ", i = " + std::to_string(i) +
                                    ": phi(D) + i phi(T_i D) = " + format_vector(lhs) +
                                    " but t_c phi(D) = " + format_vector(rhs));
      }
    }
  }
  return report;
}

RankReport verify_rank(int n, int d, SurfaceKind kind) {
  if (kind == SurfaceKind::kClosed && d != 0)
    throw ParityError("the closed surface only carries V^{n,0}");
  const HomologySetup setup = build_setup(kind, n);
  const DiagramBasis basis(n, d);
  const int l = image_degree(n, d, kind);
  const GaussMatrix phi_m = intertwiner_matrix(basis, setup);

  RankReport report;
  report.n = n;
  report.d = d;
  report.kind = kind;
  report.dim_v = static_cast<long long>(basis.size());
  if (kind == SurfaceKind::kTwoBoundary) {
    report.target_dim = binomial(setup.dim, l);
    report.rank = static_cast<long long>(rank(phi_m));
    report.ok = report.rank == report.dim_v;
  } else {
    const OmegaQuotient<GaussianRational> q(omega_hat_gaussian(setup), l);
    report.target_dim = static_cast<long long>(q.quotient_dim());
    report.rank = static_cast<long long>(rank(q.projection() * phi_m));
    report.ok = report.rank == report.dim_v && report.dim_v == report.target_dim;
  }
  return report;
}

BlockStructure block_structure(int n, int d) {
  const HomologySetup setup = build_setup(SurfaceKind::kTwoBoundary, n);
  const DiagramBasis basis(n, d);
  const int l = image_degree(n, d, SurfaceKind::kTwoBoundary);
  const GaussMatrix phi_m = intertwiner_matrix(basis, setup);
  const WedgeSpace space(setup.dim, l);

  std::vector<std::size_t> rows_with, rows_without, first, second;
  for (std::size_t r = 0; r < space.size(); ++r) {
    const auto& s = space.subset(r);
    const bool has_last = std::find(s.begin(), s.end(), setup.dim - 1) != s.end();
    (has_last ? rows_with : rows_without).push_back(r);
  }
  for (std::size_t k = 0; k < basis.size(); ++k)
    (basis[k].to_infinity(n) ? first : second).push_back(k);

  BlockStructure out;
  out.first_kind = static_cast<long long>(first.size());
  out.second_kind = static_cast<long long>(second.size());
  out.off_block_zero = true;
  for (std::size_t r : rows_with)
    for (std::size_t c : first)
      if (!phi_m(r, c).is_zero()) out.off_block_zero = false;
  out.rank_first = static_cast<long long>(rank(select(phi_m, rows_without, first)));
  out.rank_second = static_cast<long long>(rank(select(phi_m, rows_with, second)));
  return out;
}

NestedReduction nested_arc_reduction(const Diagram& diagram, std::pair<int, int> arc) {
  const auto [a0, a1] = arc;
  if (a0 < 1 || a1 > diagram.n() || diagram.partner(a0) != a1)
    throw std::invalid_argument("(" + std::to_string(a0) + " " + std::to_string(a1) +
                                ") is not an arc of " + diagram.to_string());
  const int base = std::max(diagram.n() - 1, 1);
  std::vector<IntVector> inner;
  for (const auto& a : arc_data(diagram, base))
    if (a0 < a.e0 && a.e0 < a1) inner.push_back(a.x);

  std::vector<IntVector> lhs{chain_sum(a0, a1 - 1, 1, base)};
  std::vector<IntVector> rhs{chain_sum(a0, a1 - 1, 2, base)};
  lhs.insert(lhs.end(), inner.begin(), inner.end());
  rhs.insert(rhs.end(), inner.begin(), inner.end());
  return {wedge(lhs, base), wedge(rhs, base)};
}

EquivalenceCheck check_equivalence(const BraidWord& word, int d, SurfaceKind kind) {
  const int n = word.strands();
  if (kind == SurfaceKind::kClosed && d != 0)
    throw ParityError("the closed surface only carries V^{n,0}");
  const HomologySetup setup = build_setup(kind, n);
  const JonesRepresentation rep(n, d);
  const int l = image_degree(n, d, kind);
  const GaussMatrix phi_m = intertwiner_matrix(rep.basis(), setup);
  const GaussMatrix m_v = rep.word_gaussian(word);
  const GaussMatrix m_h = to_gauss(induced_map(psi_matrix(word, setup), l));

  GaussMatrix lhs, rhs;
  if (kind == SurfaceKind::kTwoBoundary) {
    lhs = phi_m * m_v;
    rhs = m_h * phi_m;
  } else {
    const OmegaQuotient<GaussianRational> q(omega_hat_gaussian(setup), l);
    const GaussMatrix projected = q.projection() * phi_m;
    lhs = projected * m_v;
    rhs = q.induced(m_h) * projected;
  }
  EquivalenceCheck out;
  out.exact = lhs == rhs;
  for (int k = 0; k < 4; ++k) {
    if (lhs == minus_i_power(k) * rhs) {
      out.power = k;
      break;
    }
  }
  return out;
}

}  // namespace tlhom
