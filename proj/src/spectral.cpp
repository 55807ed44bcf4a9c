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

#include "tlhom/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace tlhom {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double off_norm_col(const ComplexMatrix& h, std::size_t j) {
  double s = 0;
  for (std::size_t i = 0; i < h.rows(); ++i)
    if (i != j) s += std::abs(h(i, j));
  return s;
}

double off_norm_row(const ComplexMatrix& h, std::size_t i) {
  double s = 0;
  for (std::size_t j = 0; j < h.cols(); ++j)
    if (i != j) s += std::abs(h(i, j));
  return s;
}

// Diagonal similarity by powers of 2 to even out row and column norms.
void balance(ComplexMatrix& h) {
  const std::size_t n = h.rows();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      double c = off_norm_col(h, i);
      double r = off_norm_row(h, i);
      if (c == 0 || r == 0) continue;
      const double total = c + r;
      double f = 1;
      while (c < r / 2) {
        f *= 2;
        c *= 4;
      }
      while (c > r * 2) {
        f /= 2;
        c /= 4;
      }
      if ((c + r) / f < 0.95 * total) {
        changed = true;
        for (std::size_t j = 0; j < n; ++j) h(i, j) /= f;
        for (std::size_t j = 0; j < n; ++j) h(j, i) *= f;
      }
    }
  }
}

void to_hessenberg(ComplexMatrix& h) {
  const std::size_t n = h.rows();
  if (n < 3) return;
  std::vector<ComplexF> v(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double norm = 0;
    for (std::size_t i = k + 1; i < n; ++i) norm += std::norm(h(i, k));
    norm = std::sqrt(norm);
    if (norm == 0) continue;
    const ComplexF x0 = h(k + 1, k);
    const ComplexF phase = std::abs(x0) == 0 ? ComplexF(1) : x0 / std::abs(x0);
    const ComplexF alpha = -phase * norm;
    std::fill(v.begin(), v.end(), ComplexF(0));
    for (std::size_t i = k + 1; i < n; ++i) v[i] = h(i, k);
    v[k + 1] -= alpha;
    double vn = 0;
    for (std::size_t i = k + 1; i < n; ++i) vn += std::norm(v[i]);
    if (vn == 0) continue;
    vn = std::sqrt(vn);
    for (std::size_t i = k + 1; i < n; ++i) v[i] /= vn;
    // h <- (I - 2 v v^H) h
    for (std::size_t j = 0; j < n; ++j) {
      ComplexF s = 0;
      for (std::size_t i = k + 1; i < n; ++i) s += std::conj(v[i]) * h(i, j);
      s *= 2.0;
      for (std::size_t i = k + 1; i < n; ++i) h(i, j) -= v[i] * s;
    }
    // h <- h (I - 2 v v^H)
    for (std::size_t i = 0; i < n; ++i) {
      ComplexF s = 0;
      for (std::size_t j = k + 1; j < n; ++j) s += h(i, j) * v[j];
      s *= 2.0;
      for (std::size_t j = k + 1; j < n; ++j) h(i, j) -= s * std::conj(v[j]);
    }
    for (std::size_t i = k + 2; i < n; ++i) h(i, k) = 0;
  }
}

ComplexF wilkinson_shift(ComplexF a, ComplexF b, ComplexF c, ComplexF d) {
  const ComplexF half = (a - d) / 2.0;
  const ComplexF disc = std::sqrt(half * half + b * c);
  const ComplexF mid = (a + d) / 2.0;
  const ComplexF mu1 = mid + disc;
  const ComplexF mu2 = mid - disc;
  return std::abs(mu1 - d) < std::abs(mu2 - d) ? mu1 : mu2;
}

}  // namespace

std::vector<ComplexF> eigenvalues(const ComplexMatrix& m) {
  if (!m.square()) throw std::invalid_argument("eigenvalues of a non-square matrix");
  const std::size_t n = m.rows();
  for (const auto& z : m.data())
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw EigenError("matrix has non-finite entries", {});
  ComplexMatrix h = m;
  balance(h);
  to_hessenberg(h);

  std::vector<ComplexF> eig(n);
  std::vector<bool> done(n, false);
  const int cap = 60;  // iterations per eigenvalue
  struct Rot {
    ComplexF c, s;
    bool id;
  };
  std::vector<Rot> rots(n);
  long hi = static_cast<long>(n) - 1;
  int iter = 0;
  while (hi >= 0) {
    if (hi == 0) {
      eig[0] = h(0, 0);
      done[0] = true;
      break;
    }
    long lo = hi;
    while (lo > 0) {
      const double sub = std::abs(h(lo, lo - 1));
      double scale = std::abs(h(lo - 1, lo - 1)) + std::abs(h(lo, lo));
      if (scale == 0) {
        for (long j = 0; j <= hi; ++j) scale += std::abs(h(lo, j)) + std::abs(h(j, lo));
      }
      if (sub <= kEps * scale || sub < std::numeric_limits<double>::min()) break;
      --lo;
    }
    if (lo > 0) h(lo, lo - 1) = 0;
    if (lo == hi) {
      eig[hi] = h(hi, hi);
      done[hi] = true;
      --hi;
      iter = 0;
      continue;
    }
    if (iter >= cap) {
      std::vector<ComplexF> partial;
      for (std::size_t k = 0; k < n; ++k)
        if (done[k]) partial.push_back(eig[k]);
      throw EigenError("QR iteration did not converge after " + std::to_string(cap) +
                           " steps on an active block of size " + std::to_string(hi - lo + 1),
                       std::move(partial));
    }
    ComplexF mu;
    if (iter > 0 && iter % 10 == 0) {
      // exceptional shift
      mu = h(hi, hi) + 0.75 * std::abs(h(hi, hi - 1));
    } else {
      mu = wilkinson_shift(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
    }
    ++iter;
    for (long k = lo; k <= hi; ++k) h(k, k) -= mu;
    for (long k = lo; k < hi; ++k) {
      const ComplexF x = h(k, k);
      const ComplexF y = h(k + 1, k);
      const double r = std::hypot(std::abs(x), std::abs(y));
      if (r == 0) {
        rots[k] = {1, 0, true};
        continue;
      }
      const ComplexF c = x / r;
      const ComplexF s = y / r;
      rots[k] = {c, s, false};
      for (long j = k; j <= hi; ++j) {
        const ComplexF a = h(k, j);
        const ComplexF b = h(k + 1, j);
        h(k, j) = std::conj(c) * a + std::conj(s) * b;
        h(k + 1, j) = -s * a + c * b;
      }
    }
    for (long k = lo; k < hi; ++k) {
      if (rots[k].id) continue;
      const ComplexF c = rots[k].c;
      const ComplexF s = rots[k].s;
      const long top = std::min(k + 2, hi);
      for (long i = lo; i <= top; ++i) {
        const ComplexF a = h(i, k);
        const ComplexF b = h(i, k + 1);
        h(i, k) = a * c + b * s;
        h(i, k + 1) = -a * std::conj(s) + b * std::conj(c);
      }
    }
    for (long k = lo; k <= hi; ++k) h(k, k) += mu;
  }
  return eig;
}

double spectral_radius(const ComplexMatrix& m) {
  double best = 0;
  for (const auto& z : eigenvalues(m)) best = std::max(best, std::abs(z));
  return best;
}

std::vector<double> uniform_grid(int size) {
  if (size < 1) throw std::invalid_argument("grid needs at least one point");
  if (size == 1) return {0.0};
  std::vector<double> g(size);
  for (int k = 0; k < size; ++k) g[k] = static_cast<double>(k) / (size - 1);
  g.back() = 1.0;
  return g;
}

ScanResult sr_scan(const BraidWord& word, int d, const std::vector<double>& grid) {
  const JonesRepresentation rep(word.strands(), d);
  const Matrix<LaurentPoly> symbolic = rep.word(word, Normalization::kRescaled);
  ScanResult out;
  out.n = word.strands();
  out.d = d;
  out.braid = word.to_string();
  out.grid = grid;
  for (double x : grid) {
    try {
      out.values.push_back(spectral_radius(evaluate(symbolic, a_from_x(x))));
      out.errors.emplace_back();
    } catch (const EigenError& e) {
      out.values.push_back(std::numeric_limits<double>::quiet_NaN());
      out.errors.emplace_back(e.what());
    }
  }
  return out;
}

ScanResult sr_scan(const BraidWord& word, int d, int grid_size) {
  return sr_scan(word, d, uniform_grid(grid_size));
}

double sr_at(const BraidWord& word, int d, double x) {
  const JonesRepresentation rep(word.strands(), d);
  return spectral_radius(rep.word_at(word, a_from_x(x), Normalization::kRescaled));
}

PrimitiveRoot nearest_primitive_root(ComplexF z, long m) {
  if (m < 1) throw std::invalid_argument("root order must be positive");
  PrimitiveRoot best;
  best.distance = std::numeric_limits<double>::infinity();
  for (long a = 0; a < m; ++a) {
    if (std::gcd(a, m) != 1) continue;
    const ComplexF root = a_from_fraction(a, m);
    const double dist = std::abs(root - z);
    if (dist < best.distance - 1e-12) best = {a, root, dist};
  }
  return best;
}

std::string to_string(Verdict v) {
  return v == Verdict::kInfiniteOrder ? "infinite_order" : "inconclusive";
}

std::vector<OrderCertificate> order_certificates(const BraidWord& word, int d, int rank_n,
                                                 int k_min, int k_max) {
  if (rank_n < 1) throw std::invalid_argument("rank N must be positive");
  if (k_min < 1 || k_max < k_min) throw std::invalid_argument("bad level range");
  const JonesRepresentation rep(word.strands(), d);
  const Matrix<LaurentPoly> symbolic = rep.word(word, Normalization::kRescaled);
  std::vector<OrderCertificate> out;
  for (int k = k_min; k <= k_max; ++k) {
    const long m = 4L * (k + rank_n);
    OrderCertificate cert;
    cert.k = k;
    cert.rank_n = rank_n;
    cert.d = d;
    cert.sr = -1;
    for (long l = 1; l < m; ++l) {
      if (std::gcd(l, m) != 1) continue;
      const double sr = spectral_radius(evaluate(symbolic, a_from_fraction(l, m)));
      if (sr > cert.sr + 1e-12) {
        cert.sr = sr;
        cert.l = l;
      }
    }
    cert.verdict =
        cert.sr > 1 + kInfiniteOrderThreshold ? Verdict::kInfiniteOrder : Verdict::kInconclusive;
    out.push_back(cert);
  }
  return out;
}

double stretch_estimate(const BraidWord& word, SurfaceKind kind) {
  const HomologySetup setup = build_setup(kind, word.strands());
  const Matrix<Integer> m = psi_matrix(word, setup);
  return spectral_radius(convert<ComplexF>(m, [](const Integer& x) { return ComplexF(x.get_d()); }));
}

std::vector<double> eigen_pair_products(const BraidWord& word, int d, double x) {
  const JonesRepresentation rep(word.strands(), d);
  const auto eig = eigenvalues(rep.word_at(word, a_from_x(x), Normalization::kRescaled));
  std::vector<double> out;
  for (std::size_t i = 0; i < eig.size(); ++i)
    for (std::size_t j = i; j < eig.size(); ++j)
      out.push_back(std::sqrt(std::abs(eig[i] * eig[j])));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace tlhom
