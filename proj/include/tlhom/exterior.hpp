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

// Exterior powers Lambda^l of a coordinate space of dimension D. Basis
// elements e_S are indexed by the l-subsets S of {0..D-1} in colexicographic
// order. Lambda^0 is the scalar line and negative degrees are the zero space.

#ifndef TLHOM_EXTERIOR_HPP_
#define TLHOM_EXTERIOR_HPP_

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tlhom/matrix.hpp"

namespace tlhom {

long long binomial(int n, int k);

class WedgeSpace {
 public:
  WedgeSpace(int base_dim, int degree);

  int base_dim() const { return base_dim_; }
  int degree() const { return degree_; }
  std::size_t size() const { return subsets_.size(); }
  // Sorted 0-based indices of basis element k.
  const std::vector<int>& subset(std::size_t k) const { return subsets_[k]; }
  const std::vector<std::vector<int>>& subsets() const { return subsets_; }
  // Position of a sorted subset.
  std::size_t index_of(std::span<const int> sorted_subset) const;

 private:
  int base_dim_;
  int degree_;
  std::vector<std::vector<int>> subsets_;
};

template <typename T>
struct WedgeVector {
  int base_dim = 0;
  int degree = 0;
  std::vector<T> coeffs;

  static WedgeVector zero(int base_dim, int degree) {
    return {base_dim, degree,
            std::vector<T>(degree < 0 ? 0 : static_cast<std::size_t>(binomial(base_dim, degree)), T(0))};
  }
  bool is_zero() const {
    for (const auto& c : coeffs)
      if (c != T(0)) return false;
    return true;
  }
  WedgeVector& operator+=(const WedgeVector& o) {
    check(o);
    for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] += o.coeffs[k];
    return *this;
  }
  WedgeVector& operator-=(const WedgeVector& o) {
    check(o);
    for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] -= o.coeffs[k];
    return *this;
  }
  WedgeVector& operator*=(const T& s) {
    for (auto& c : coeffs) c = c * s;
    return *this;
  }
  friend WedgeVector operator+(WedgeVector a, const WedgeVector& b) { return a += b; }
  friend WedgeVector operator-(WedgeVector a, const WedgeVector& b) { return a -= b; }
  friend WedgeVector operator*(const T& s, WedgeVector a) { return a *= s; }
  friend bool operator==(const WedgeVector& a, const WedgeVector& b) {
    return a.base_dim == b.base_dim && a.degree == b.degree && a.coeffs == b.coeffs;
  }

 private:
  void check(const WedgeVector& o) const {
    if (o.base_dim != base_dim || o.degree != degree)
      throw std::invalid_argument("wedge vectors live in different spaces");
  }
};

// Number of elements of `s` strictly greater than k.
inline int count_greater(const std::vector<int>& s, int k) {
  int c = 0;
  for (int x : s)
    if (x > k) ++c;
  return c;
}

// v_1 ^ ... ^ v_l for base vectors of common length D, expanded one factor
// at a time: e_S ^ e_k = (-1)^{#{s in S : s > k}} e_{S u {k}}.
template <typename T>
WedgeVector<T> wedge(const std::vector<std::vector<T>>& vectors, int base_dim) {
  for (const auto& v : vectors) {
    if (static_cast<int>(v.size()) != base_dim)
      throw std::invalid_argument("wedge factor has length " + std::to_string(v.size()) +
                                  ", expected " + std::to_string(base_dim));
  }
  const T zero(0);
  WedgeVector<T> acc = WedgeVector<T>::zero(base_dim, 0);
  acc.coeffs[0] = T(1);
  for (int step = 0; step < static_cast<int>(vectors.size()); ++step) {
    const auto& v = vectors[step];
    WedgeSpace src(base_dim, step);
    WedgeSpace dst(base_dim, step + 1);
    WedgeVector<T> next = WedgeVector<T>::zero(base_dim, step + 1);
    std::vector<int> merged;
    for (std::size_t s = 0; s < src.size(); ++s) {
      if (acc.coeffs[s] == zero) continue;
      const auto& subset = src.subset(s);
      for (int k = 0; k < base_dim; ++k) {
        if (v[k] == zero) continue;
        bool present = false;
        for (int x : subset)
          if (x == k) present = true;
        if (present) continue;
        merged = subset;
        merged.insert(std::upper_bound(merged.begin(), merged.end(), k), k);
        T term = acc.coeffs[s] * v[k];
        if (count_greater(subset, k) % 2 == 1) term = -term;
        next.coeffs[dst.index_of(merged)] += term;
      }
    }
    acc = std::move(next);
  }
  return acc;
}

// a ^ b for homogeneous elements of the same base space.
template <typename T>
WedgeVector<T> wedge_product(const WedgeVector<T>& a, const WedgeVector<T>& b) {
  if (a.base_dim != b.base_dim) throw std::invalid_argument("wedge_product: base mismatch");
  const int D = a.base_dim;
  if (a.degree < 0 || b.degree < 0 || a.degree + b.degree > D)
    return WedgeVector<T>::zero(D, a.degree + b.degree);
  WedgeSpace sa(D, a.degree), sb(D, b.degree), sc(D, a.degree + b.degree);
  WedgeVector<T> out = WedgeVector<T>::zero(D, a.degree + b.degree);
  const T zero(0);
  std::vector<int> merged;
  for (std::size_t i = 0; i < sa.size(); ++i) {
    if (a.coeffs[i] == zero) continue;
    const auto& s = sa.subset(i);
    for (std::size_t j = 0; j < sb.size(); ++j) {
      if (b.coeffs[j] == zero) continue;
      const auto& t = sb.subset(j);
      // sign of the shuffle: pairs (x in s, y in t) with x > y
      int inversions = 0;
      bool overlap = false;
      for (int y : t) {
        for (int x : s) {
          if (x == y) overlap = true;
          if (x > y) ++inversions;
        }
      }
      if (overlap) continue;
      merged.clear();
      std::merge(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(merged));
      T term = a.coeffs[i] * b.coeffs[j];
      if (inversions % 2 == 1) term = -term;
      out.coeffs[sc.index_of(merged)] += term;
    }
  }
  return out;
}

// Compound matrix: entry (S, T) is the minor of m on rows S and columns T,
// so that it maps e_T to (m e_t1) ^ ... ^ (m e_tl). Needs exact division in
// T (integers, rationals, Q(i), or floating point).
template <typename T>
Matrix<T> induced_map(const Matrix<T>& m, int degree) {
  if (!m.square()) throw std::invalid_argument("induced_map needs a square matrix");
  const int D = static_cast<int>(m.rows());
  if (degree < 0 || degree > D) return Matrix<T>(0, 0);
  WedgeSpace space(D, degree);
  Matrix<T> out(space.size(), space.size());
  Matrix<T> minor(degree, degree);
  for (std::size_t r = 0; r < space.size(); ++r) {
    const auto& rs = space.subset(r);
    for (std::size_t c = 0; c < space.size(); ++c) {
      const auto& cs = space.subset(c);
      for (int i = 0; i < degree; ++i)
        for (int j = 0; j < degree; ++j) minor(i, j) = m(rs[i], cs[j]);
      out(r, c) = determinant(minor);
    }
  }
  return out;
}

// Apply a compound matrix to a wedge vector.
template <typename T>
WedgeVector<T> apply(const Matrix<T>& induced, const WedgeVector<T>& v) {
  WedgeVector<T> out{v.base_dim, v.degree, induced * v.coeffs};
  return out;
}

// The quotient Lambda^l / (omega_hat ^ Lambda^{l-2}) over a field T.
//
// The subspace W is spanned by omega_hat ^ e_T for the (l-2)-subsets T. Its
// spanning matrix is brought to reduced column echelon form; the pivot rows
// P are eliminated and the quotient is coordinatised by the remaining rows
// (lowest index first), whose unit vectors e_S represent the quotient basis.
template <typename T>
class OmegaQuotient {
 public:
  OmegaQuotient(const WedgeVector<T>& omega_hat, int degree)
      : base_dim_(omega_hat.base_dim), degree_(degree) {
    if (omega_hat.degree != 2) throw std::invalid_argument("omega_hat must have degree 2");
    const std::size_t full = degree < 0 ? 0 : static_cast<std::size_t>(binomial(base_dim_, degree));
    // Columns of W.
    std::vector<std::vector<T>> columns;
    if (degree >= 2) {
      WedgeSpace lower(base_dim_, degree - 2);
      for (std::size_t k = 0; k < lower.size(); ++k) {
        WedgeVector<T> e = WedgeVector<T>::zero(base_dim_, degree - 2);
        e.coeffs[k] = T(1);
        columns.push_back(wedge_product(omega_hat, e).coeffs);
      }
    }
    reduce(columns, full);
  }

  int degree() const { return degree_; }
  std::size_t full_dim() const { return pivot_flags_.size(); }
  std::size_t subspace_dim() const { return basis_.size(); }
  std::size_t quotient_dim() const { return kept_rows_.size(); }
  const std::vector<std::size_t>& representative_rows() const { return kept_rows_; }
  // Reduced spanning vectors of W (unit at their pivot row).
  const std::vector<std::vector<T>>& subspace_basis() const { return basis_; }

  // Coordinates of the class of x in the quotient basis.
  std::vector<T> project(std::span<const T> x) const {
    std::vector<T> y(x.begin(), x.end());
    const T zero(0);
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      const T f = y[pivots_[k]];
      if (f == zero) continue;
      for (std::size_t r = 0; r < y.size(); ++r) y[r] -= f * basis_[k][r];
    }
    std::vector<T> out;
    out.reserve(kept_rows_.size());
    for (std::size_t r : kept_rows_) out.push_back(y[r]);
    return out;
  }
  std::vector<T> project(const WedgeVector<T>& v) const { return project(std::span<const T>(v.coeffs)); }

  // Projection as a (quotient_dim x full_dim) matrix.
  Matrix<T> projection() const {
    Matrix<T> p(quotient_dim(), full_dim());
    for (std::size_t c = 0; c < full_dim(); ++c) {
      std::vector<T> e(full_dim(), T(0));
      e[c] = T(1);
      p.set_col(c, project(std::span<const T>(e)));
    }
    return p;
  }

  // Action of an induced map on the quotient. Throws std::logic_error when
  // the map does not preserve W.
  Matrix<T> induced(const Matrix<T>& induced_full) const {
    if (induced_full.rows() != full_dim() || induced_full.cols() != full_dim())
      throw std::invalid_argument("induced map has the wrong size for this quotient");
    for (const auto& w : basis_) {
      std::vector<T> image = induced_full * w;
      for (const auto& c : project(std::span<const T>(image))) {
        if (c != T(0)) throw std::logic_error("map does not preserve omega ^ Lambda^{l-2}");
      }
    }
    Matrix<T> out(quotient_dim(), quotient_dim());
    for (std::size_t j = 0; j < kept_rows_.size(); ++j) {
      out.set_col(j, project(std::span<const T>(induced_full.col(kept_rows_[j]))));
    }
    return out;
  }

 private:
  void reduce(std::vector<std::vector<T>> cols, std::size_t full) {
    const T zero(0);
    pivot_flags_.assign(full, false);
    // Gauss-Jordan on columns, scanning rows top to bottom.
    std::size_t next = 0;
    for (std::size_t row = 0; row < full && next < cols.size(); ++row) {
      std::size_t p = next;
      while (p < cols.size() && cols[p][row] == zero) ++p;
      if (p == cols.size()) continue;
      std::swap(cols[next], cols[p]);
      const T inv = T(1) / cols[next][row];
      for (auto& x : cols[next]) x = x * inv;
      for (std::size_t k = 0; k < cols.size(); ++k) {
        if (k == next || cols[k][row] == zero) continue;
        const T f = cols[k][row];
        for (std::size_t r = 0; r < full; ++r) cols[k][r] -= f * cols[next][r];
      }
      pivots_.push_back(row);
      pivot_flags_[row] = true;
      ++next;
    }
    cols.resize(next);
    basis_ = std::move(cols);
    for (std::size_t r = 0; r < full; ++r)
      if (!pivot_flags_[r]) kept_rows_.push_back(r);
  }

  int base_dim_;
  int degree_;
  std::vector<std::vector<T>> basis_;
  std::vector<std::size_t> pivots_;
  std::vector<bool> pivot_flags_;
  std::vector<std::size_t> kept_rows_;
};

}  // namespace tlhom

#endif  // TLHOM_EXTERIOR_HPP_
