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

// Eigenvalues, spectral-radius scans of the Jones representations along
// A = exp(-pi i x/4), root-of-unity order certificates and homological
// stretch factors.

#ifndef TLHOM_SPECTRAL_HPP_
#define TLHOM_SPECTRAL_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tlhom/braid.hpp"
#include "tlhom/homology.hpp"
#include "tlhom/matrix.hpp"
#include "tlhom/scalars.hpp"
#include "tlhom/tl_diagram.hpp"

namespace tlhom {

using ComplexMatrix = Matrix<ComplexF>;

// Thrown when QR iteration stalls; carries the eigenvalues that did
// converge.
class EigenError : public std::runtime_error {
 public:
  EigenError(const std::string& what, std::vector<ComplexF> partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const std::vector<ComplexF>& partial() const { return partial_; }

 private:
  std::vector<ComplexF> partial_;
};

// All eigenvalues with multiplicity: balancing, Householder reduction to
// Hessenberg form, then single-shift complex QR with Wilkinson shifts.
std::vector<ComplexF> eigenvalues(const ComplexMatrix& m);

double spectral_radius(const ComplexMatrix& m);

// Uniform grid of `size` points on [0, 1], endpoints included.
std::vector<double> uniform_grid(int size);

struct ScanResult {
  int n = 0;
  int d = 0;
  std::string braid;
  std::vector<double> grid;
  std::vector<double> values;               // NaN where the solver failed
  std::vector<std::optional<std::string>> errors;
};

// sr of the rescaled eta^{n,d}(w) at A = exp(-pi i x/4) for each x of the
// grid. The symbolic matrix is built once and evaluated per point.
ScanResult sr_scan(const BraidWord& word, int d, const std::vector<double>& grid);
ScanResult sr_scan(const BraidWord& word, int d, int grid_size = 512);

// Single point of the same function.
double sr_at(const BraidWord& word, int d, double x);

struct PrimitiveRoot {
  long a = 0;  // root is exp(2 pi i a/m)
  ComplexF root;
  double distance = 0;
};

// Primitive m-th root of unity closest to z; ties go to the smaller a.
// Throws std::invalid_argument for m < 1.
PrimitiveRoot nearest_primitive_root(ComplexF z, long m);

inline constexpr double kInfiniteOrderThreshold = 1e-6;

enum class Verdict { kInfiniteOrder, kInconclusive };
std::string to_string(Verdict v);

struct OrderCertificate {
  int k = 0;
  int rank_n = 2;
  int d = 0;
  long l = 1;  // A = exp(2 pi i l/(4(k+N)))
  double sr = 0;
  Verdict verdict = Verdict::kInconclusive;
};

// For each level k, evaluates the rescaled matrix at every primitive
// 4(k+N)-th root A_l (l coprime to 4(k+N)) and keeps the largest spectral
// radius; ties go to the smaller l. infinite_order iff sr > 1 + 1e-6.
std::vector<OrderCertificate> order_certificates(const BraidWord& word, int d, int rank_n,
                                                 int k_min, int k_max);

// Spectral radius of the homology action of w.
double stretch_estimate(const BraidWord& word, SurfaceKind kind);

// sqrt|lambda_i lambda_j| for i <= j over the eigenvalues of eta^{n,d}(w) at
// A = exp(-pi i x/4), sorted in decreasing order.
std::vector<double> eigen_pair_products(const BraidWord& word, int d, double x);

}  // namespace tlhom

#endif  // TLHOM_SPECTRAL_HPP_
