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

#include "tlhom/exterior.hpp"

namespace tlhom {

long long binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

WedgeSpace::WedgeSpace(int base_dim, int degree) : base_dim_(base_dim), degree_(degree) {
  if (base_dim < 0) throw std::invalid_argument("negative base dimension");
  if (degree < 0 || degree > base_dim) return;
  // Colex order: the k-th subset in this enumeration has rank k.
  std::vector<int> s(degree);
  for (int j = 0; j < degree; ++j) s[j] = j;
  while (true) {
    subsets_.push_back(s);
    // Advance: find the lowest j with s[j] + 1 < s[j + 1] (or below base_dim
    // for the top entry), bump it and reset the ones below.
    int j = 0;
    while (j < degree) {
      const int limit = j + 1 < degree ? s[j + 1] : base_dim;
      if (s[j] + 1 < limit) break;
      ++j;
    }
    if (j == degree) break;
    ++s[j];
    for (int t = 0; t < j; ++t) s[t] = t;
  }
}

std::size_t WedgeSpace::index_of(std::span<const int> sorted_subset) const {
  if (static_cast<int>(sorted_subset.size()) != degree_)
    throw std::invalid_argument("subset size does not match the degree");
  std::size_t r = 0;
  for (int j = 0; j < degree_; ++j) {
    const int x = sorted_subset[j];
    if (x < 0 || x >= base_dim_ || (j > 0 && sorted_subset[j - 1] >= x))
      throw std::invalid_argument("subset is not a sorted subset of the base");
    r += static_cast<std::size_t>(binomial(x, j + 1));
  }
  return r;
}

}  // namespace tlhom
