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

#include "tlhom/tl_diagram.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace tlhom {

namespace {

constexpr int kInf = Diagram::kInfinity;

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Diagram

bool is_valid_diagram(const std::vector<int>& partners) {
  const int n = static_cast<int>(partners.size());
  for (int p = 1; p <= n; ++p) {
    int q = partners[p - 1];
    if (q == kInf) continue;
    if (q < 1 || q > n || q == p || partners[q - 1] != p) return false;
  }
  // Non-crossing and nothing running to infinity from under an arc: scan
  // left to right with a stack of open arcs.
  std::vector<int> open;
  for (int p = 1; p <= n; ++p) {
    int q = partners[p - 1];
    if (q == kInf) {
      if (!open.empty()) return false;
    } else if (q > p) {
      open.push_back(p);
    } else {
      if (open.empty() || open.back() != q) return false;
      open.pop_back();
    }
  }
  return open.empty();
}

Diagram::Diagram(std::vector<int> partners) : partners_(std::move(partners)) {
  if (!is_valid_diagram(partners_)) {
    throw std::invalid_argument("not a non-crossing basis diagram");
  }
}

Diagram Diagram::parse(const std::string& text) {
  // Collect "(a b)" groups; b may be "inf" or "∞".
  std::vector<std::pair<int, int>> groups;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_point = [&]() -> int {
    skip_space();
    if (text.compare(pos, 3, "inf") == 0) {
      pos += 3;
      return kInf;
    }
    if (text.compare(pos, 3, "\xE2\x88\x9E") == 0) {
      pos += 3;
      return kInf;
    }
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw std::invalid_argument("bad diagram text: " + text);
    return std::stoi(text.substr(start, pos - start));
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') throw std::invalid_argument("bad diagram text: " + text);
    ++pos;
    int a = read_point();
    int b = read_point();
    skip_space();
    if (pos >= text.size() || text[pos] != ')') throw std::invalid_argument("bad diagram text: " + text);
    ++pos;
    groups.emplace_back(a, b);
    skip_space();
  }
  int n = 0;
  for (auto [a, b] : groups) n = std::max({n, a, b});
  std::vector<int> partners(n, -1);
  for (auto [a, b] : groups) {
    if (a == kInf) throw std::invalid_argument("bad diagram text: " + text);
    if (partners[a - 1] != -1) throw std::invalid_argument("point listed twice: " + text);
    partners[a - 1] = b;
    if (b != kInf) {
      if (partners[b - 1] != -1) throw std::invalid_argument("point listed twice: " + text);
      partners[b - 1] = a;
    }
  }
  if (std::count(partners.begin(), partners.end(), -1) != 0) {
    throw std::invalid_argument("diagram text leaves points unpaired: " + text);
  }
  return Diagram(std::move(partners));
}

int Diagram::d() const {
  return static_cast<int>(std::count(partners_.begin(), partners_.end(), kInf));
}

std::vector<std::pair<int, int>> Diagram::arcs() const {
  std::vector<std::pair<int, int>> out;
  for (int p = 1; p <= n(); ++p) {
    int q = partners_[p - 1];
    if (q != kInf && q > p) out.emplace_back(p, q);
  }
  return out;
}

int Diagram::arc_count() const { return (n() - d()) / 2; }

std::vector<int> Diagram::order_key() const {
  std::vector<int> key = partners_;
  for (int& k : key) {
    if (k == kInf) k = n() + 1;
  }
  return key;
}

std::string Diagram::to_string() const {
  std::ostringstream os;
  for (int p = 1; p <= n(); ++p) {
    int q = partners_[p - 1];
    if (q == kInf) {
      os << '(' << p << " \xE2\x88\x9E)";
    } else if (q > p) {
      os << '(' << p << ' ' << q << ')';
    }
  }
  return os.str();
}

long long basis_dimension(int n, int d) {
  if (d < 0 || d > n || (n - d) % 2 != 0) return 0;
  int l = (n - d) / 2;
  return binomial(n, l) - binomial(n, l - 1);
}

std::vector<Diagram> enumerate_basis(int n, int d) {
  if (n < 0 || d < 0 || d > n || (n - d) % 2 != 0) {
    throw ParityError("V^{n,d} needs 0 <= d <= n and d = n mod 2 (got n=" +
                      std::to_string(n) + ", d=" + std::to_string(d) + ")");
  }
  std::vector<Diagram> out;
  std::vector<int> partners(n, kInf);
  std::vector<int> open;
  // Depth-first over positions: a point may go to infinity (only when no
  // arc is open), open an arc, or close the innermost open arc.
  auto rec = [&](auto&& self, int p, int infinities) -> void {
    const int remaining = n - p + 1;
    if (p > n) {
      if (open.empty() && infinities == d) out.emplace_back(partners);
      return;
    }
    if (static_cast<int>(open.size()) > remaining) return;
    if (open.empty() && infinities < d) {
      partners[p - 1] = kInf;
      self(self, p + 1, infinities + 1);
    }
    open.push_back(p);
    self(self, p + 1, infinities);
    open.pop_back();
    if (!open.empty()) {
      int q = open.back();
      open.pop_back();
      partners[p - 1] = q;
      partners[q - 1] = p;
      self(self, p + 1, infinities);
      partners[q - 1] = kInf;
      open.push_back(q);
    }
    partners[p - 1] = kInf;
  };
  rec(rec, 1, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// e_i action

EAction apply_e(int i, const Diagram& diagram) {
  const int n = diagram.n();
  if (i < 1 || i >= n) {
    throw std::out_of_range("e_" + std::to_string(i) + " out of range for n=" +
                            std::to_string(n));
  }
  const int a = diagram.partner(i);
  const int b = diagram.partner(i + 1);
  if (a == i + 1) return {diagram, LaurentPoly::LoopValue()};
  if (a == kInf && b == kInf) return {std::nullopt, LaurentPoly()};

  std::vector<int> partners = diagram.partners();
  partners[i - 1] = i + 1;
  partners[i] = i;
  if (a == kInf) {
    partners[b - 1] = kInf;
  } else if (b == kInf) {
    partners[a - 1] = kInf;
  } else {
    partners[a - 1] = b;
    partners[b - 1] = a;
  }
  return {Diagram(std::move(partners)), LaurentPoly(1)};
}

// ---------------------------------------------------------------------------
// Matrices

DiagramBasis::DiagramBasis(int n, int d)
    : n_(n), d_(d), diagrams_(enumerate_basis(n, d)) {
  for (std::size_t k = 0; k < diagrams_.size(); ++k) {
    index_.emplace(diagrams_[k].partners(), k);
  }
}

std::size_t DiagramBasis::index_of(const Diagram& diagram) const {
  auto it = index_.find(diagram.partners());
  if (it == index_.end()) throw std::out_of_range("diagram not in basis: " + diagram.to_string());
  return it->second;
}

Matrix<LaurentPoly> rep_e(int i, const DiagramBasis& basis) {
  const std::size_t dim = basis.size();
  Matrix<LaurentPoly> m(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    EAction r = apply_e(i, basis[col]);
    if (r.is_zero()) continue;
    m(basis.index_of(*r.diagram), col) += r.coefficient;
  }
  return m;
}

Matrix<LaurentPoly> rep_sigma(int i, const DiagramBasis& basis, bool inverse) {
  const int id_exp = inverse ? -1 : 1;
  Matrix<LaurentPoly> m = rep_e(i, basis);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      m(r, c) = m(r, c).shifted(-id_exp);
      if (r == c) m(r, c) += LaurentPoly::Monomial(id_exp);
    }
  }
  return m;
}

Matrix<ComplexF> evaluate(const Matrix<LaurentPoly>& m, ComplexF a) {
  return convert<ComplexF>(m, [a](const LaurentPoly& p) { return eval_laurent(p, a); });
}

Matrix<GaussianRational> evaluate_gaussian(const Matrix<LaurentPoly>& m) {
  return convert<GaussianRational>(m, [](const LaurentPoly& p) { return eval_laurent_gaussian(p); });
}

JonesRepresentation::JonesRepresentation(int n, int d) : basis_(n, d) {
  for (int i = 1; i < n; ++i) {
    e_.push_back(rep_e(i, basis_));
    sigma_.push_back(rep_sigma(i, basis_, false));
    sigma_inv_.push_back(rep_sigma(i, basis_, true));
  }
}

void JonesRepresentation::check_word(const BraidWord& w) const {
  if (w.strands() != basis_.n()) {
    throw std::invalid_argument("braid on " + std::to_string(w.strands()) +
                                " strands acting on V^{" + std::to_string(basis_.n()) +
                                "," + std::to_string(basis_.d()) + "}");
  }
}

Matrix<LaurentPoly> JonesRepresentation::word(const BraidWord& w, Normalization norm) const {
  check_word(w);
  Matrix<LaurentPoly> m = Matrix<LaurentPoly>::Identity(dim());
  for (const auto& l : w.letters()) {
    const auto& g = sigma(l.generator, l.exponent < 0);
    for (int k = 0; k < std::abs(l.exponent); ++k) m = m * g;
  }
  if (norm == Normalization::kRescaled) {
    const int shift = -static_cast<int>(w.exponent_sum());
    m = m.map([shift](const LaurentPoly& p) { return p.shifted(shift); });
  }
  return m;
}

Matrix<ComplexF> JonesRepresentation::word_at(const BraidWord& w, ComplexF a,
                                              Normalization norm) const {
  check_word(w);
  const std::size_t n_gen = sigma_.size();
  std::vector<Matrix<ComplexF>> fwd(n_gen), inv(n_gen);
  std::vector<bool> have_fwd(n_gen, false), have_inv(n_gen, false);
  const ComplexF scale_fwd = norm == Normalization::kRescaled ? 1.0 / a : 1.0;
  const ComplexF scale_inv = norm == Normalization::kRescaled ? a : 1.0;
  Matrix<ComplexF> m = Matrix<ComplexF>::Identity(dim());
  for (const auto& l : w.letters()) {
    const std::size_t g = l.generator - 1;
    const bool is_inv = l.exponent < 0;
    auto& cache = is_inv ? inv : fwd;
    auto& have = is_inv ? have_inv : have_fwd;
    if (!have[g]) {
      cache[g] = evaluate(sigma(l.generator, is_inv), a) * (is_inv ? scale_inv : scale_fwd);
      have[g] = true;
    }
    for (int k = 0; k < std::abs(l.exponent); ++k) m = m * cache[g];
  }
  return m;
}

Matrix<GaussianRational> JonesRepresentation::word_gaussian(const BraidWord& w) const {
  check_word(w);
  Matrix<GaussianRational> m = Matrix<GaussianRational>::Identity(dim());
  for (const auto& l : w.letters()) {
    const bool is_inv = l.exponent < 0;
    const int shift = is_inv ? 1 : -1;
    Matrix<GaussianRational> g = evaluate_gaussian(sigma(l.generator, is_inv).map(
        [shift](const LaurentPoly& p) { return p.shifted(shift); }));
    for (int k = 0; k < std::abs(l.exponent); ++k) m = m * g;
  }
  return m;
}

}  // namespace tlhom
