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

// Braid words and a small expression language for writing them.
//
// Grammar:
//   expr := term*            (whitespace and '.' separate terms)
//   term := atom ('^' int)?
//   atom := 's' int | 'σ' int | '(' expr ')' | '[' expr ',' expr ']' | '@' name
//   int  := '-'? digit+
//
// [x, y] is the commutator x y x^-1 y^-1. '@name' refers to a catalog entry
// and is resolved when the expression is flattened.
//
// Composition order: a word is read left to right and its matrix is the
// product of the letter matrices in the same order, M(w) = M(l_1) ... M(l_k).

#ifndef TLHOM_BRAID_HPP_
#define TLHOM_BRAID_HPP_

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace tlhom {

struct BraidLetter {
  int generator = 1;  // sigma_generator, 1-based
  int exponent = 1;   // nonzero

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(int strands, std::vector<BraidLetter> letters = {});

  int strands() const { return strands_; }
  const std::vector<BraidLetter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }

  // Appends a letter, merging it with a trailing letter on the same
  // generator. Zero exponents are dropped.
  void push(BraidLetter letter);
  void append(const BraidWord& other);

  BraidWord inverse() const;
  BraidWord power(int k) const;
  // Sum of all exponents (the writhe of the closure).
  long exponent_sum() const;
  // Number of letters counted with |exponent|.
  long length() const;
  // Same word on more strands (the natural inclusion B_n -> B_m).
  BraidWord on_strands(int strands) const;

  std::string to_string() const;

  friend BraidWord operator*(BraidWord a, const BraidWord& b) {
    a.append(b);
    return a;
  }
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_ = 1;
  std::vector<BraidLetter> letters_;
};

class BraidSyntaxError : public std::runtime_error {
 public:
  BraidSyntaxError(const std::string& message, std::size_t offset)
      : std::runtime_error(message + " at byte " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class BraidRangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class UnknownBraidError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Abstract syntax of a braid expression.
struct BraidExpr {
  struct Generator {
    int index;
  };
  struct Concat {
    std::vector<BraidExpr> parts;
  };
  struct Power {
    std::shared_ptr<const BraidExpr> base;
    int exponent;
  };
  struct Commutator {
    std::shared_ptr<const BraidExpr> left;
    std::shared_ptr<const BraidExpr> right;
  };
  struct CatalogRef {
    std::string name;
  };

  std::variant<Generator, Concat, Power, Commutator, CatalogRef> node;

  static BraidExpr gen(int index) { return {Generator{index}}; }
  static BraidExpr concat(std::vector<BraidExpr> parts) {
    return {Concat{std::move(parts)}};
  }
  static BraidExpr pow(BraidExpr base, int exponent) {
    return {Power{std::make_shared<const BraidExpr>(std::move(base)), exponent}};
  }
  static BraidExpr commutator(BraidExpr left, BraidExpr right) {
    return {Commutator{std::make_shared<const BraidExpr>(std::move(left)),
                       std::make_shared<const BraidExpr>(std::move(right))}};
  }
  static BraidExpr ref(std::string name) { return {CatalogRef{std::move(name)}}; }
};

bool operator==(const BraidExpr& a, const BraidExpr& b);

// Parses text as a braid on the given number of strands. Generator indices
// must lie in [1, strands-1]; catalog references must name a braid on at
// most `strands` strands.
BraidExpr parse_braid(std::string_view text, int strands);

// Canonical text form; parse_braid(print_braid(e), n) == e.
std::string print_braid(const BraidExpr& expr);

// Expands commutators, powers, and catalog references.
BraidWord flatten(const BraidExpr& expr, int strands);

// Convenience: parse then flatten.
BraidWord braid_word(std::string_view text, int strands);

struct CatalogEntry {
  std::string name;
  int strands;
  std::string text;         // expression with sub-braids expanded
  std::string description;  // where the braid comes from
};

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry& catalog_entry(std::string_view name);
BraidExpr catalog(std::string_view name);

// True iff every generator occurs, all odd-indexed generators carry exponents
// of one sign, and all even-indexed generators carry the opposite sign.
// Words on an odd number of strands are never of this type.
bool is_penner_type(const BraidWord& word);

}  // namespace tlhom

#endif  // TLHOM_BRAID_HPP_
