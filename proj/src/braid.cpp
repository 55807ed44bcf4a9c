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

#include "tlhom/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>

namespace tlhom {

// ---------------------------------------------------------------------------
// BraidWord

BraidWord::BraidWord(int strands, std::vector<BraidLetter> letters)
    : strands_(strands) {
  if (strands < 1) throw BraidRangeError("a braid needs at least one strand");
  for (const auto& l : letters) push(l);
}

void BraidWord::push(BraidLetter letter) {
  if (letter.generator < 1 || letter.generator >= strands_) {
    throw BraidRangeError("generator s" + std::to_string(letter.generator) +
                          " out of range for " + std::to_string(strands_) +
                          " strands");
  }
  if (letter.exponent == 0) return;
  if (!letters_.empty() && letters_.back().generator == letter.generator) {
    letters_.back().exponent += letter.exponent;
    if (letters_.back().exponent == 0) letters_.pop_back();
    return;
  }
  letters_.push_back(letter);
}

void BraidWord::append(const BraidWord& other) {
  if (other.strands_ > strands_) {
    throw BraidRangeError("cannot append a braid on more strands");
  }
  for (const auto& l : other.letters_) push(l);
}

BraidWord BraidWord::inverse() const {
  BraidWord out(strands_);
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.push({it->generator, -it->exponent});
  return out;
}

BraidWord BraidWord::power(int k) const {
  BraidWord base = k >= 0 ? *this : inverse();
  BraidWord out(strands_);
  for (int i = 0; i < std::abs(k); ++i) out.append(base);
  return out;
}

long BraidWord::exponent_sum() const {
  long sum = 0;
  for (const auto& l : letters_) sum += l.exponent;
  return sum;
}

long BraidWord::length() const {
  long sum = 0;
  for (const auto& l : letters_) sum += std::abs(l.exponent);
  return sum;
}

BraidWord BraidWord::on_strands(int strands) const {
  BraidWord out(strands);
  for (const auto& l : letters_) out.push(l);
  return out;
}

std::string BraidWord::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& l : letters_) {
    if (!first) os << ' ';
    first = false;
    os << 's' << l.generator;
    if (l.exponent != 1) os << '^' << l.exponent;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Expression equality

bool operator==(const BraidExpr& a, const BraidExpr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using N = std::decay_t<decltype(x)>;
        const N& y = std::get<N>(b.node);
        if constexpr (std::is_same_v<N, BraidExpr::Generator>) {
          return x.index == y.index;
        } else if constexpr (std::is_same_v<N, BraidExpr::Concat>) {
          return x.parts == y.parts;
        } else if constexpr (std::is_same_v<N, BraidExpr::Power>) {
          return x.exponent == y.exponent && *x.base == *y.base;
        } else if constexpr (std::is_same_v<N, BraidExpr::Commutator>) {
          return *x.left == *y.left && *x.right == *y.right;
        } else {
          return x.name == y.name;
        }
      },
      a.node);
}

// ---------------------------------------------------------------------------
// Parser

namespace {

constexpr std::string_view kSigmaUtf8 = "\xCF\x83";  // U+03C3

class Parser {
 public:
  Parser(std::string_view text, int strands) : text_(text), strands_(strands) {}

  BraidExpr parse_all() {
    BraidExpr e = parse_expr();
    skip_separators();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw BraidSyntaxError(message, pos_);
  }

  void skip_separators() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '.') {
        ++pos_;
      } else {
        break;
      }
    }
  }

  bool at_term_start() const {
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c == 's' || c == '(' || c == '[' || c == '@' ||
           text_.substr(pos_).starts_with(kSigmaUtf8);
  }

  BraidExpr parse_expr() {
    std::vector<BraidExpr> parts;
    skip_separators();
    while (at_term_start()) {
      parts.push_back(parse_term());
      skip_separators();
    }
    if (parts.size() == 1) return std::move(parts.front());
    return BraidExpr::concat(std::move(parts));
  }

  BraidExpr parse_term() {
    BraidExpr atom = parse_atom();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      int e = parse_int(true);
      return BraidExpr::pow(std::move(atom), e);
    }
    return atom;
  }

  BraidExpr parse_atom() {
    const std::size_t start = pos_;
    if (text_.substr(pos_).starts_with(kSigmaUtf8)) {
      pos_ += kSigmaUtf8.size();
      return make_generator(start);
    }
    char c = text_[pos_];
    if (c == 's') {
      ++pos_;
      return make_generator(start);
    }
    if (c == '(') {
      ++pos_;
      BraidExpr inner = parse_expr();
      expect(')');
      return inner;
    }
    if (c == '[') {
      ++pos_;
      BraidExpr left = parse_expr();
      expect(',');
      BraidExpr right = parse_expr();
      expect(']');
      return BraidExpr::commutator(std::move(left), std::move(right));
    }
    if (c == '@') {
      ++pos_;
      std::size_t name_start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      if (pos_ == name_start) fail("expected a catalog name after '@'");
      std::string name(text_.substr(name_start, pos_ - name_start));
      const CatalogEntry* entry = nullptr;
      try {
        entry = &catalog_entry(name);
      } catch (const UnknownBraidError&) {
        pos_ = name_start;
        fail("unknown catalog braid '" + name + "'");
      }
      if (entry->strands > strands_) {
        throw BraidRangeError("catalog braid '" + name + "' needs " +
                              std::to_string(entry->strands) + " strands, have " +
                              std::to_string(strands_));
      }
      return BraidExpr::ref(std::move(name));
    }
    fail("expected a generator, '(', '[' or '@'");
  }

  BraidExpr make_generator(std::size_t start) {
    int index = parse_int(false);
    if (index < 1 || index >= strands_) {
      throw BraidRangeError("generator index " + std::to_string(index) +
                            " at byte " + std::to_string(start) +
                            " out of range for " + std::to_string(strands_) +
                            " strands");
    }
    return BraidExpr::gen(index);
  }

  int parse_int(bool allow_sign) {
    std::size_t start = pos_;
    bool negative = false;
    if (allow_sign && pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected an integer");
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + digits, text_.data() + pos_, value);
    if (ec != std::errc()) {
      pos_ = start;
      fail("integer out of range");
    }
    return negative ? -value : value;
  }

  void expect(char c) {
    skip_separators();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string_view text_;
  int strands_;
  std::size_t pos_ = 0;
};

bool needs_parens_as_base(const BraidExpr& e) {
  return std::holds_alternative<BraidExpr::Concat>(e.node) ||
         std::holds_alternative<BraidExpr::Power>(e.node);
}

void print_into(const BraidExpr& e, std::ostringstream& os) {
  std::visit(
      [&](const auto& x) {
        using N = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<N, BraidExpr::Generator>) {
          os << 's' << x.index;
        } else if constexpr (std::is_same_v<N, BraidExpr::Concat>) {
          bool first = true;
          for (const auto& p : x.parts) {
            if (!first) os << ' ';
            first = false;
            bool wrap = std::holds_alternative<BraidExpr::Concat>(p.node);
            if (wrap) os << '(';
            print_into(p, os);
            if (wrap) os << ')';
          }
        } else if constexpr (std::is_same_v<N, BraidExpr::Power>) {
          bool wrap = needs_parens_as_base(*x.base);
          if (wrap) os << '(';
          print_into(*x.base, os);
          if (wrap) os << ')';
          os << '^' << x.exponent;
        } else if constexpr (std::is_same_v<N, BraidExpr::Commutator>) {
          os << '[';
          print_into(*x.left, os);
          os << ", ";
          print_into(*x.right, os);
          os << ']';
        } else {
          os << '@' << x.name;
        }
      },
      e.node);
}

}  // namespace

BraidExpr parse_braid(std::string_view text, int strands) {
  if (strands < 1) throw BraidRangeError("a braid needs at least one strand");
  return Parser(text, strands).parse_all();
}

std::string print_braid(const BraidExpr& expr) {
  std::ostringstream os;
  print_into(expr, os);
  return os.str();
}

BraidWord flatten(const BraidExpr& expr, int strands) {
  return std::visit(
      [&](const auto& x) -> BraidWord {
        using N = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<N, BraidExpr::Generator>) {
          return BraidWord(strands, {{x.index, 1}});
        } else if constexpr (std::is_same_v<N, BraidExpr::Concat>) {
          BraidWord out(strands);
          for (const auto& p : x.parts) out.append(flatten(p, strands));
          return out;
        } else if constexpr (std::is_same_v<N, BraidExpr::Power>) {
          return flatten(*x.base, strands).power(x.exponent);
        } else if constexpr (std::is_same_v<N, BraidExpr::Commutator>) {
          BraidWord a = flatten(*x.left, strands);
          BraidWord b = flatten(*x.right, strands);
          return a * b * a.inverse() * b.inverse();
        } else {
          const CatalogEntry& entry = catalog_entry(x.name);
          if (entry.strands > strands) {
            throw BraidRangeError("catalog braid '" + x.name + "' needs " +
                                  std::to_string(entry.strands) + " strands");
          }
          return flatten(parse_braid(entry.text, entry.strands), entry.strands)
              .on_strands(strands);
        }
      },
      expr.node);
}

BraidWord braid_word(std::string_view text, int strands) {
  return flatten(parse_braid(text, strands), strands);
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

std::string paren(const std::string& s) { return "(" + s + ")"; }

std::vector<CatalogEntry> build_catalog() {
  // Brown's pseudo-Anosov in the Torelli group of the genus 2 surface,
  // phi = eta xi^-1 with xi = gamma eta gamma^-1.
  const std::string eta = "s4^2 s5 s4^2 s5^2 s4^2 s5 s4^2";
  const std::string delta = "s4 s5 s3 s2 s1 s2^-1 s3^-1 s5^-1 s4^-1";
  const std::string gamma = paren(delta) + " s3 s2^-1 s1^-1 " + paren(delta) +
                            " s1 s2 s3^-1 " + paren(delta) + "^-1";
  const std::string xi = paren(gamma) + " " + paren(eta) + " " + paren(gamma) + "^-1";
  const std::string brown = paren(eta) + " " + paren(xi) + "^-1";

  // Bigelow's element of the kernel of the reduced Burau representation of B_5.
  const std::string psi1 = "s3^-1 s2 s1^2 s2 s4^3 s3 s2";
  const std::string psi2 = "s4^-1 s3 s2 s1^-2 s2 s1^2 s2^2 s1 s4^5";
  const std::string bigelow = "[" + paren(psi1) + "^-1 s4 " + paren(psi1) + ", " +
                              paren(psi2) + "^-1 s4 s3 s2 s1^2 s2 s3 s4 " +
                              paren(psi2) + "]";

  return {
      {"brown", 6, brown, "Brown's Torelli pseudo-Anosov lifted to B_6"},
      {"bigelow", 5, bigelow, "Bigelow's element of the Burau kernel in B_5"},
      {"lt3", 3, "s1 s2^-1", "small stretch factor braid in B_3"},
      {"lt4", 4, "s1 s2 s3^-1", "small stretch factor braid in B_4"},
      {"lt5", 5, "(s1 s2 s3)^2 s4 s3^-1", "small stretch factor braid in B_5"},
      {"lt6", 6, "(s2 s1)^2 (s1 s2 s3 s4 s5)^2", "small stretch factor braid in B_6"},
      {"lt7", 7, "s4^-2 (s1 s2 s3 s4 s5 s6)^2", "small stretch factor braid in B_7"},
      {"lt8", 8, "s2^-1 s1^-1 (s1 s2 s3 s4 s5 s6 s7)^5",
       "small stretch factor braid in B_8"},
  };
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& catalog_entry(std::string_view name) {
  for (const auto& e : catalog_entries()) {
    if (e.name == name) return e;
  }
  throw UnknownBraidError("unknown catalog braid '" + std::string(name) + "'");
}

BraidExpr catalog(std::string_view name) {
  const CatalogEntry& e = catalog_entry(name);
  return parse_braid(e.text, e.strands);
}

bool is_penner_type(const BraidWord& word) {
  const int n = word.strands();
  if (n % 2 != 0 || n < 2) return false;
  std::vector<bool> seen(n, false);
  int odd_sign = 0;
  int even_sign = 0;
  for (const auto& l : word.letters()) {
    seen[l.generator] = true;
    int s = l.exponent > 0 ? 1 : -1;
    int& slot = (l.generator % 2 == 1) ? odd_sign : even_sign;
    if (slot == 0) {
      slot = s;
    } else if (slot != s) {
      return false;
    }
  }
  for (int g = 1; g < n; ++g) {
    if (!seen[g]) return false;
  }
  return odd_sign != 0 && (even_sign == 0 || even_sign == -odd_sign);
}

}  // namespace tlhom
