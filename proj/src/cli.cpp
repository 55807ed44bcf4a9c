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

#include "tlhom/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tlhom/braid.hpp"
#include "tlhom/homology.hpp"
#include "tlhom/intertwine.hpp"
#include "tlhom/spectral.hpp"
#include "tlhom/tl_diagram.hpp"

namespace tlhom::cli {

using nlohmann::json;

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

namespace {

// Raised for flag combinations CLI11 cannot express.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

json number(double x) {
  if (std::isnan(x)) return nullptr;
  return std::stod(format_number(x));
}

json integer(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

json int_matrix(const Matrix<Integer>& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

json int_vector(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(integer(x));
  return out;
}

struct Options {
  int n = 0;
  int d = -1;
  std::string braid;
  int grid = 512;
  std::optional<double> at;
  std::string a_frac;
  std::string surface;
  std::string levels;
  int rank_n = 2;
  std::string format;
  std::string out_path;
  std::string domain;
  bool rescaled = false;
  int max_n = 9;
  std::string name;
};

BraidWord read_braid(const Options& o) { return braid_word(o.braid, o.n); }

void require_n(const Options& o) {
  if (o.n < 1) throw UsageError("--n must be a positive integer");
}

void require_nd(const Options& o) {
  require_n(o);
  if (o.d < 0 || o.d > o.n || (o.n - o.d) % 2 != 0)
    throw ParityError("need 0 <= d <= n with d = n mod 2, got n = " + std::to_string(o.n) +
                      ", d = " + std::to_string(o.d));
}

std::pair<long, long> parse_fraction(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) throw UsageError("--A-frac expects P/Q, got '" + text + "'");
  try {
    std::size_t used = 0;
    const long p = std::stol(text.substr(0, slash), &used);
    if (used != slash) throw UsageError("bad numerator in --A-frac");
    const std::string qs = text.substr(slash + 1);
    const long q = std::stol(qs, &used);
    if (used != qs.size()) throw UsageError("bad denominator in --A-frac");
    if (q == 0) throw UsageError("--A-frac denominator is zero");
    return {p, q};
  } catch (const std::logic_error&) {
    throw UsageError("--A-frac expects P/Q, got '" + text + "'");
  }
}

std::pair<int, int> parse_levels(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int k = std::stoi(text);
      return {k, k};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::logic_error&) {
    throw UsageError("--levels expects KMIN..KMAX, got '" + text + "'");
  }
}

SurfaceKind default_surface(const Options& o) {
  if (!o.surface.empty()) return surface_kind_from_string(o.surface);
  return o.n % 2 == 1 ? SurfaceKind::kOneBoundary : SurfaceKind::kClosed;
}

std::vector<SurfaceKind> verification_kinds(int n, int d, const std::string& surface) {
  if (!surface.empty()) return {surface_kind_from_string(surface)};
  if (n % 2 == 1) return {SurfaceKind::kOneBoundary};
  std::vector<SurfaceKind> kinds{SurfaceKind::kTwoBoundary};
  if (d == 0 && n >= 4) kinds.push_back(SurfaceKind::kClosed);
  return kinds;
}

int cmd_dim(const Options& o, std::ostream& out) {
  require_nd(o);
  out << basis_dimension(o.n, o.d) << "\n";
  return kOk;
}

int cmd_basis(const Options& o, std::ostream& out) {
  require_nd(o);
  const auto basis = enumerate_basis(o.n, o.d);
  if (o.format == "json") {
    json j{{"n", o.n}, {"d", o.d}, {"basis", json::array()}};
    for (const auto& diagram : basis) j["basis"].push_back(diagram.to_string());
    out << j.dump() << "\n";
  } else {
    for (const auto& diagram : basis) out << diagram.to_string() << "\n";
  }
  return kOk;
}

int cmd_matrix(const Options& o, std::ostream& out) {
  require_nd(o);
  if (o.at && !o.a_frac.empty()) throw UsageError("give at most one of --at and --A-frac");
  std::string domain = o.domain;
  if (domain.empty()) domain = (o.at || !o.a_frac.empty()) ? "complex" : "laurent";
  if (domain == "complex" && !o.at && o.a_frac.empty())
    throw UsageError("complex matrices need --at or --A-frac");
  if (domain != "complex" && (o.at || !o.a_frac.empty()))
    throw UsageError("--at/--A-frac only apply to the complex domain");
  if (domain == "gaussian" && !o.rescaled)
    throw UsageError("the gaussian domain needs --rescaled (raw generators have odd powers of A)");

  const BraidWord word = read_braid(o);
  const JonesRepresentation rep(o.n, o.d);
  const Normalization norm = o.rescaled ? Normalization::kRescaled : Normalization::kRaw;
  json j{{"n", o.n},
         {"d", o.d},
         {"braid", word.to_string()},
         {"domain", domain},
         {"normalization", o.rescaled ? "rescaled" : "raw"},
         {"basis", json::array()},
         {"entries", json::array()}};
  for (const auto& diagram : rep.basis().diagrams()) j["basis"].push_back(diagram.to_string());
  if (domain == "laurent") {
    const auto m = rep.word(word, norm);
    for (const auto& p : m.data()) j["entries"].push_back(to_json(p));
  } else if (domain == "complex") {
    ComplexF a;
    if (o.at) {
      a = a_from_x(*o.at);
      j["at"] = number(*o.at);
    } else {
      const auto [p, q] = parse_fraction(o.a_frac);
      a = a_from_fraction(p, q);
      j["A_frac"] = o.a_frac;
    }
    const auto m = rep.word_at(word, a, norm);
    for (const auto& z : m.data())
      j["entries"].push_back(json::array({number(z.real()), number(z.imag())}));
  } else if (domain == "gaussian") {
    const auto m = rep.word_gaussian(word);
    for (const auto& z : m.data())
      j["entries"].push_back(json::array({z.re().get_str(), z.im().get_str()}));
  } else {
    throw UsageError("unknown domain '" + domain + "'");
  }
  out << j.dump() << "\n";
  return kOk;
}

int cmd_homology(const Options& o, std::ostream& out) {
  require_n(o);
  const SurfaceKind kind = default_surface(o);
  const HomologySetup setup = build_setup(kind, o.n);
  const BraidWord word = read_braid(o);
  const Matrix<Integer> m = psi_matrix(word, setup);
  json chain = json::array();
  for (const auto& c : setup.chain) chain.push_back(int_vector(c));
  json j{{"surface", to_string(kind)},
         {"n", o.n},
         {"dim", setup.dim},
         {"genus", setup.genus()},
         {"braid", word.to_string()},
         {"matrix", int_matrix(m)},
         {"pairing", int_matrix(setup.pairing)},
         {"chain", chain},
         {"relation", setup.relation ? int_vector(*setup.relation) : json(nullptr)},
         {"symplectic", is_symplectic(m, setup)}};
  out << j.dump() << "\n";
  return kOk;
}

int cmd_scan(const Options& o, std::ostream& out) {
  require_nd(o);
  if (o.grid < 1) throw UsageError("--grid must be positive");
  const ScanResult scan = sr_scan(read_braid(o), o.d, o.grid);
  if (o.format == "json") {
    json j{{"n", scan.n}, {"d", scan.d}, {"braid", scan.braid}, {"grid_size", o.grid},
           {"x", json::array()}, {"sr", json::array()}};
    for (std::size_t k = 0; k < scan.grid.size(); ++k) {
      j["x"].push_back(number(scan.grid[k]));
      j["sr"].push_back(number(scan.values[k]));
    }
    out << j.dump() << "\n";
  } else {
    out << "x,sr\n";
    for (std::size_t k = 0; k < scan.grid.size(); ++k)
      out << format_number(scan.grid[k]) << "," << format_number(scan.values[k]) << "\n";
  }
  int failures = 0;
  for (const auto& e : scan.errors)
    if (e) ++failures;
  return failures == 0 ? kOk : kComputationFailure;
}

int cmd_order_report(const Options& o, std::ostream& out) {
  require_nd(o);
  if (o.levels.empty()) throw UsageError("order-report needs --levels KMIN..KMAX");
  const auto [k_min, k_max] = parse_levels(o.levels);
  if (k_min < 1 || k_max < k_min) throw UsageError("bad --levels range '" + o.levels + "'");
  for (const auto& c : order_certificates(read_braid(o), o.d, o.rank_n, k_min, k_max)) {
    json j{{"k", c.k},
           {"N", c.rank_n},
           {"d", c.d},
           {"A", "2*pi*" + std::to_string(c.l) + "/(4*(k+N))"},
           {"sr", number(c.sr)},
           {"verdict", to_string(c.verdict)}};
    out << j.dump() << "\n";
  }
  return kOk;
}

int cmd_stretch(const Options& o, std::ostream& out) {
  require_n(o);
  out << format_number(stretch_estimate(read_braid(o), default_surface(o))) << "\n";
  return kOk;
}

json equivariance_json(const EquivarianceReport& r) {
  json violations = json::array();
  for (std::size_t k = 0; k < std::min<std::size_t>(r.violations.size(), 5); ++k)
    violations.push_back(r.violations[k]);
  return {{"check", "equivariance"}, {"n", r.n}, {"d", r.d}, {"surface", to_string(r.kind)},
          {"checks", r.checks}, {"violation_count", r.violations.size()},
          {"violations", violations}, {"ok", r.ok()}};
}

int cmd_verify_equivariance(const Options& o, std::ostream& out) {
  require_nd(o);
  bool ok = true;
  for (SurfaceKind kind : verification_kinds(o.n, o.d, o.surface)) {
    const auto report = verify_equivariance(o.n, o.d, kind);
    ok = ok && report.ok();
    out << equivariance_json(report).dump() << "\n";
  }
  return ok ? kOk : kVerificationFailure;
}

int cmd_verify_theorems(const Options& o, std::ostream& out) {
  if (o.max_n < 2) throw UsageError("--max-n must be at least 2");
  bool ok = true;
  for (int n = 2; n <= o.max_n; ++n) {
    for (int d = n % 2; d <= n; d += 2) {
      for (SurfaceKind kind : verification_kinds(n, d, "")) {
        const auto eq = verify_equivariance(n, d, kind);
        ok = ok && eq.ok();
        out << equivariance_json(eq).dump() << "\n";
        const auto rk = verify_rank(n, d, kind);
        ok = ok && rk.ok;
        json j{{"check", "rank"}, {"n", n}, {"d", d}, {"surface", to_string(kind)},
               {"dim_v", rk.dim_v}, {"target_dim", rk.target_dim}, {"rank", rk.rank},
               {"ok", rk.ok}};
        out << j.dump() << "\n";
        if (kind == SurfaceKind::kTwoBoundary) {
          const auto b = block_structure(n, d);
          // The diagonal blocks restrict phi to smaller injective cases.
          const bool block_ok = b.off_block_zero && b.rank_first == b.first_kind &&
                                b.rank_second == b.second_kind;
          ok = ok && block_ok;
          json bj{{"check", "block_triangular"}, {"n", n}, {"d", d},
                  {"first_kind", b.first_kind}, {"second_kind", b.second_kind},
                  {"off_block_zero", b.off_block_zero}, {"rank_first", b.rank_first},
                  {"rank_second", b.rank_second}, {"ok", block_ok}};
          out << bj.dump() << "\n";
        }
      }
    }
  }
  return ok ? kOk : kVerificationFailure;
}

int cmd_catalog(const Options& o, std::ostream& out) {
  if (o.name.empty()) {
    if (o.format == "json") {
      json j = json::array();
      for (const auto& e : catalog_entries())
        j.push_back({{"name", e.name}, {"strands", e.strands}, {"expression", e.text}});
      out << j.dump() << "\n";
    } else {
      for (const auto& e : catalog_entries())
        out << e.name << "\t" << e.strands << "\t" << e.text << "\n";
    }
    return kOk;
  }
  const CatalogEntry& e = catalog_entry(o.name);
  const BraidWord word = flatten(catalog(o.name), e.strands);
  if (o.format == "json") {
    json j{{"name", e.name},           {"strands", e.strands},
           {"expression", e.text},     {"word", word.to_string()},
           {"length", word.length()},  {"exponent_sum", word.exponent_sum()},
           {"penner_type", is_penner_type(word)}};
    out << j.dump() << "\n";
  } else {
    out << "name: " << e.name << "\n"
        << "strands: " << e.strands << "\n"
        << "expression: " << e.text << "\n"
        << "word: " << word.to_string() << "\n"
        << "length: " << word.length() << "\n"
        << "exponent_sum: " << word.exponent_sum() << "\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Jones representations, surface homology and spectral scans", "tlhom"};
  app.require_subcommand(1);
  Options o;

  auto add_nd = [&o](CLI::App* sub) {
    sub->add_option("--n", o.n, "number of strands / top points")->required();
    sub->add_option("--d", o.d, "number of bottom points")->required();
  };
  auto add_braid = [&o](CLI::App* sub) {
    sub->add_option("--braid", o.braid, "braid expression, e.g. \"s1 s2^-1\" or \"@brown\"");
  };
  auto add_out = [&o](CLI::App* sub) {
    sub->add_option("--out", o.out_path, "write results to PATH instead of stdout");
  };
  auto add_format = [&o](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember(allowed));
  };

  auto* dim = app.add_subcommand("dim", "dimension of V^{n,d}");
  add_nd(dim);
  add_out(dim);

  auto* basis = app.add_subcommand("basis", "diagram basis of V^{n,d} in canonical order");
  add_nd(basis);
  add_format(basis, {"text", "json"});
  add_out(basis);

  auto* matrix = app.add_subcommand("matrix", "matrix of a braid on V^{n,d}");
  add_nd(matrix);
  add_braid(matrix);
  matrix->add_option("--at", o.at, "evaluate at A = exp(-pi i x/4)");
  matrix->add_option("--A-frac", o.a_frac, "evaluate at A = exp(2 pi i P/Q)");
  matrix->add_option("--domain", o.domain, "laurent | complex | gaussian")
      ->check(CLI::IsMember({"laurent", "complex", "gaussian"}));
  matrix->add_flag("--rescaled", o.rescaled, "multiply each letter sigma_i^{+-1} by A^{-+1}");
  add_format(matrix, {"json"});
  add_out(matrix);

  auto* homology = app.add_subcommand("homology", "homology action of a braid");
  homology->add_option("--n", o.n, "number of strands")->required();
  homology->add_option("--surface", o.surface, "closed | one-boundary | two-boundary");
  add_braid(homology);
  add_format(homology, {"json"});
  add_out(homology);

  auto* scan = app.add_subcommand("scan", "spectral radius along A = exp(-pi i x/4)");
  add_nd(scan);
  add_braid(scan);
  scan->add_option("--grid", o.grid, "number of grid points on [0, 1]");
  add_format(scan, {"csv", "json", "text"});
  add_out(scan);

  auto* order = app.add_subcommand("order-report", "infinite-order certificates per level");
  add_nd(order);
  add_braid(order);
  order->add_option("--levels", o.levels, "KMIN..KMAX")->required();
  order->add_option("--rank-N", o.rank_n, "rank N of the quantum group");
  add_format(order, {"json"});
  add_out(order);

  auto* stretch = app.add_subcommand("stretch", "spectral radius of the homology action");
  stretch->add_option("--n", o.n, "number of strands")->required();
  add_braid(stretch);
  stretch->add_option("--surface", o.surface, "closed | one-boundary | two-boundary");
  add_format(stretch, {"text"});
  add_out(stretch);

  auto* verify = app.add_subcommand("verify", "exact intertwiner checks");
  verify->require_subcommand(1);
  auto* equiv = verify->add_subcommand("equivariance", "phi(D + i T_i D) = t_{c_i} phi(D)");
  add_nd(equiv);
  equiv->add_option("--surface", o.surface, "closed | one-boundary | two-boundary");
  add_format(equiv, {"json"});
  add_out(equiv);
  auto* theorems = verify->add_subcommand("theorems", "equivariance, ranks, block structure");
  theorems->add_option("--max-n", o.max_n, "largest n to check");
  add_format(theorems, {"json"});
  add_out(theorems);

  auto* cat = app.add_subcommand("catalog", "named braids");
  cat->add_option("name", o.name, "entry to expand");
  add_format(cat, {"text", "json"});
  add_out(cat);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  std::ostringstream buffer;
  int code = kOk;
  try {
    if (dim->parsed()) code = cmd_dim(o, buffer);
    else if (basis->parsed()) code = cmd_basis(o, buffer);
    else if (matrix->parsed()) code = cmd_matrix(o, buffer);
    else if (homology->parsed()) code = cmd_homology(o, buffer);
    else if (scan->parsed()) code = cmd_scan(o, buffer);
    else if (order->parsed()) code = cmd_order_report(o, buffer);
    else if (stretch->parsed()) code = cmd_stretch(o, buffer);
    else if (equiv->parsed()) code = cmd_verify_equivariance(o, buffer);
    else if (theorems->parsed()) code = cmd_verify_theorems(o, buffer);
    else if (cat->parsed()) code = cmd_catalog(o, buffer);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ParityError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const BraidSyntaxError& e) {
    err << "usage error: braid syntax: " << e.what() << "\n";
    return kUsageError;
  } catch (const BraidRangeError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const UnknownBraidError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const EigenError& e) {
    err << "computation failed: " << e.what() << "\n";
    return kComputationFailure;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "computation failed: " << e.what() << "\n";
    return kComputationFailure;
  }

  if (!o.out_path.empty()) {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) {
      err << "cannot open " << o.out_path << " for writing\n";
      return kComputationFailure;
    }
    file << buffer.str();
  } else {
    out << buffer.str();
  }
  return code;
}

}  // namespace tlhom::cli
