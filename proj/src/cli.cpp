#include "lucaskit/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

#include "lucaskit/analysis.hpp"
#include "lucaskit/coxcat.hpp"
#include "lucaskit/errors.hpp"
#include "lucaskit/involution.hpp"
#include "lucaskit/json_io.hpp"
#include "lucaskit/lucas.hpp"
#include "lucaskit/render.hpp"
#include "lucaskit/tiling.hpp"

namespace lucaskit {

namespace {

// Bad input detected after parsing; reported like a parse error.
class UsageError : public Error {
 public:
  using Error::Error;
};

std::vector<long> parse_ints(const std::string& text, char sep = ',') {
  std::vector<long> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw UsageError("expected an integer, got '" + item + "'");
    }
  }
  return out;
}

unsigned to_unsigned(long v, const char* what) {
  if (v < 0) throw UsageError(std::string(what) + " must be nonnegative");
  return static_cast<unsigned>(v);
}

std::vector<long> args_exactly(const std::vector<long>& a, std::size_t n, const std::string& name) {
  if (a.size() != n) throw UsageError(name + " takes " + std::to_string(n) + " argument(s)");
  return a;
}

// "delta:n", "ddelta:n:d", "skew:5,3,1/2" or "rows:3,2".
Shape parse_shape(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "delta") return Shape::staircase(static_cast<int>(args_exactly(parse_ints(rest), 1, "delta")[0]));
  if (kind == "ddelta") {
    const auto a = args_exactly(parse_ints(rest, ':'), 2, "ddelta");
    return Shape::d_staircase(static_cast<int>(a[0]), static_cast<int>(a[1]));
  }
  if (kind == "skew" || kind == "rows") {
    const auto slash = rest.find('/');
    std::vector<int> outer;
    std::vector<int> inner;
    for (long v : parse_ints(rest.substr(0, slash))) outer.push_back(static_cast<int>(v));
    if (slash != std::string::npos) {
      for (long v : parse_ints(rest.substr(slash + 1))) inner.push_back(static_cast<int>(v));
    }
    return Shape(outer, inner);
  }
  throw UsageError("unknown shape '" + spec + "' (use delta:n, ddelta:n:d or skew:outer/inner)");
}

std::string read_input(const std::string& input) {
  if (!input.empty() && input.front() == '@') {
    std::ifstream f(input.substr(1));
    if (!f) throw UsageError("cannot read " + input.substr(1));
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }
  return input;
}

std::string tiling_text(const Tiling& t) {
  std::string s;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (i) s += " / ";
    for (std::size_t j = 0; j < t.rows[i].size(); ++j) {
      if (j) s += ' ';
      s += t.rows[i][j] == Tile::Monomino ? 'M' : 'D';
    }
  }
  return s;
}

struct Check {
  std::string name;
  std::uint64_t cases = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
};

void expect(Check& c, bool ok, const std::string& what) {
  ++c.cases;
  if (!ok) c.failures.push_back(what);
}

std::string params(std::initializer_list<std::pair<const char*, long>> kv) {
  std::string s;
  for (const auto& [k, v] : kv) s += (s.empty() ? "" : ",") + std::string(k) + "=" + std::to_string(v);
  return s;
}

class Cli {
 public:
  Cli(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args);

 private:
  void emit_poly(const Poly2& p);
  void emit_check(const Check& c);
  void emit(const std::string& text);
  void require_format(std::initializer_list<const char*> allowed);

  void setup_compute(CLI::App& app);
  void setup_tilings(CLI::App& app);
  void setup_involution(CLI::App& app);
  void setup_verify(CLI::App& app);
  void setup_analyze(CLI::App& app);

  Check verify_named(const std::string& name);
  void run_findings(const std::vector<Finding>& findings, const std::string& op);

  std::ostream& out_;
  std::ostream& err_;
  std::string format_ = "pretty";
  std::string out_path_;
  std::ostringstream buffer_;
  int status_ = 0;
  std::function<void()> action_;

  // Option storage shared by subcommands.
  long n_ = 0, k_ = 0, d_ = 1, r_ = -1, m_ = 0, a_ = 0, b_ = 0;
  long fuss_k_ = 1;
  long max_n_ = -1, max_k_ = -1, max_ = -1, max_md_ = -1;
  long sweep_ = 0;
  std::string type_, shape_, variant_ = "binomial", input_, example_, expr_, at_;
  bool trace_ = false, partial_ = false;
};

void Cli::emit(const std::string& text) { buffer_ << text; }

void Cli::require_format(std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (format_ == f) return;
  }
  std::string list;
  for (const char* f : allowed) list += (list.empty() ? "" : ", ") + std::string(f);
  throw UsageError("format '" + format_ + "' is not available here (choose " + list + ")");
}

void Cli::emit_poly(const Poly2& p) {
  require_format({"pretty", "json", "csv"});
  if (!at_.empty()) {
    const auto v = args_exactly(parse_ints(at_), 2, "--at");
    const mpz_class value = poly_eval(p, v[0], v[1]);
    if (format_ == "json") {
      emit(Json{{"s", v[0]}, {"t", v[1]}, {"value", value.get_str()}}.dump() + "\n");
    } else {
      emit(value.get_str() + "\n");
    }
    return;
  }
  if (format_ == "json") {
    emit(to_json(p).dump() + "\n");
  } else if (format_ == "csv") {
    emit("s,t,c\n");
    for (const auto& term : p.terms()) {
      emit(std::to_string(term.mono.s) + "," + std::to_string(term.mono.t) + "," + term.coeff.get_str() + "\n");
    }
  } else {
    emit(p.to_string() + "\n");
  }
}

void Cli::emit_check(const Check& c) {
  require_format({"pretty", "json"});
  const bool ok = c.failures.empty();
  if (!ok) status_ = std::max(status_, 2);
  if (format_ == "json") {
    emit(Json{{"check", c.name}, {"status", ok ? "pass" : "fail"}, {"cases", c.cases}, {"failures", c.failures},
              {"notes", c.notes}}
             .dump() +
         "\n");
    return;
  }
  emit(c.name + ": " + (ok ? "pass" : "FAIL") + " (" + std::to_string(c.cases) + " cases)\n");
  for (const auto& n : c.notes) emit("  note: " + n + "\n");
  for (const auto& f : c.failures) emit("  failed: " + f + "\n");
}

void Cli::run_findings(const std::vector<Finding>& findings, const std::string& op) {
  require_format({"pretty", "json"});
  std::size_t flagged = 0;
  for (const auto& f : findings) {
    if (f.status != "pass") {
      ++flagged;
      status_ = std::max(status_, 2);
    }
    if (format_ == "json") {
      emit(f.to_json_line() + "\n");
    } else if (f.status != "pass") {
      emit(f.status + " " + f.params + " " + f.detail + "\n");
    }
  }
  if (format_ == "pretty") {
    emit(op + " sweep: " + std::to_string(findings.size()) + " cases, " + std::to_string(flagged) + " flagged\n");
  }
}

void Cli::setup_compute(CLI::App& app) {
  auto poly_cmd = [&](const char* name, const char* help, std::function<Poly2()> f) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--at", at_, "evaluate at s,t instead of printing the polynomial");
    sub->callback([this, f] { action_ = [this, f] { emit_poly(f()); }; });
    return sub;
  };
  auto* lucas_cmd = poly_cmd("lucas", "Lucas polynomial {n}", [this] { return lucas(to_unsigned(n_, "n")); });
  lucas_cmd->add_option("--n", n_)->required();
  auto* fact = poly_cmd("lucastorial", "{n}! (or {n:d}! with --d)",
                        [this] { return d_lucastorial(to_unsigned(n_, "n"), to_unsigned(d_, "d")); });
  fact->add_option("--n", n_)->required();
  fact->add_option("--d", d_)->check(CLI::PositiveNumber);
  auto* nom = poly_cmd("lucasnomial", "{n brace k}", [this] { return lucasnomial(n_, k_); });
  nom->add_option("--n", n_)->required()->check(CLI::NonNegativeNumber);
  nom->add_option("--k", k_)->required();
  auto* dnom = poly_cmd("dlucasnomial", "{n:d brace k:d}", [this] {
    if (k_ < 0 || k_ > n_) throw UsageError("dlucasnomial needs 0 <= k <= n");
    return d_lucasnomial(n_, k_, to_unsigned(d_, "d"));
  });
  dnom->add_option("--n", n_)->required()->check(CLI::NonNegativeNumber);
  dnom->add_option("--k", k_)->required();
  dnom->add_option("--d", d_)->required()->check(CLI::PositiveNumber);
  auto* cat = poly_cmd("catalan", "Lucas-Catalan C_n", [this] { return lucas_catalan(to_unsigned(n_, "n")); });
  cat->add_option("--n", n_)->required();
  auto* fuss = poly_cmd("fuss", "Lucas-Fuss-Catalan C_{n,k}",
                        [this] { return fuss_catalan(to_unsigned(n_, "n"), to_unsigned(k_, "k")); });
  fuss->add_option("--n", n_)->required();
  fuss->add_option("--k", k_)->required()->check(CLI::PositiveNumber);
  auto* cox = poly_cmd("coxeter", "Coxeter-Catalan (or Coxeter-Fuss-Catalan with --fuss-k)", [this] {
    const long param = m_ > 0 ? m_ : n_;
    const CoxeterType w = CoxeterType::parse(type_, to_unsigned(param, "n"));
    return coxeter_fuss_catalan(w, to_unsigned(fuss_k_, "fuss-k"));
  });
  cox->add_option("--type", type_, "A, B, D, I2, H3, H4, F4, E6, E7 or E8")->required();
  cox->add_option("--n", n_, "rank for A, B, D");
  cox->add_option("--m", m_, "m for I2(m)");
  cox->add_option("--fuss-k", fuss_k_)->check(CLI::PositiveNumber);

  auto* rat = app.add_subcommand("rational", "rational Lucas-Catalan Cat(a,b), or a findings sweep");
  rat->add_option("--a", a_);
  rat->add_option("--b", b_);
  rat->add_option("--sweep", sweep_, "sweep coprime a < b <= SWEEP");
  rat->add_option("--at", at_);
  rat->callback([this] {
    action_ = [this] {
      if (sweep_ > 0) return run_findings(rational_catalan_sweep(to_unsigned(sweep_, "sweep")), "rational");
      if (a_ <= 0 || b_ <= 0) throw UsageError("rational needs positive --a and --b");
      emit_poly(rational_catalan(to_unsigned(a_, "a"), to_unsigned(b_, "b")));
    };
  });
  auto* nar = app.add_subcommand("narayana", "Lucas-Narayana N_{n,k}, or a findings sweep");
  nar->add_option("--n", n_);
  nar->add_option("--k", k_);
  nar->add_option("--sweep", sweep_, "sweep 1 <= k <= n <= SWEEP");
  nar->add_option("--at", at_);
  nar->callback([this] {
    action_ = [this] {
      if (sweep_ > 0) return run_findings(narayana_sweep(to_unsigned(sweep_, "sweep")), "narayana");
      if (!(1 <= k_ && k_ <= n_)) throw UsageError("narayana needs 1 <= k <= n");
      Poly2 p;
      try {
        p = narayana(to_unsigned(n_, "n"), to_unsigned(k_, "k"));
      } catch (const NotDivisible& e) {
        const Finding f{"narayana", R"({"n":)" + std::to_string(n_) + R"(,"k":)" + std::to_string(k_) + "}", "finding",
                        std::string("not a polynomial: ") + e.what()};
        return run_findings({f}, "narayana");
      }
      emit_poly(p);
      if (!p.all_coeffs_nonnegative()) {
        status_ = 2;
        err_ << "finding: negative coefficient\n";
      }
    };
  });
}

PathVariant variant_from_flags(const std::string& variant, const std::string& shape_spec, long n, long k, long d) {
  const int in = static_cast<int>(n);
  const int ik = static_cast<int>(k);
  if (!shape_spec.empty()) {
    const auto colon = shape_spec.find(':');
    const std::string kind = shape_spec.substr(0, colon);
    const auto rest = colon == std::string::npos ? std::string() : shape_spec.substr(colon + 1);
    if (kind == "delta") {
      const int size = static_cast<int>(args_exactly(parse_ints(rest), 1, "delta")[0]);
      if (variant == "catalan") {
        if (size % 2 != 0) throw UsageError("the Catalan variant needs delta:2n");
        return PathVariant::catalan(size / 2);
      }
      if (variant == "fuss") {
        if (ik < 1 || size % (ik + 1) != 0) throw UsageError("the Fuss variant needs delta:(k+1)n and --k");
        return PathVariant::fuss_catalan(size / (ik + 1), ik);
      }
      return PathVariant::binomial(size, ik);
    }
    if (kind == "ddelta") {
      const auto a = args_exactly(parse_ints(rest, ':'), 2, "ddelta");
      return PathVariant::d_divisible(static_cast<int>(a[0]), ik, static_cast<int>(a[1]));
    }
    throw UsageError("partitions are defined on delta:n and ddelta:n:d shapes");
  }
  if (variant == "binomial") return PathVariant::binomial(in, ik);
  if (variant == "catalan") return PathVariant::catalan(in);
  if (variant == "fuss") return PathVariant::fuss_catalan(in, ik);
  if (variant == "ddivisible") return PathVariant::d_divisible(in, ik, static_cast<int>(d));
  throw UsageError("unknown variant '" + variant + "'");
}

// Sample tiling of delta_6 used by --example path.
Tiling example_tiling() {
  constexpr Tile M = Tile::Monomino;
  constexpr Tile D = Tile::Domino;
  return Tiling{{{M, M, D, M}, {D, M, M}, {M, D}, {M, M}, {M}}};
}

void Cli::setup_tilings(CLI::App& app) {
  auto* til = app.add_subcommand("tilings", "enumerate, partition or render tilings");
  til->require_subcommand(1);

  auto* en = til->add_subcommand("enumerate", "list all tilings of a shape and its weight");
  en->add_option("--shape", shape_, "delta:n, ddelta:n:d or skew:outer/inner")->required();
  en->callback([this] {
    action_ = [this] {
      require_format({"pretty", "json"});
      const Shape shape = parse_shape(shape_);
      const auto tilings = enumerate_tilings(shape);
      const Poly2 w = shape_weight(shape);
      if (format_ == "json") {
        Json list = Json::array();
        for (const auto& t : tilings) list.push_back(to_json(t));
        emit(Json{{"shape", to_json(shape)}, {"count", tilings.size()}, {"weight", to_json(w)}, {"tilings", list}}
                 .dump() +
             "\n");
        return;
      }
      for (const auto& t : tilings) emit(tiling_text(t) + "\n");
      emit("count " + std::to_string(tilings.size()) + "\nweight " + w.to_string() + "\n");
    };
  });

  auto* part = til->add_subcommand("partition", "group tilings into blocks and check the block weights");
  part->add_option("--shape", shape_, "delta:n or ddelta:n:d (alternative to --n/--d)");
  part->add_option("--variant", variant_, "binomial, catalan, fuss or ddivisible")
      ->check(CLI::IsMember({"binomial", "catalan", "fuss", "ddivisible"}));
  part->add_option("--n", n_);
  part->add_option("--k", k_);
  part->add_option("--d", d_);
  part->callback([this] {
    action_ = [this] {
      require_format({"pretty", "json"});
      const PathVariant v = variant_from_flags(variant_, shape_, n_, k_, d_);
      const BlockReport rep = verify_block_partition(v);
      if (!rep.ok()) status_ = 2;
      if (format_ == "json") {
        Json partials = Json::array();
        for (const auto& p : rep.partials) partials.push_back(to_json(p));
        emit(Json{{"variant", to_json(v)},
                  {"status", rep.ok() ? "pass" : "fail"},
                  {"tilings", rep.tiling_count},
                  {"blocks", rep.partials.size()},
                  {"sum", to_json(rep.sum)},
                  {"expected", to_json(rep.expected)},
                  {"divisor", to_json(v.divisor())},
                  {"violations", rep.violations},
                  {"partials", partials}}
                 .dump() +
             "\n");
        return;
      }
      emit(v.name() + " on " + v.shape().to_string() + "\n");
      emit("tilings " + std::to_string(rep.tiling_count) + ", blocks " + std::to_string(rep.partials.size()) + "\n");
      emit("sum of partial weights: " + rep.sum.to_string() + "\n");
      emit("expected:               " + rep.expected.to_string() + "\n");
      emit(std::string("status: ") + (rep.ok() ? "pass" : "FAIL") + "\n");
      for (const auto& viol : rep.violations) emit("  " + viol + "\n");
    };
  });

  auto* ren = til->add_subcommand("render", "draw a tiling or its partial tiling with the lattice path");
  ren->add_option("--shape", shape_, "delta:n or ddelta:n:d");
  ren->add_option("--input", input_, "tiling JSON ({\"rows\":[[\"M\",\"D\"],...]}) or @file");
  ren->add_option("--example", example_, "built-in instance: path")->check(CLI::IsMember({"path"}));
  ren->add_option("--variant", variant_)->check(CLI::IsMember({"binomial", "catalan", "fuss", "ddivisible"}));
  ren->add_option("--k", k_, "path parameter (start column for binomial)");
  ren->add_flag("--partial", partial_, "draw the partial tiling of the block instead of the tiling");
  ren->callback([this] {
    action_ = [this] {
      if (format_ == "pretty") format_ = "ascii";
      require_format({"ascii", "svg", "json"});
      Tiling t;
      std::string shape_spec = shape_;
      if (example_ == "path") {
        t = example_tiling();
        if (shape_spec.empty()) shape_spec = "delta:6";
        if (k_ == 0) k_ = 3;
      } else if (!input_.empty()) {
        t = tiling_from_json(parse_json(read_input(input_)));
      } else {
        throw UsageError("render needs --input or --example");
      }
      if (shape_spec.empty()) throw UsageError("render needs --shape");
      const PathVariant v = variant_from_flags(variant_, shape_spec, n_, k_, d_);
      const PartialTiling p = partial_from_tiling(t, v);
      if (format_ == "json") {
        emit(to_json(p).dump() + "\n");
      } else if (partial_) {
        emit(format_ == "svg" ? render_svg(p) : render_ascii(p));
      } else {
        emit(format_ == "svg" ? render_svg(v.shape(), t, p.path) : render_ascii(v.shape(), t, p.path));
      }
    };
  });
}

void Cli::setup_involution(CLI::App& app) {
  auto* inv = app.add_subcommand("involution", "apply or verify the symmetry involution");
  inv->require_subcommand(1);
  auto* apply = inv->add_subcommand("apply", "apply the involution to an extended tiling");
  apply->add_option("--input", input_, "extended tiling JSON {\"B\":...,\"strips\":[...]} or @file");
  apply->add_option("--example", example_, "built-in instance: 752")->check(CLI::IsMember({"752"}));
  apply->add_flag("--trace", trace_, "report the case used at each recursion level");
  apply->callback([this] {
    action_ = [this] {
      require_format({"pretty", "json", "ascii"});
      ExtendedTiling e;
      if (example_ == "752") {
        e = example_752();
      } else if (!input_.empty()) {
        e = extended_from_json(parse_json(read_input(input_)));
      } else {
        throw UsageError("involution apply needs --input or --example");
      }
      std::string trace;
      const ExtendedTiling img = iota(e, &trace);
      const ExtendedType ty = img.type();
      if (format_ == "json") {
        Json j = to_json(img);
        if (trace_) j["trace"] = trace;
        emit(j.dump() + "\n");
        return;
      }
      if (trace_) {
        for (std::size_t i = 0; i < trace.size(); ++i) {
          emit("level " + std::to_string(i + 1) + ": case (" + trace[i] + ")\n");
        }
      }
      emit("type (" + std::to_string(ty.n) + "," + std::to_string(ty.k) + "," + std::to_string(ty.r) + ")\n");
      if (format_ == "ascii") {
        emit(render_ascii(img.b));
      } else {
        emit(to_json(img).dump() + "\n");
      }
      for (std::size_t i = 0; i < img.strips.size(); ++i) {
        emit("T" + std::to_string(i + 1) + ": " + tiling_text(Tiling{{img.strips[i]}}) + "\n");
      }
    };
  });
  auto* ver = inv->add_subcommand("verify", "exhaustive check for one type (n,k,r)");
  ver->add_option("--n", n_)->required();
  ver->add_option("--k", k_)->required();
  ver->add_option("--r", r_)->required();
  ver->callback([this] { action_ = [this] { emit_check(verify_named("involution")); }; });
}

void Cli::setup_verify(CLI::App& app) {
  auto* ver = app.add_subcommand("verify", "run an identity or theorem check over a parameter range");
  static const std::vector<std::string> names = {"recursion", "symmetry",     "catalan-id", "fuss-id",
                                                 "catD",      "genCatD",      "hoggatt-long", "gcd-lemma",
                                                 "cheby",     "involution",   "blocks"};
  std::string* which = &expr_;
  ver->add_option("check", *which, "which check")->required()->check(CLI::IsMember(names));
  ver->add_option("--max-n", max_n_, "upper bound on n");
  ver->add_option("--max-k", max_k_, "upper bound on k (fuss-id)");
  ver->add_option("--max", max_, "upper bound on m and n (hoggatt-long, gcd-lemma)");
  ver->add_option("--max-md", max_md_, "upper bound on md (genCatD)");
  ver->add_option("--n", n_, "single instance (involution)");
  ver->add_option("--k", k_);
  ver->add_option("--r", r_);
  ver->callback([this] { action_ = [this] { emit_check(verify_named(expr_)); }; });
}

Check Cli::verify_named(const std::string& name) {
  Check c{name, 0, {}, {}};
  auto bound = [](long v, long dflt) { return v >= 0 ? v : dflt; };
  if (name == "recursion") {
    const long top = bound(max_n_, 12);
    for (long n = 2; n <= top; ++n) {
      for (long k = 1; k < n; ++k) expect(c, verify_lucasnomial_recursion(n, k), params({{"n", n}, {"k", k}}));
    }
  } else if (name == "symmetry") {
    const long top = bound(max_n_, 10);
    for (long n = 0; n <= top; ++n) {
      for (long k = 0; k <= n; ++k) {
        for (long r = 0; r <= k; ++r) expect(c, verify_symmetry_identity(n, k, r), params({{"n", n}, {"k", k}, {"r", r}}));
      }
    }
  } else if (name == "catalan-id") {
    for (long n = 2; n <= bound(max_n_, 12); ++n) {
      expect(c, verify_catalan_identity(static_cast<unsigned>(n)), params({{"n", n}}));
    }
  } else if (name == "fuss-id") {
    for (long n = 2; n <= bound(max_n_, 6); ++n) {
      for (long k = 1; k <= bound(max_k_, 3); ++k) {
        expect(c, verify_fuss_identity(static_cast<unsigned>(n), static_cast<unsigned>(k)), params({{"n", n}, {"k", k}}));
      }
    }
  } else if (name == "catD") {
    for (long n = 3; n <= bound(max_n_, 6); ++n) expect(c, verify_catD(static_cast<unsigned>(n)), params({{"n", n}}));
  } else if (name == "genCatD") {
    const long md_top = bound(max_md_, 6);
    const long n_top = bound(max_n_, 4);
    std::uint64_t vacuous = 0;
    for (long d = 1; d <= md_top; ++d) {
      for (long m = 1; m * d <= md_top; ++m) {
        for (long k = 1; k < m; ++k) {
          for (long l = 1; l < k * d; ++l) {
            for (long n = 1; n <= n_top; ++n) {
              const auto [ul, uk, um, ud, un] = std::array<unsigned, 5>{
                  static_cast<unsigned>(l), static_cast<unsigned>(k), static_cast<unsigned>(m),
                  static_cast<unsigned>(d), static_cast<unsigned>(n)};
              if (gen_catD_quotient(ul, uk, um, ud, un).is_zero()) ++vacuous;
              expect(c, verify_genCatD(ul, uk, um, ud, un),
                     params({{"l", l}, {"k", k}, {"m", m}, {"d", d}, {"n", n}}));
            }
          }
        }
      }
    }
    c.notes.push_back(std::to_string(vacuous) + " cases vacuous (kn-1 > m(n-1))");
  } else if (name == "hoggatt-long") {
    const long top = bound(max_, 20);
    for (long m = 1; m <= top; ++m) {
      for (long n = 1; n <= top; ++n) {
        const auto q = lucas_divides(static_cast<unsigned>(m), static_cast<unsigned>(n));
        const bool divides = n % m == 0;
        expect(c, q.has_value() == divides && (!q || q->all_coeffs_nonnegative()), params({{"m", m}, {"n", n}}));
      }
    }
  } else if (name == "gcd-lemma") {
    const long top = bound(max_, 12);
    for (long m = 1; m <= top; ++m) {
      for (long n = 1; n <= top; ++n) {
        expect(c, verify_gcd_lemma(static_cast<unsigned>(m), static_cast<unsigned>(n)), params({{"m", m}, {"n", n}}));
      }
    }
  } else if (name == "cheby") {
    for (long n = 1; n <= bound(max_n_, 30); ++n) {
      expect(c, verify_chebyshev_bridge(static_cast<unsigned>(n)), params({{"n", n}}));
    }
  } else if (name == "involution") {
    auto one = [&](long n, long k, long r) {
      const InvolutionReport rep = verify_involution(static_cast<int>(n), static_cast<int>(k), static_cast<int>(r));
      c.cases += rep.domain_size;
      for (const auto& v : rep.violations) c.failures.push_back(params({{"n", n}, {"k", k}, {"r", r}}) + ": " + v);
      std::string cases;
      for (const auto& [ch, cnt] : rep.case_counts) cases += std::string(cases.empty() ? "" : " ") + ch + "=" + std::to_string(cnt);
      return cases;
    };
    if (r_ >= 0) {
      if (!(0 <= r_ && r_ <= k_ && k_ <= n_)) throw UsageError("involution needs 0 <= r <= k <= n");
      c.notes.push_back("top-level cases: " + one(n_, k_, r_));
    } else {
      const long top = bound(max_n_, 6);
      for (long n = 0; n <= top; ++n) {
        for (long k = 0; k <= n; ++k) {
          for (long r = 0; r <= k; ++r) one(n, k, r);
        }
      }
    }
  } else if (name == "blocks") {
    for (long n = 0; n <= bound(max_n_, 7); ++n) {
      for (long k = 0; k <= n; ++k) {
        const BlockReport rep = verify_block_partition(PathVariant::binomial(static_cast<int>(n), static_cast<int>(k)));
        expect(c, rep.ok(), params({{"n", n}, {"k", k}}) + (rep.violations.empty() ? "" : ": " + rep.violations.front()));
      }
    }
  } else {
    throw UsageError("unknown check '" + name + "'");
  }
  return c;
}

void Cli::setup_analyze(CLI::App& app) {
  auto* an = app.add_subcommand("analyze", "coefficient-sequence diagnostics of a named quantity");
  an->add_option("--expr", expr_, "e.g. lucasnomial:10,5, catalan:6, coxeter:E6, coxeter:I2,5")->required();
  an->callback([this] {
    action_ = [this] {
      require_format({"pretty", "json", "csv"});
      const CoeffReport rep = analyze(named_quantity(expr_));
      if (format_ == "json") {
        emit(to_json(rep).dump() + "\n");
      } else if (format_ == "csv") {
        emit(to_csv(rep));
      } else {
        std::string coeffs;
        for (const auto& a : rep.coeffs) coeffs += (coeffs.empty() ? "" : ",") + a.get_str();
        emit("weight " + std::to_string(rep.weight) + "\ncoeffs " + coeffs + "\n");
        emit(std::string("unimodal ") + (rep.unimodal ? "yes" : "no") + "\nlog_concave " +
             (rep.log_concave ? "yes" : "no") + "\nreal_rooted " + (rep.real_rooted ? "yes" : "no") + "\n");
      }
    };
  });
}

int Cli::run(const std::vector<std::string>& args) {
  CLI::App app{"Lucas analogues: exact computation and combinatorial verification", "lucaskit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", format_, "pretty, json, csv, svg or ascii")
      ->check(CLI::IsMember({"pretty", "json", "csv", "svg", "ascii"}));
  app.add_option("--out", out_path_, "write output to this file");
  setup_compute(app);
  setup_tilings(app);
  setup_involution(app);
  setup_verify(app);
  setup_analyze(app);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out_ << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out_ << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err_ << "error: " << e.what() << "\n\n" << app.help();
    return 1;
  }
  try {
    if (action_) action_();
  } catch (const UsageError& e) {
    err_ << "error: " << e.what() << "\n";
    return 1;
  } catch (const InvalidArgument& e) {
    err_ << "error: " << e.what() << "\n";
    return 1;
  } catch (const NotCoprime& e) {
    err_ << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err_ << "failure: " << e.what() << "\n";
    return 2;
  }
  if (out_path_.empty()) {
    out_ << buffer_.str();
  } else {
    std::ofstream f(out_path_);
    if (!f) {
      err_ << "error: cannot write " << out_path_ << "\n";
      return 1;
    }
    f << buffer_.str();
  }
  return status_;
}

}  // namespace

Poly2 named_quantity(const std::string& expr) {
  const auto colon = expr.find(':');
  const std::string name = expr.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : expr.substr(colon + 1);
  try {
    if (name == "coxeter") {
      const auto comma = rest.find(',');
      const std::string family = rest.substr(0, comma);
      const auto nums = comma == std::string::npos ? std::vector<long>{} : parse_ints(rest.substr(comma + 1));
      if (nums.size() > 2) throw UsageError("coxeter takes a type, a parameter and a Fuss index");
      const CoxeterType w = CoxeterType::parse(family, nums.empty() ? 0 : to_unsigned(nums[0], "parameter"));
      return coxeter_fuss_catalan(w, nums.size() == 2 ? to_unsigned(nums[1], "k") : 1);
    }
    static const std::vector<std::pair<std::string, std::size_t>> arity = {
        {"lucas", 1},    {"lucastorial", 1}, {"lucasnomial", 2}, {"dlucasnomial", 3},
        {"catalan", 1},  {"fuss", 2},        {"rational", 2},    {"narayana", 2}};
    const auto it = std::find_if(arity.begin(), arity.end(), [&](const auto& e) { return e.first == name; });
    if (it == arity.end()) throw InvalidArgument("unknown quantity '" + name + "'");
    const auto a = args_exactly(parse_ints(rest), it->second, name);
    auto u = [&](std::size_t i) { return to_unsigned(a[i], name.c_str()); };
    if (name == "lucas") return lucas(u(0));
    if (name == "lucastorial") return lucastorial(u(0));
    if (name == "lucasnomial") return lucasnomial(a[0], a[1]);
    if (name == "dlucasnomial") return d_lucasnomial(a[0], a[1], u(2));
    if (name == "catalan") return lucas_catalan(u(0));
    if (name == "fuss") return fuss_catalan(u(0), u(1));
    if (name == "rational") return rational_catalan(u(0), u(1));
    return narayana(u(0), u(1));
  } catch (const UsageError& e) {
    throw InvalidArgument(e.what());
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Cli cli(out, err);
  return cli.run(args);
}

}  // namespace lucaskit
