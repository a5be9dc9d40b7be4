#include "lucaskit/involution.hpp"

#include <algorithm>
#include <set>

#include "lucaskit/errors.hpp"
#include "lucaskit/lucas.hpp"
#include "lucaskit/parallel.hpp"

namespace lucaskit {

Strip strip_concat(const Strip& r, const Strip& s) {
  Strip out = r;
  out.insert(out.end(), s.begin(), s.end());
  return out;
}

namespace {

// Index of the first tile past cell c, or throws if c falls inside a domino.
std::size_t cut_index(const Strip& s, int c) {
  const int len = covered_length(s);
  if (c < 0 || c > len) {
    throw InvalidArgument("cut at " + std::to_string(c) + " outside a strip of length " + std::to_string(len));
  }
  int covered = 0;
  std::size_t i = 0;
  while (covered < c) covered += static_cast<int>(s[i++]);
  if (covered != c) throw BrokenDomino("cutting at " + std::to_string(c) + " splits a domino");
  return i;
}

NorthKind classify_cells(const std::vector<CellState>& cells, int x) {
  const int len = static_cast<int>(cells.size());
  if (x < 0 || x > len) return NorthKind::NL;
  if (x >= 1 && x < len && cells[x - 1] == CellState::DominoLeft) return NorthKind::NL;
  return NorthKind::NI;
}

}  // namespace

Strip strip_first(const Strip& s, int c) { return Strip(s.begin(), s.begin() + static_cast<long>(cut_index(s, c))); }

Strip strip_last(const Strip& s, int c) {
  const std::size_t i = cut_index(s, covered_length(s) - c);
  return Strip(s.begin() + static_cast<long>(i), s.end());
}

Strip strip_reverse(const Strip& s) { return Strip(s.rbegin(), s.rend()); }

NorthKind classify_point(const Strip& s, int x) { return classify_cells(cells_of(s), x); }

NorthKind classify_point(const PartialTiling& b, int x) {
  if (b.rows.empty()) return NorthKind::NL;
  return classify_cells(b.rows.front(), x);
}

ExtendedType ExtendedTiling::type() const {
  if (b.variant.kind != PathVariant::Kind::Binomial) throw InvalidArgument("extended tilings need a binomial B");
  ExtendedType ty{b.variant.n, b.variant.k, static_cast<int>(strips.size())};
  if (ty.r > ty.k) throw InvalidArgument("more strips than the lower index allows");
  for (int i = 1; i <= ty.r; ++i) {
    if (covered_length(strips[i - 1]) != ty.k - i) {
      throw InvalidArgument("strip " + std::to_string(i) + " must have length " + std::to_string(ty.k - i));
    }
  }
  return ty;
}

Poly2 extended_weight(const ExtendedTiling& e) {
  Poly2 w = partial_weight(e.b);
  for (const auto& s : e.strips) w *= row_weight(s);
  return w;
}

namespace {

struct Half {
  std::vector<NorthKind> labels;
  std::vector<Strip> rows;
  std::vector<Strip> strips;
};

// Rows [0, n) of labels/rows form B; k is the start of its path.
Half iota_rec(int n, int k, const NorthKind* labels, const Strip* rows, const std::vector<Strip>& s,
              std::string& trace) {
  if (n == 0) return Half{{}, {}, s};
  const int t = static_cast<int>(s.size());
  const Strip& r = rows[0];
  const int x = k - t - 1;
  Half out;
  if (labels[0] == NorthKind::NI) {
    // R is a left strip of length k, so it decides the point (x,0).
    const bool second_ni = x >= 0 && classify_point(r, x) == NorthKind::NI;
    if (second_ni) {
      trace.push_back('a');
      std::vector<Strip> next = s;
      next.push_back(strip_first(r, x));
      Half inner = iota_rec(n - 1, k, labels + 1, rows + 1, next, trace);
      out.labels.push_back(NorthKind::NI);
      out.rows.push_back(strip_concat(inner.strips.at(t), strip_reverse(strip_last(r, t + 1))));
      out.strips.assign(inner.strips.begin(), inner.strips.begin() + t);
      out.labels.insert(out.labels.end(), inner.labels.begin(), inner.labels.end());
      out.rows.insert(out.rows.end(), inner.rows.begin(), inner.rows.end());
    } else {
      trace.push_back('b');
      Half inner = iota_rec(n - 1, k, labels + 1, rows + 1, s, trace);
      out.labels.push_back(NorthKind::NL);
      out.rows.push_back(strip_reverse(strip_first(r, k - t)));
      if (t >= 1) {
        out.strips.push_back(strip_concat(inner.strips.at(t - 1), strip_reverse(strip_last(r, t))));
        out.strips.insert(out.strips.end(), inner.strips.begin(), inner.strips.begin() + (t - 1));
      }
      out.labels.insert(out.labels.end(), inner.labels.begin(), inner.labels.end());
      out.rows.insert(out.rows.end(), inner.rows.begin(), inner.rows.end());
    }
    return out;
  }
  const bool second_ni = t == 0 || classify_point(s[0], x) == NorthKind::NI;
  const Strip rs = strip_concat(strip_reverse(r), t >= 1 ? strip_reverse(s[0]) : Strip{});
  std::vector<Strip> next(s.begin() + std::min(t, 1), s.end());
  if (second_ni) {
    trace.push_back('c');
    if (t >= 1) next.push_back(strip_first(s[0], x));
    Half inner = iota_rec(n - 1, k - 1, labels + 1, rows + 1, next, trace);
    out.labels.push_back(NorthKind::NI);
    out.rows.push_back(strip_first(rs, n - k + t));
    out.strips = std::move(inner.strips);
    out.labels.insert(out.labels.end(), inner.labels.begin(), inner.labels.end());
    out.rows.insert(out.rows.end(), inner.rows.begin(), inner.rows.end());
  } else {
    trace.push_back('d');
    Half inner = iota_rec(n - 1, k - 1, labels + 1, rows + 1, next, trace);
    out.labels.push_back(NorthKind::NL);
    out.rows.push_back(strip_last(rs, k - t));
    out.strips.push_back(strip_first(rs, n - k + t - 1));
    out.strips.insert(out.strips.end(), inner.strips.begin(), inner.strips.end());
    out.labels.insert(out.labels.end(), inner.labels.begin(), inner.labels.end());
    out.rows.insert(out.rows.end(), inner.rows.begin(), inner.rows.end());
  }
  return out;
}

std::string extended_key(const ExtendedTiling& e) {
  std::string key = e.b.key();
  for (const auto& s : e.strips) {
    key += '|';
    for (Tile tile : s) key += tile == Tile::Monomino ? 'M' : 'D';
  }
  return key;
}

}  // namespace

ExtendedTiling iota(const ExtendedTiling& e, std::string* trace) {
  const ExtendedType ty = e.type();
  std::string local;
  const std::vector<Strip> rows = row_strips(e.b);
  try {
    Half h = iota_rec(ty.n, ty.k, e.b.path.labels.data(), rows.data(), e.strips, local);
    ExtendedTiling out{assemble_binomial(ty.n, h.labels, h.rows), std::move(h.strips)};
    const ExtendedType got = out.type();
    if (got != ExtendedType{ty.n, ty.n - ty.k + ty.r, ty.r}) throw InvalidArgument("image has the wrong type");
    if (trace != nullptr) *trace = local;
    return out;
  } catch (const BrokenDomino& err) {
    throw Malformed(std::string(err.what()) + " (case trace " + local + ")");
  } catch (const InvalidArgument& err) {
    throw Malformed(std::string(err.what()) + " (case trace " + local + ")");
  } catch (const std::out_of_range& err) {
    throw Malformed(std::string("missing recursive strip (case trace ") + local + ")");
  }
}

std::vector<ExtendedTiling> enumerate_extended(int n, int k, int r) {
  if (!(0 <= r && r <= k && k <= n)) throw InvalidArgument("extended tilings need 0 <= r <= k <= n");
  const auto partials = enumerate_partials(PathVariant::binomial(n, k));
  std::vector<const std::vector<RowTiling>*> choices;
  for (int i = 1; i <= r; ++i) choices.push_back(&row_tilings(k - i));
  std::vector<ExtendedTiling> out;
  for (const auto& b : partials) {
    std::vector<std::size_t> index(static_cast<std::size_t>(r), 0);
    while (true) {
      ExtendedTiling e{b, {}};
      for (int i = 0; i < r; ++i) e.strips.push_back((*choices[i])[index[i]]);
      out.push_back(std::move(e));
      int i = r - 1;
      while (i >= 0 && index[i] + 1 == choices[i]->size()) index[i--] = 0;
      if (i < 0) break;
      ++index[i];
    }
  }
  return out;
}

InvolutionReport verify_involution(int n, int k, int r) {
  InvolutionReport rep;
  rep.type = {n, k, r};
  rep.image_type = {n, n - k + r, r};
  const auto domain = enumerate_extended(n, k, r);
  const auto image_class = enumerate_extended(n, n - k + r, r);
  rep.domain_size = domain.size();
  rep.image_class_size = image_class.size();

  struct Outcome {
    char first_case = '-';
    std::string image_key;
    Poly2 weight;
    std::vector<std::string> problems;
  };
  const auto outcomes = parallel_map(domain, [&](const ExtendedTiling& e) {
    Outcome o;
    o.weight = extended_weight(e);
    std::string trace;
    try {
      const ExtendedTiling img = iota(e, &trace);
      o.first_case = trace.empty() ? '0' : trace.front();
      o.image_key = extended_key(img);
      if (img.type() != rep.image_type) o.problems.push_back("wrong image type for " + extended_key(e));
      if (extended_weight(img) != o.weight) o.problems.push_back("weight not preserved for " + extended_key(e));
      if (iota(img) != e) o.problems.push_back("iota^2 differs from the identity on " + extended_key(e));
    } catch (const Error& err) {
      o.problems.push_back(std::string("iota failed on ") + extended_key(e) + ": " + err.what());
    }
    return o;
  });

  std::set<std::string> class_keys;
  for (const auto& e : image_class) {
    class_keys.insert(extended_key(e));
    rep.image_sum += extended_weight(e);
  }
  std::set<std::string> images;
  for (const auto& o : outcomes) {
    rep.domain_sum += o.weight;
    ++rep.case_counts[o.first_case];
    rep.violations.insert(rep.violations.end(), o.problems.begin(), o.problems.end());
    if (o.image_key.empty()) continue;
    if (!images.insert(o.image_key).second) rep.violations.push_back("two inputs share the image " + o.image_key);
    if (class_keys.count(o.image_key) == 0) rep.violations.push_back("image outside the target class: " + o.image_key);
  }
  if (rep.domain_size != rep.image_class_size) rep.violations.push_back("domain and image class differ in size");
  if (n > 0 && rep.case_counts.count('0') != 0) rep.violations.push_back("some input matched no case");

  Poly2 lhs = lucasnomial(n, k);
  Poly2 rhs = lucasnomial(n, n - k + r);
  for (int i = 0; i < r; ++i) {
    lhs *= lucas(static_cast<unsigned>(k - i));
    rhs *= lucas(static_cast<unsigned>(n - k + r - i));
  }
  rep.lhs = lhs;
  rep.rhs = rhs;
  if (rep.domain_sum != lhs) rep.violations.push_back("domain weight differs from the left side of the symmetry identity");
  if (rep.image_sum != rhs) rep.violations.push_back("image class weight differs from the right side");
  if (lhs != rhs) rep.violations.push_back("the symmetry identity fails");
  return rep;
}

namespace {

constexpr Tile M = Tile::Monomino;
constexpr Tile D = Tile::Domino;
constexpr NorthKind NI = NorthKind::NI;
constexpr NorthKind NL = NorthKind::NL;

}  // namespace

ExtendedTiling example_752() {
  return ExtendedTiling{assemble_binomial(7, {NL, NL, NI, NI, NL, NL, NL}, {{D}, {D}, {D, M}, {M, D}, {}, {}, {}}),
                        {{M, D, M}, {D, M}}};
}

ExtendedTiling example_752_image() {
  return ExtendedTiling{assemble_binomial(7, {NL, NI, NL, NI, NI, NL, NL}, {{D, M}, {D, M}, {D}, {D}, {D}, {}, {}}),
                        {{D, M}, {M, M}}};
}

}  // namespace lucaskit
