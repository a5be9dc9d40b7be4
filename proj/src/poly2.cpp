#include "lucaskit/poly2.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "lucaskit/errors.hpp"

namespace lucaskit {

namespace {

struct MonoLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return term_order(a, b); }
};

using TermMap = std::map<Monomial, mpz_class, MonoLess>;

std::vector<Term> from_map(TermMap&& m) {
  std::vector<Term> out;
  out.reserve(m.size());
  for (auto& [mono, c] : m) {
    if (sgn(c) != 0) out.push_back(Term{mono, std::move(c)});
  }
  return out;
}

// Coefficient sequence without validation; caller guarantees homogeneity.
std::vector<mpz_class> dense_seq(const Poly2& p) {
  std::vector<mpz_class> seq;
  for (const auto& term : p.terms()) {
    if (term.mono.t >= seq.size()) seq.resize(term.mono.t + 1);
    seq[term.mono.t] = term.coeff;
  }
  return seq;
}

Poly2 from_seq(std::uint64_t weight, const std::vector<mpz_class>& seq) {
  return Poly2::from_coeff_seq(CoeffSeq{weight, seq});
}

// Univariate long division in y = t / s^2 for two weighted-homogeneous inputs.
Poly2 homogeneous_div(const Poly2& p, std::uint64_t wp, const Poly2& q, std::uint64_t wq) {
  if (wp < wq) throw NotDivisible("weight of dividend is below weight of divisor");
  std::vector<mpz_class> rem = dense_seq(p);
  const std::vector<mpz_class> den = dense_seq(q);
  const std::size_t db = den.size() - 1;
  if (rem.size() < den.size()) throw NotDivisible("degree of dividend is below degree of divisor");
  std::vector<mpz_class> quo(rem.size() - db);
  const mpz_class& lead = den.back();
  mpz_class f;
  for (std::size_t i = rem.size(); i-- > db;) {
    if (sgn(rem[i]) == 0) continue;
    if (!mpz_divisible_p(rem[i].get_mpz_t(), lead.get_mpz_t())) {
      throw NotDivisible("non-integer quotient coefficient");
    }
    mpz_divexact(f.get_mpz_t(), rem[i].get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= f * den[j];
    quo[i - db] = f;
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (sgn(rem[i]) != 0) throw NotDivisible("nonzero remainder");
  }
  while (!quo.empty() && sgn(quo.back()) == 0) quo.pop_back();
  const std::uint64_t wr = wp - wq;
  if (!quo.empty() && 2 * (quo.size() - 1) > wr) throw NotDivisible("quotient needs a negative power of s");
  return from_seq(wr, quo);
}

// Multivariate division in lex order s > t; exact division forces
// lt(p) = lt(q) * lt(r) at every step.
Poly2 general_div(const Poly2& p, const Poly2& q) {
  TermMap rem;
  for (const auto& term : p.terms()) rem.emplace(term.mono, term.coeff);
  const Term& lead = q.terms().front();
  TermMap quo;
  mpz_class f;
  while (!rem.empty()) {
    auto it = rem.begin();
    const Monomial m = it->first;
    if (m.s < lead.mono.s || m.t < lead.mono.t) throw NotDivisible("leading monomial not divisible");
    if (!mpz_divisible_p(it->second.get_mpz_t(), lead.coeff.get_mpz_t())) {
      throw NotDivisible("non-integer quotient coefficient");
    }
    mpz_divexact(f.get_mpz_t(), it->second.get_mpz_t(), lead.coeff.get_mpz_t());
    const Monomial qm{m.s - lead.mono.s, m.t - lead.mono.t};
    quo[qm] += f;
    for (const auto& term : q.terms()) {
      const Monomial target{term.mono.s + qm.s, term.mono.t + qm.t};
      auto [pos, inserted] = rem.try_emplace(target, 0);
      pos->second -= f * term.coeff;
      if (sgn(pos->second) == 0) rem.erase(pos);
    }
  }
  return Poly2(from_map(std::move(quo)));
}

}  // namespace

Poly2::Poly2(long c) {
  if (c != 0) terms_.push_back(Term{Monomial{}, mpz_class(c)});
}

Poly2::Poly2(const mpz_class& c) {
  if (sgn(c) != 0) terms_.push_back(Term{Monomial{}, c});
}

Poly2::Poly2(std::vector<Term> terms) {
  TermMap m;
  for (auto& term : terms) m[term.mono] += term.coeff;
  terms_ = from_map(std::move(m));
}

Poly2 Poly2::s() { return monomial(1, 1, 0); }
Poly2 Poly2::t() { return monomial(1, 0, 1); }

Poly2 Poly2::monomial(const mpz_class& c, std::uint32_t s_exp, std::uint32_t t_exp) {
  Poly2 p;
  if (sgn(c) != 0) p.terms_.push_back(Term{Monomial{s_exp, t_exp}, c});
  return p;
}

Poly2 Poly2::from_coeff_seq(const CoeffSeq& seq) {
  Poly2 p;
  for (std::size_t k = 0; k < seq.coeffs.size(); ++k) {
    if (sgn(seq.coeffs[k]) == 0) continue;
    if (2 * k > seq.weight) throw InvalidArgument("coefficient sequence longer than its weight allows");
    p.terms_.push_back(Term{Monomial{static_cast<std::uint32_t>(seq.weight - 2 * k),
                                     static_cast<std::uint32_t>(k)},
                            seq.coeffs[k]});
  }
  return p;
}

mpz_class Poly2::coeff(std::uint32_t s_exp, std::uint32_t t_exp) const {
  const Monomial m{s_exp, t_exp};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& a, const Monomial& b) { return term_order(a.mono, b); });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return 0;
}

bool Poly2::all_coeffs_nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& x) { return sgn(x.coeff) >= 0; });
}

long long Poly2::homogeneous_weight() const {
  if (terms_.empty()) return -1;
  const std::uint64_t w = terms_.front().mono.weight();
  for (const auto& term : terms_) {
    if (term.mono.weight() != w) return -1;
  }
  return static_cast<long long>(w);
}

Poly2& Poly2::operator+=(const Poly2& o) {
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && term_order(a->mono, b->mono))) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || term_order(b->mono, a->mono)) {
      out.push_back(*b++);
    } else {
      mpz_class c = a->coeff + b->coeff;
      if (sgn(c) != 0) out.push_back(Term{a->mono, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) { return *this += -o; }

Poly2 Poly2::operator-() const {
  Poly2 r = *this;
  for (auto& term : r.terms_) term.coeff = -term.coeff;
  return r;
}

Poly2& Poly2::operator*=(const Poly2& o) {
  *this = *this * o;
  return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const long long wa = a.homogeneous_weight();
  const long long wb = b.homogeneous_weight();
  if (wa >= 0 && wb >= 0) {
    const auto sa = dense_seq(a);
    const auto sb = dense_seq(b);
    std::vector<mpz_class> out(sa.size() + sb.size() - 1);
    for (std::size_t i = 0; i < sa.size(); ++i) {
      if (sgn(sa[i]) == 0) continue;
      for (std::size_t j = 0; j < sb.size(); ++j) {
        mpz_addmul(out[i + j].get_mpz_t(), sa[i].get_mpz_t(), sb[j].get_mpz_t());
      }
    }
    return from_seq(static_cast<std::uint64_t>(wa + wb), out);
  }
  TermMap m;
  for (const auto& x : a.terms()) {
    for (const auto& y : b.terms()) {
      m[Monomial{x.mono.s + y.mono.s, x.mono.t + y.mono.t}] += x.coeff * y.coeff;
    }
  }
  return Poly2(from_map(std::move(m)));
}

mpz_class Poly2::eval(const mpz_class& s0, const mpz_class& t0) const {
  mpz_class acc = 0;
  mpz_class sp;
  mpz_class tp;
  for (const auto& term : terms_) {
    mpz_pow_ui(sp.get_mpz_t(), s0.get_mpz_t(), term.mono.s);
    mpz_pow_ui(tp.get_mpz_t(), t0.get_mpz_t(), term.mono.t);
    acc += term.coeff * sp * tp;
  }
  return acc;
}

Poly1 Poly2::substitute(const Poly1& s_image, const Poly1& t_image) const {
  std::vector<Poly1> s_pows{Poly1{1}};
  std::vector<Poly1> t_pows{Poly1{1}};
  Poly1 acc;
  for (const auto& term : terms_) {
    while (s_pows.size() <= term.mono.s) s_pows.push_back(s_pows.back() * s_image);
    while (t_pows.size() <= term.mono.t) t_pows.push_back(t_pows.back() * t_image);
    acc += Poly1::constant(mpq_class(term.coeff)) * s_pows[term.mono.s] * t_pows[term.mono.t];
  }
  return acc;
}

std::string Poly2::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& term : terms_) {
    const mpz_class mag = abs(term.coeff);
    if (first) {
      if (sgn(term.coeff) < 0) os << "-";
    } else {
      os << (sgn(term.coeff) < 0 ? " - " : " + ");
    }
    first = false;
    const bool constant = term.mono.s == 0 && term.mono.t == 0;
    bool need_star = false;
    if (mag != 1 || constant) {
      os << mag.get_str();
      need_star = true;
    }
    if (term.mono.s > 0) {
      if (need_star) os << "*";
      os << "s";
      if (term.mono.s > 1) os << "^" << term.mono.s;
      need_star = true;
    }
    if (term.mono.t > 0) {
      if (need_star) os << "*";
      os << "t";
      if (term.mono.t > 1) os << "^" << term.mono.t;
    }
  }
  return os.str();
}

Poly2 poly_add(const Poly2& p, const Poly2& q) { return p + q; }
Poly2 poly_mul(const Poly2& p, const Poly2& q) { return p * q; }

Poly2 poly_exact_div(const Poly2& p, const Poly2& q) {
  if (q.is_zero()) throw DivisionByZero("exact division by the zero polynomial");
  if (p.is_zero()) return {};
  const long long wp = p.homogeneous_weight();
  const long long wq = q.homogeneous_weight();
  if (wp >= 0 && wq >= 0) {
    return homogeneous_div(p, static_cast<std::uint64_t>(wp), q, static_cast<std::uint64_t>(wq));
  }
  return general_div(p, q);
}

mpz_class poly_eval(const Poly2& p, const mpz_class& s0, const mpz_class& t0) { return p.eval(s0, t0); }

Poly1 specialize_q(const Poly2& p) { return p.substitute(Poly1{1, 1}, Poly1{0, -1}); }

CoeffSeq coeff_view(const Poly2& p) {
  if (p.is_zero()) throw InvalidArgument("the zero polynomial has no coefficient sequence");
  const long long w = p.homogeneous_weight();
  if (w < 0) throw NotWeightedHomogeneous("monomials of different weight: " + p.to_string());
  CoeffSeq seq;
  seq.weight = static_cast<std::uint64_t>(w);
  seq.coeffs = dense_seq(p);
  return seq;
}

Poly1 coeff_generating_function(const CoeffSeq& seq) {
  std::vector<mpq_class> c;
  c.reserve(seq.coeffs.size());
  for (const auto& a : seq.coeffs) c.emplace_back(a);
  return Poly1(std::move(c));
}

Poly2 pow(const Poly2& p, unsigned e) {
  Poly2 r = 1;
  for (unsigned i = 0; i < e; ++i) r *= p;
  return r;
}

}  // namespace lucaskit
