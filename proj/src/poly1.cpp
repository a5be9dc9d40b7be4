#include "lucaskit/poly1.hpp"

#include <algorithm>
#include <sstream>

#include "lucaskit/errors.hpp"

namespace lucaskit {

Poly1::Poly1(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Poly1::Poly1(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

Poly1 Poly1::constant(const mpq_class& c) { return Poly1(std::vector<mpq_class>{c}); }

Poly1 Poly1::monomial(const mpq_class& c, std::size_t exp) {
  std::vector<mpq_class> v(exp + 1);
  v[exp] = c;
  return Poly1(std::move(v));
}

void Poly1::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

mpq_class Poly1::coeff(std::size_t exp) const {
  return exp < coeffs_.size() ? coeffs_[exp] : mpq_class(0);
}

bool Poly1::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const mpq_class& c) { return c.get_den() == 1; });
}

mpq_class Poly1::eval(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly1 Poly1::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<mpq_class> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return Poly1(std::move(d));
}

Poly1 Poly1::primitive() const {
  if (is_zero()) return {};
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const auto& c : coeffs_) {
    if (sgn(c) == 0) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  mpq_class scale(den_lcm, num_gcd);
  scale.canonicalize();
  std::vector<mpq_class> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * scale;
  return Poly1(std::move(out));
}

Poly1 Poly1::monic() const {
  if (is_zero()) return {};
  mpq_class inv = 1 / leading();
  std::vector<mpq_class> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * inv;
  return Poly1(std::move(out));
}

Poly1& Poly1::operator+=(const Poly1& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly1& Poly1::operator-=(const Poly1& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly1& Poly1::operator*=(const Poly1& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<mpq_class> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Poly1 Poly1::operator-() const {
  Poly1 r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::string Poly1::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const mpq_class& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    mpq_class mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (mag == 1);
    if (!unit || i == 0) os << mag.get_str();
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::pair<Poly1, Poly1> divmod(const Poly1& a, const Poly1& b) {
  if (b.is_zero()) throw DivisionByZero("Poly1 division by zero");
  if (a.degree() < b.degree()) return {Poly1{}, a};
  std::vector<mpq_class> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<mpq_class> quo(rem.size() - db);
  mpq_class inv = 1 / b.leading();
  for (std::size_t i = rem.size(); i-- > db;) {
    if (sgn(rem[i]) == 0) continue;
    mpq_class f = rem[i] * inv;
    quo[i - db] = f;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= f * bc[j];
  }
  return {Poly1(std::move(quo)), Poly1(std::move(rem))};
}

Poly1 gcd(Poly1 a, Poly1 b) {
  while (!b.is_zero()) {
    Poly1 r = divmod(a, b).second.primitive();
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace {

int sign_at_infinity(const Poly1& p, bool negative) {
  int s = sgn(p.leading());
  if (negative && (p.degree() % 2 == 1)) s = -s;
  return s;
}

std::size_t sign_changes(const std::vector<Poly1>& seq, bool negative) {
  std::size_t changes = 0;
  int prev = 0;
  for (const auto& p : seq) {
    int s = sign_at_infinity(p, negative);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

}  // namespace

std::size_t count_distinct_real_roots(const Poly1& f) {
  if (f.is_zero()) throw InvalidArgument("root count of the zero polynomial");
  if (f.degree() == 0) return 0;
  std::vector<Poly1> seq;
  seq.push_back(f.primitive());
  seq.push_back(f.derivative().primitive());
  while (true) {
    Poly1 r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back((-r).primitive());
  }
  return sign_changes(seq, true) - sign_changes(seq, false);
}

bool real_rooted(const Poly1& f) {
  if (f.is_zero()) throw InvalidArgument("real_rooted of the zero polynomial");
  if (f.degree() == 0) return true;
  Poly1 g = gcd(f, f.derivative());
  Poly1 square_free = divmod(f, g).first;
  return static_cast<long>(count_distinct_real_roots(square_free)) == square_free.degree();
}

}  // namespace lucaskit
