#include "lucaskit/lucas.hpp"

#include <deque>
#include <mutex>
#include <numeric>
#include <shared_mutex>

#include "lucaskit/errors.hpp"

namespace lucaskit {

namespace {

// std::deque keeps references to existing entries valid while growing.
class LucasCache {
 public:
  LucasCache() {
    memo_.emplace_back(0);
    memo_.emplace_back(1);
  }

  const Poly2& get(unsigned n) {
    {
      std::shared_lock lock(mutex_);
      if (n < memo_.size()) return memo_[n];
    }
    std::unique_lock lock(mutex_);
    const Poly2 s = Poly2::s();
    const Poly2 t = Poly2::t();
    while (memo_.size() <= n) {
      const std::size_t m = memo_.size();
      memo_.push_back(s * memo_[m - 1] + t * memo_[m - 2]);
    }
    return memo_[n];
  }

 private:
  std::shared_mutex mutex_;
  std::deque<Poly2> memo_;
};

LucasCache& cache() {
  static LucasCache c;
  return c;
}

Poly2 falling_product(long top, long count) {
  Poly2 r = 1;
  for (long i = 0; i < count; ++i) r *= lucas(static_cast<unsigned>(top - i));
  return r;
}

}  // namespace

const Poly2& lucas(unsigned n) { return cache().get(n); }

Poly2 lucastorial(unsigned n) { return d_lucastorial(n, 1); }

Poly2 d_lucastorial(unsigned n, unsigned d) {
  if (d == 0) throw InvalidArgument("d must be positive");
  Poly2 r = 1;
  for (unsigned i = 1; i <= n; ++i) r *= lucas(i * d);
  return r;
}

Poly2 d_lucasnomial(long n, long k, unsigned d) {
  if (k < 0 || n < 0 || k > n) return {};
  // Cancel the larger factorial first: {n:d}!/{n-k:d}! = {(n-k+1)d}...{nd}.
  const long small = std::min(k, n - k);
  Poly2 num = 1;
  for (long i = n - small + 1; i <= n; ++i) num *= lucas(static_cast<unsigned>(i * d));
  try {
    return poly_exact_div(num, d_lucastorial(static_cast<unsigned>(small), d));
  } catch (const NotDivisible& e) {
    throw InternalConsistency(std::string("d-Lucasnomial is not a polynomial: ") + e.what());
  }
}

Poly2 lucasnomial(long n, long k) { return d_lucasnomial(n, k, 1); }

bool verify_lucasnomial_recursion(long n, long k) {
  if (!(0 < k && k < n)) throw InvalidArgument("recursion requires 0 < k < n");
  const Poly2 rhs = lucas(static_cast<unsigned>(k + 1)) * lucasnomial(n - 1, k) +
                    Poly2::t() * lucas(static_cast<unsigned>(n - k - 1)) * lucasnomial(n - 1, k - 1);
  return lucasnomial(n, k) == rhs;
}

bool verify_symmetry_identity(long n, long k, long r) {
  if (!(0 <= r && r <= k && k <= n)) throw InvalidArgument("symmetry requires 0 <= r <= k <= n");
  const Poly2 lhs = falling_product(k, r) * lucasnomial(n, k);
  const Poly2 rhs = falling_product(n - k + r, r) * lucasnomial(n, n - k + r);
  return lhs == rhs;
}

std::optional<Poly2> lucas_divides(unsigned m, unsigned n) {
  if (m == 0 || n == 0) throw InvalidArgument("lucas_divides takes positive indices");
  try {
    return poly_exact_div(lucas(n), lucas(m));
  } catch (const NotDivisible&) {
    return std::nullopt;
  }
}

bool verify_gcd_lemma(unsigned m, unsigned n) {
  const unsigned g = std::gcd(m, n);
  for (unsigned e = 1; e <= std::max(m, n); ++e) {
    const bool common = lucas_divides(e, m).has_value() && lucas_divides(e, n).has_value();
    if (common != (g % e == 0)) return false;
  }
  return true;
}

Poly1 chebyshev_U(unsigned n) {
  Poly1 prev{1};
  if (n == 0) return prev;
  Poly1 cur{0, 2};
  const Poly1 two_x{0, 2};
  for (unsigned i = 2; i <= n; ++i) {
    Poly1 next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

bool verify_chebyshev_bridge(unsigned n) {
  if (n == 0) throw InvalidArgument("chebyshev bridge requires n >= 1");
  return lucas(n).substitute(Poly1{0, 2}, Poly1{-1}) == chebyshev_U(n - 1);
}

}  // namespace lucaskit
