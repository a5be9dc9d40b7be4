#pragma once

#include <optional>

#include "lucaskit/poly1.hpp"
#include "lucaskit/poly2.hpp"

namespace lucaskit {

/// The Lucas polynomial {n}: {0}=0, {1}=1, {n}=s{n-1}+t{n-2}.
/// Values are memoized in a process-wide table that is safe for
/// concurrent use.
const Poly2& lucas(unsigned n);

/// {n}! = {1}{2}...{n}.
Poly2 lucastorial(unsigned n);

/// {n}!/({k}!{n-k}!); zero when k < 0 or k > n.
Poly2 lucasnomial(long n, long k);

/// {n:d}! = {d}{2d}...{nd}.
Poly2 d_lucastorial(unsigned n, unsigned d);

/// {n:d}!/({k:d}!{n-k:d}!); zero when k < 0 or k > n.
Poly2 d_lucasnomial(long n, long k, unsigned d);

/// {k+1}{n-1 brace k} + t{n-k-1}{n-1 brace k-1} == {n brace k}, 0 < k < n.
bool verify_lucasnomial_recursion(long n, long k);

/// {k}{k-1}..{k-r+1}{n brace k} == {n-k+r}..{n-k+1}{n brace n-k+r},
/// 0 <= r <= k <= n.
bool verify_symmetry_identity(long n, long k, long r);

/// Quotient {n}/{m} when the exact division succeeds, empty otherwise.
std::optional<Poly2> lucas_divides(unsigned m, unsigned n);

/// For every e in 1..max(m,n): {e} divides both {m},{n} iff e | gcd(m,n).
bool verify_gcd_lemma(unsigned m, unsigned n);

/// Chebyshev polynomial of the second kind U_n(x).
Poly1 chebyshev_U(unsigned n);

/// lucas(n) under s -> 2x, t -> -1 equals U_{n-1}(x).
bool verify_chebyshev_bridge(unsigned n);

}  // namespace lucaskit
