#pragma once

// Shared test oracles. Everything here is computed independently of the
// library code paths it is used to check.

#include <doctest.h>
#include <gmpxx.h>

#include <random>
#include <utility>
#include <vector>

#include "chainpoly/poly.hpp"
#include "chainpoly/poly_shape.hpp"
#include "chainpoly/real_roots.hpp"

namespace testsupport {

using chainpoly::IntPoly;

/// Integer polynomial prod (den*x - num)^mult over the given rational roots.
inline IntPoly from_rational_roots(const std::vector<std::pair<mpq_class, int>>& roots) {
  IntPoly out{1};
  for (const auto& [r, m] : roots) {
    IntPoly lin(std::vector<mpz_class>{-r.get_num(), r.get_den()});
    for (int i = 0; i < m; ++i) out *= lin;
  }
  return out;
}

/// Real-rooted with nonnegative coefficients implies log-concave implies
/// unimodal. Call on every certified polynomial a test produces.
inline void check_shape_chain(const IntPoly& p) {
  if (!p.has_nonnegative_coeffs() || !chainpoly::is_real_rooted(p)) return;
  CHECK(chainpoly::is_log_concave(p));
  CHECK(chainpoly::is_unimodal(p));
}

/// Sign behaviour of the Wronskian p'q - pq': true iff it is <= 0 on R.
inline bool wronskian_nonpositive(const IntPoly& p, const IntPoly& q) {
  IntPoly w = p.derivative() * q - p * q.derivative();
  if (w.is_zero()) return true;
  for (const auto& iv : chainpoly::isolate_real_roots(w))
    if (iv.multiplicity % 2 == 1) return false;
  // No sign change, so the sign near +infinity is the sign everywhere.
  return w.leading_sign() < 0;
}

/// Cross-checks an interlacing verdict against the Wronskian sign test when
/// that test applies: both nonzero real-rooted with positive leading
/// coefficients and compatible degrees.
inline void check_against_wronskian(const IntPoly& p, const IntPoly& q, bool verdict) {
  if (p.is_zero() || q.is_zero()) return;
  if (p.leading_sign() < 0 || q.leading_sign() < 0) return;
  if (!(q.degree() == p.degree() || q.degree() == p.degree() + 1)) return;
  CHECK_MESSAGE(wronskian_nonpositive(p, q) == verdict, to_string(p), " vs ", to_string(q));
}

/// interlaces(p, q) with the Wronskian cross-check applied.
inline bool interlaces_checked(const IntPoly& p, const IntPoly& q) {
  bool v = chainpoly::interlaces(p, q);
  check_against_wronskian(p, q, v);
  return v;
}

/// All-pairs interlacing with every pair cross-checked.
inline bool interlacing_sequence_checked(const std::vector<IntPoly>& ps) {
  bool all = true;
  for (const auto& p : ps) check_shape_chain(p);
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j)
      if (!interlaces_checked(ps[i], ps[j])) all = false;
  CHECK(all == chainpoly::is_interlacing_sequence(ps));
  return all;
}

/// Closure properties of an interlacing sequence with positive leading
/// coefficients: nonnegative combinations sit between the ends, and the
/// partial-sum and x-weighted partial-sum sequences interlace again.
inline void check_interlacing_closure(const std::vector<IntPoly>& ps, std::mt19937& rng) {
  if (ps.empty()) return;
  std::uniform_int_distribution<int> coeff(0, 5);
  IntPoly combo;
  for (const auto& p : ps) combo += p * mpz_class(coeff(rng));
  CHECK(chainpoly::is_real_rooted(combo));
  CHECK(chainpoly::interlaces(ps.front(), combo));
  CHECK(chainpoly::interlaces(combo, ps.back()));

  const std::size_t m = ps.size() - 1;
  std::vector<IntPoly> q(m + 2), t(m + 2);
  for (std::size_t k = 0; k <= m + 1; ++k) {
    IntPoly head, tail;
    for (std::size_t i = 0; i < k; ++i) head += ps[i];
    for (std::size_t i = k; i <= m; ++i) tail += ps[i];
    q[k] = tail;
    t[k] = head.shifted(1) + tail;
  }
  CHECK(chainpoly::is_interlacing_sequence(q));
  CHECK(chainpoly::is_interlacing_sequence(t));
}

}  // namespace testsupport
