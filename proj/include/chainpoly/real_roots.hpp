#pragma once

#include <gmpxx.h>

#include <span>
#include <vector>

#include "chainpoly/poly.hpp"

namespace chainpoly {

/// Generalized Sturm sequence p, p', -rem(...), ... kept primitive.
/// Every member is a positive rational multiple of the classical Sturm
/// remainder, so sign-variation counts are unaffected. The last member
/// is gcd(p, p') up to a constant.
class SturmChain {
 public:
  explicit SturmChain(const IntPoly& p);

  const std::vector<IntPoly>& polys() const { return chain_; }
  /// Sign variations at the rational point x (x must not be a root of p).
  int variations_at(const mpq_class& x) const;
  int variations_at_neg_infinity() const;
  int variations_at_pos_infinity() const;
  /// Number of distinct real roots in the half-open interval (a, b].
  int count_roots(const mpq_class& a, const mpq_class& b) const;
  int distinct_real_roots() const { return variations_at_neg_infinity() - variations_at_pos_infinity(); }
  /// Degree of the squarefree part of p.
  int squarefree_degree() const;

 private:
  std::vector<IntPoly> chain_;
};

/// Outcome of the real-rootedness decision together with the Sturm data
/// that certifies it.
struct RealRootCertificate {
  bool real_rooted = false;
  int degree = -1;
  int squarefree_degree = -1;
  int variations_neg_infinity = 0;
  int variations_pos_infinity = 0;
  /// = variations_neg_infinity - variations_pos_infinity
  int distinct_real_roots = 0;
};

RealRootCertificate certify_real_rooted(const IntPoly& p);
/// True iff every complex root of p is real, or p is the zero polynomial.
bool is_real_rooted(const IntPoly& p);

/// An interval known to contain exactly one distinct real root of some
/// polynomial. When lo == hi the root equals lo exactly; otherwise the
/// root lies strictly inside and neither endpoint is a root.
struct RootInterval {
  mpq_class lo;
  mpq_class hi;
  int multiplicity = 1;

  bool exact() const { return lo == hi; }
};

/// Power of two strictly larger than the absolute value of every root.
mpz_class root_bound(const IntPoly& p);

/// Isolates the distinct real roots of p, ascending, each with its
/// multiplicity in p. Exact: Sturm counting plus bisection at dyadic
/// midpoints.
std::vector<RootInterval> isolate_real_roots(const IntPoly& p);

/// Shrinks `iv`, an isolating interval of a root of the squarefree
/// polynomial `f`, by one bisection step.
void refine_root(const IntPoly& f, RootInterval& iv);

/// Interlacing p ⪯ q: the roots a1 >= a2 >= ... of p and b1 >= b2 >= ... of q
/// satisfy ... <= a2 <= b2 <= a1 <= b1. The zero polynomial interlaces and is
/// interlaced by every real-rooted polynomial; nonzero constants interlace
/// every polynomial of degree at most one. Throws NotRealRootedError when
/// either argument is not real-rooted.
bool interlaces(const IntPoly& p, const IntPoly& q);

/// True iff ps[i] ⪯ ps[j] for every i < j.
bool is_interlacing_sequence(std::span<const IntPoly> ps);

/// Statistics of the fast interlacing path, for benchmarking.
struct InterlaceStats {
  long fast_path_hits = 0;
  long exact_path_runs = 0;
};
InterlaceStats interlace_stats();
void reset_interlace_stats();

}  // namespace chainpoly
