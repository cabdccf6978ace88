#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "chainpoly/poly.hpp"

namespace chainpoly {

/// x^n p(1/x). Throws InvalidDegreeError when n < deg p.
IntPoly reverse(const IntPoly& p, int n);

/// S_r(p): coefficient i of the result is coefficient r*i of p. r >= 1.
IntPoly veronese(const IntPoly& p, int r);

/// The unique p = a + x*b with a symmetric about n/2 and b about (n-1)/2.
struct SymmetricDecomposition {
  int center_n = 0;
  IntPoly a;
  IntPoly b;
};

/// Throws InvalidDegreeError when deg p > n.
SymmetricDecomposition symmetric_decomposition(const IntPoly& p, int n);

/// True iff both parts of the decomposition with respect to n have
/// nonnegative coefficients and are real-rooted.
bool has_nonneg_realrooted_symdec(const IntPoly& p, int n);

/// p_i = p_{n-i} for 0 <= i <= n (and p vanishes above n). Throws
/// MissingParameterError when n is not given.
bool is_symmetric(const IntPoly& p, std::optional<int> n);

struct Unimodality {
  bool unimodal = false;
  /// Every k with p_0 <= ... <= p_k >= ... >= p_deg.
  std::vector<int> peaks;
};
Unimodality unimodality(const IntPoly& p);
bool is_unimodal(const IntPoly& p);

/// p_i^2 >= p_{i-1} p_{i+1} for 1 <= i <= deg p - 1.
bool is_log_concave(const IntPoly& p);

/// Half-integer m with p_m the unique maximum or p_{m-1/2} = p_{m+1/2} the
/// only maximal coefficients; nullopt otherwise. Throws DomainError on a
/// negative coefficient. The zero polynomial has no mode.
std::optional<mpq_class> mode(const IntPoly& p);

}  // namespace chainpoly
