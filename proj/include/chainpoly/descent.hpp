#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <vector>

#include "chainpoly/poly.hpp"
#include "chainpoly/position_set.hpp"

namespace chainpoly {

// ------------------------------------------------------------ statistics

/// {i in [n-1] : w(i) > w(i+1)} for a permutation or any integer sequence.
PositionSet descent_set(std::span<const int> w);
/// Colored descents in [n]: compares (z_i, w(i)) with (z_{i+1}, w(i+1))
/// lexicographically, using the sentinel w(n+1) = n+1, z_{n+1} = 0.
PositionSet colored_descent_set(std::span<const int> w, std::span<const int> z);
/// Weak descents {i : w(i) >= w(i+1)} of a word.
PositionSet word_descent_set(std::span<const int> w);
/// Descents of a word with signed first letter: |w(i)| > w(i+1), or
/// w(i) = w(i+1) > 0.
PositionSet signed_word_descent_set(std::span<const int> w);

struct EnumerationCaps {
  /// Largest n for enumeration over all of S_n.
  int max_perm_n = 9;
  /// Largest number of objects visited by any other brute-force enumerator.
  std::uint64_t max_objects = 10'000'000;
};

// --------------------------------------------------- restricted descents

/// A^T_n(x) = Σ_{w in S_n, Des(w) ⊆ T} x^des(w) by enumeration. Positions
/// of t outside [n-1] are ignored. Throws ResourceError over the cap.
IntPoly a_t_n_bruteforce(int n, PositionSet t, const EnumerationCaps& caps = {});
/// Descent-class sizes #{w in S_n : Des(w) = S}, indexed by the mask of S.
std::vector<mpz_class> descent_class_sizes(int n, const EnumerationCaps& caps = {});

/// p^T_{n,k}(x) over w in S_{n+1} with w(1) = k+1 and Des(w) ⊆ T, for all
/// k = 0..n, by the first-letter recurrence. Positions of t outside [n]
/// are ignored.
std::vector<IntPoly> p_t_n_sequence(int n, PositionSet t);
/// One member of p_t_n_sequence. Throws DomainError unless 0 <= k <= n.
IntPoly p_t_nk(int n, PositionSet t, int k);
/// Direct enumeration of p^T_{n,k}.
IntPoly p_t_nk_bruteforce(int n, PositionSet t, int k, const EnumerationCaps& caps = {});

/// A^T_n as Σ_k p^T_{n-1,k}; t is intersected with [n-1].
IntPoly a_t_n(int n, PositionSet t);

/// x^r A^T_n(1/x) = n! det(θ_ij), with θ the (r+1)x(r+1) Hessenberg matrix
/// built from t = {a_1 < ... < a_r} ⊆ [n-1]; returns A^T_n.
IntPoly gessel_determinant(int n, PositionSet t);
/// Exact determinant of a square matrix over Q[x] (fraction-free
/// elimination with row pivoting).
RatPoly determinant(std::vector<std::vector<RatPoly>> m);

/// μ_n(T) = r - Σ_i C(c_i + c_{i+1}, c_i)^{-1}.
mpq_class mu_n(int n, PositionSet t);
struct MeanVariance {
  mpq_class mean;
  mpq_class variance;
};
/// Mean and variance of the coefficient distribution of p (p(1) > 0).
MeanVariance distribution_moments(const IntPoly& p);
/// Moments of des(w) over w in S_n with Des(w) ⊆ t.
MeanVariance descent_mean_variance(int n, PositionSet t);
/// h_i / h_{r-i} weakly increasing in i, for h with positive coefficients
/// h_0..h_r. Throws DomainError on a zero or negative coefficient.
bool ratio_monotone_check(const IntPoly& p);

// ---------------------------------------------------- colored permutations

/// α(S) for the poset of r-colored subsets of [n]: C(n, m) r^m times the
/// multinomial coefficient of the gaps of S, m = max S.
mpz_class colored_flag_alpha(int n, int r, PositionSet s);
/// A^T_{n,r}(x) = Σ_{S⊆T} α(S) x^|S| (1-x)^|T∖S|, t ⊆ [n].
IntPoly a_t_n_colored(int n, int r, PositionSet t);
/// A^T_{n,r} for every t ⊆ [n] at once, indexed by mask.
std::vector<IntPoly> a_t_n_colored_all(int n, int r);
/// Enumeration over S_n[Z_r]. Throws ResourceError over the cap.
IntPoly a_t_n_colored_bruteforce(int n, int r, PositionSet t, const EnumerationCaps& caps = {});

// ------------------------------------------------------------------ words

/// E_{n,r}(x) = Σ_{w in [r]^n} x^des(w), by a last-letter table.
IntPoly e_nr(int n, int r);
IntPoly e_nr_bruteforce(int n, int r, const EnumerationCaps& caps = {});
/// Ẽ_{n,r}(x) = Σ x^asc*(w) over w: {0..n} -> [r] with w(0) = 1.
IntPoly e_tilde(int n, int r);
IntPoly e_tilde_bruteforce(int n, int r, const EnumerationCaps& caps = {});
/// Number of w in [r]^n with Des(w) ⊆ t.
mpz_class words_with_descents_in(int n, int r, PositionSet t);

/// (h_{n,k,1}, ..., h_{n,k,n-1}): words in D_{n,k} by last letter j.
/// Requires n >= 2 and k >= 2.
std::vector<IntPoly> d_word_family(int n, int k);
/// h_n(x) = Σ_{w in D_n} x^des(w), read off h_{n,n+1,1} = x h_n.
/// Throws DomainError when n < 2.
IntPoly d_word_enumerator(int n);
IntPoly d_word_bruteforce(int n, const EnumerationCaps& caps = {});

}  // namespace chainpoly
