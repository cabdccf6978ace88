#include "chainpoly/descent.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "chainpoly/error.hpp"
#include "chainpoly/poly_shape.hpp"
#include "chainpoly/poset.hpp"

namespace chainpoly {

namespace {

mpz_class factorial(int n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

mpz_class binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// Saturating product for cap checks.
std::uint64_t capped_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  return __builtin_mul_overflow(a, b, &out) ? UINT64_MAX : out;
}

std::uint64_t capped_pow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r = capped_mul(r, b);
  return r;
}

void require_objects(std::uint64_t count, const EnumerationCaps& caps, const std::string& what) {
  if (count > caps.max_objects) {
    throw ResourceError(what + " would visit more than " + std::to_string(caps.max_objects) + " objects");
  }
}

PositionSet restrict_to(PositionSet t, int m) { return m <= 0 ? PositionSet{} : t & PositionSet::interval(std::min(m, 63)); }

// Σ_{S⊆t} c[S] x^|S|.
IntPoly enumerator_from_classes(const std::vector<mpz_class>& classes, PositionSet t) {
  std::vector<mpz_class> c(static_cast<std::size_t>(t.size()) + 1);
  for_each_subset(t, [&](PositionSet s) {
    if (s.mask() < classes.size()) c[static_cast<std::size_t>(s.size())] += classes[s.mask()];
  });
  return IntPoly(std::move(c));
}

std::vector<IntPoly> subset_sum_polys(const std::vector<mpz_class>& beta) {
  std::vector<IntPoly> f(beta.size());
  for (std::size_t m = 0; m < beta.size(); ++m)
    f[m] = IntPoly::monomial(beta[m], static_cast<std::size_t>(std::popcount(static_cast<std::uint64_t>(m))));
  for (std::size_t bit = 1; bit < f.size(); bit <<= 1)
    for (std::size_t m = 0; m < f.size(); ++m)
      if (m & bit) f[m] += f[m ^ bit];
  return f;
}

}  // namespace

// ------------------------------------------------------------ statistics

PositionSet descent_set(std::span<const int> w) {
  PositionSet d;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) d.insert(static_cast<int>(i) + 1);
  return d;
}

PositionSet colored_descent_set(std::span<const int> w, std::span<const int> z) {
  if (w.size() != z.size()) throw DomainError("permutation and color vector differ in length");
  const std::size_t n = w.size();
  PositionSet d;
  for (std::size_t i = 0; i < n; ++i) {
    const int wn = i + 1 < n ? w[i + 1] : static_cast<int>(n) + 1;
    const int zn = i + 1 < n ? z[i + 1] : 0;
    if (z[i] > zn || (z[i] == zn && w[i] > wn)) d.insert(static_cast<int>(i) + 1);
  }
  return d;
}

PositionSet word_descent_set(std::span<const int> w) {
  PositionSet d;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] >= w[i + 1]) d.insert(static_cast<int>(i) + 1);
  return d;
}

PositionSet signed_word_descent_set(std::span<const int> w) {
  PositionSet d;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (std::abs(w[i]) > w[i + 1] || (w[i] == w[i + 1] && w[i] > 0)) d.insert(static_cast<int>(i) + 1);
  return d;
}

// --------------------------------------------------- restricted descents

std::vector<mpz_class> descent_class_sizes(int n, const EnumerationCaps& caps) {
  if (n < 0) throw DomainError("n must be nonnegative");
  if (n > caps.max_perm_n) throw ResourceError("enumeration over S_" + std::to_string(n) + " exceeds the cap n <= " + std::to_string(caps.max_perm_n));
  std::vector<std::uint64_t> counts(std::size_t{1} << std::max(n - 1, 0), 0);
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do {
    ++counts[descent_set(w).mask()];
  } while (std::next_permutation(w.begin(), w.end()));
  std::vector<mpz_class> out(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) out[i] = static_cast<unsigned long>(counts[i]);
  return out;
}

IntPoly a_t_n_bruteforce(int n, PositionSet t, const EnumerationCaps& caps) {
  return enumerator_from_classes(descent_class_sizes(n, caps), restrict_to(t, n - 1));
}

std::vector<IntPoly> p_t_n_sequence(int n, PositionSet t) {
  if (n < 0) throw DomainError("n must be nonnegative");
  std::vector<IntPoly> prev{IntPoly{1}};
  for (int m = 1; m <= n; ++m) {
    // Level m uses T shifted down by n - m; only "1 in T" matters here.
    const bool one_in_t = t.contains(n - m + 1);
    std::vector<IntPoly> cur(static_cast<std::size_t>(m) + 1);
    IntPoly suffix;
    for (int k = m - 1; k >= 0; --k) {
      suffix += prev[static_cast<std::size_t>(k)];
      cur[static_cast<std::size_t>(k)] = suffix;
    }
    if (one_in_t) {
      IntPoly prefix;
      for (int k = 1; k <= m; ++k) {
        prefix += prev[static_cast<std::size_t>(k) - 1];
        cur[static_cast<std::size_t>(k)] += prefix.shifted(1);
      }
    }
    prev = std::move(cur);
  }
  return prev;
}

IntPoly p_t_nk(int n, PositionSet t, int k) {
  if (k < 0 || k > n) throw DomainError("k must lie in 0..n");
  return p_t_n_sequence(n, t)[static_cast<std::size_t>(k)];
}

IntPoly p_t_nk_bruteforce(int n, PositionSet t, int k, const EnumerationCaps& caps) {
  if (k < 0 || k > n) throw DomainError("k must lie in 0..n");
  if (n + 1 > caps.max_perm_n) throw ResourceError("enumeration over S_" + std::to_string(n + 1) + " exceeds the cap");
  std::vector<mpz_class> c(static_cast<std::size_t>(n) + 1);
  std::vector<int> w(static_cast<std::size_t>(n) + 1);
  std::iota(w.begin(), w.end(), 1);
  do {
    if (w[0] != k + 1) continue;
    PositionSet d = descent_set(w);
    if (d.is_subset_of(t)) c[static_cast<std::size_t>(d.size())] += 1;
  } while (std::next_permutation(w.begin(), w.end()));
  return IntPoly(std::move(c));
}

IntPoly a_t_n(int n, PositionSet t) {
  if (n < 0) throw DomainError("n must be nonnegative");
  if (n == 0) return IntPoly{1};
  IntPoly sum;
  for (const auto& p : p_t_n_sequence(n - 1, restrict_to(t, n - 1))) sum += p;
  return sum;
}

RatPoly determinant(std::vector<std::vector<RatPoly>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw DomainError("determinant of a non-square matrix");
  if (n == 0) return RatPoly::constant(1);
  bool negate = false;
  RatPoly prev_pivot = RatPoly::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return RatPoly();
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = divide_exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev_pivot);
      m[i][k] = RatPoly();
    }
    prev_pivot = m[k][k];
  }
  RatPoly d = m[n - 1][n - 1];
  return negate ? -d : d;
}

IntPoly gessel_determinant(int n, PositionSet t) {
  if (n < 1) throw DomainError("n must be positive");
  if (!t.is_subset_of(restrict_to(PositionSet::interval(63), n - 1))) throw DomainError("t must be a subset of [n-1]");
  std::vector<int> a{0};
  for (int v : t.elements()) a.push_back(v);
  a.push_back(n);
  const std::size_t r = a.size() - 2;
  const RatPoly one_minus_x{mpq_class(1), mpq_class(-1)};
  std::vector<std::vector<RatPoly>> theta(r + 1, std::vector<RatPoly>(r + 1));
  for (std::size_t i = 0; i <= r; ++i)
    for (std::size_t j = 0; j <= r; ++j) {
      if (i == j + 1) {
        theta[i][j] = RatPoly::constant(1);
      } else if (i <= j) {
        RatPoly p = RatPoly::constant(mpq_class(1, factorial(a[j + 1] - a[i])));
        for (std::size_t e = i; e < j; ++e) p = p * one_minus_x;
        theta[i][j] = p;
      }
    }
  RatPoly det = determinant(std::move(theta)) * mpq_class(factorial(n));
  return reverse(det.to_int_poly(), static_cast<int>(r));
}

mpq_class mu_n(int n, PositionSet t) {
  if (n < 1) throw DomainError("n must be positive");
  std::vector<int> a{0};
  for (int v : restrict_to(t, n - 1).elements()) a.push_back(v);
  a.push_back(n);
  const int r = static_cast<int>(a.size()) - 2;
  mpq_class mu = r;
  for (int i = 1; i <= r; ++i) {
    const int ci = a[static_cast<std::size_t>(i)] - a[static_cast<std::size_t>(i) - 1];
    const int cn = a[static_cast<std::size_t>(i) + 1] - a[static_cast<std::size_t>(i)];
    mu -= mpq_class(1, binomial(ci + cn, ci));
  }
  return mu;
}

MeanVariance distribution_moments(const IntPoly& p) {
  const mpz_class total = p.value_at_one();
  if (total <= 0) throw DomainError("distribution needs p(1) > 0");
  mpz_class m1 = 0, m2 = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    m1 += p[i] * static_cast<unsigned long>(i);
    m2 += p[i] * static_cast<unsigned long>(i * i);
  }
  MeanVariance mv;
  mv.mean = mpq_class(m1, total);
  mv.mean.canonicalize();
  mpq_class second(m2, total);
  second.canonicalize();
  mv.variance = second - mv.mean * mv.mean;
  return mv;
}

MeanVariance descent_mean_variance(int n, PositionSet t) { return distribution_moments(a_t_n(n, t)); }

bool ratio_monotone_check(const IntPoly& p) {
  if (p.is_zero()) throw DomainError("ratio check needs a nonzero polynomial");
  for (const auto& c : p.coeffs())
    if (c <= 0) throw DomainError("ratio check needs positive coefficients h_0..h_r");
  const auto r = static_cast<std::size_t>(p.degree());
  for (std::size_t i = 0; i < r; ++i)
    if (p[i] * p[r - i - 1] > p[i + 1] * p[r - i]) return false;
  return true;
}

// ---------------------------------------------------- colored permutations

mpz_class colored_flag_alpha(int n, int r, PositionSet s) {
  if (n < 0 || r < 1) throw DomainError("colored flag vector needs n >= 0 and r >= 1");
  if (!s.is_subset_of(restrict_to(PositionSet::interval(63), n))) throw DomainError("rank set must be a subset of [n]");
  const int m = s.max();
  mpz_class rm;
  mpz_ui_pow_ui(rm.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(m));
  mpz_class out = binomial(n, m) * rm * factorial(m);
  int last = 0;
  for (int a : s.elements()) {
    out /= factorial(a - last);
    last = a;
  }
  return out;
}

IntPoly a_t_n_colored(int n, int r, PositionSet t) {
  if (!t.is_subset_of(restrict_to(PositionSet::interval(63), n))) throw DomainError("t must be a subset of [n]");
  const IntPoly one_minus_x{1, -1};
  IntPoly out;
  for_each_subset(t, [&](PositionSet s) {
    IntPoly term = IntPoly::monomial(colored_flag_alpha(n, r, s), static_cast<std::size_t>(s.size()));
    out += term * pow(one_minus_x, static_cast<unsigned>((t - s).size()));
  });
  return out;
}

std::vector<IntPoly> a_t_n_colored_all(int n, int r) {
  if (n < 0 || n > 24) throw DomainError("a_t_n_colored_all supports 0 <= n <= 24");
  std::vector<mpz_class> alpha(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < alpha.size(); ++m) alpha[m] = colored_flag_alpha(n, r, PositionSet::from_mask(m));
  return subset_sum_polys(beta_from_alpha(alpha));
}

IntPoly a_t_n_colored_bruteforce(int n, int r, PositionSet t, const EnumerationCaps& caps) {
  if (n < 0 || r < 1) throw DomainError("colored permutations need n >= 0 and r >= 1");
  std::uint64_t count = capped_pow(static_cast<std::uint64_t>(r), n);
  for (int i = 2; i <= n; ++i) count = capped_mul(count, static_cast<std::uint64_t>(i));
  require_objects(count, caps, "colored permutation enumeration");
  std::vector<std::uint64_t> classes(std::size_t{1} << n, 0);
  std::vector<int> w(static_cast<std::size_t>(n)), z(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do {
    std::fill(z.begin(), z.end(), 0);
    while (true) {
      ++classes[colored_descent_set(w, z).mask()];
      std::size_t i = 0;
      while (i < z.size() && ++z[i] == r) z[i++] = 0;
      if (i == z.size()) break;
    }
  } while (std::next_permutation(w.begin(), w.end()));
  std::vector<mpz_class> c(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) c[i] = static_cast<unsigned long>(classes[i]);
  return enumerator_from_classes(c, restrict_to(t, n));
}

// ------------------------------------------------------------------ words

namespace {

// Words over [r] by last letter; a step to letter b is a descent when
// last >= b. `allowed(i)` says whether position i may be a descent.
template <typename Allowed>
std::vector<IntPoly> word_table(int n, int r, Allowed allowed) {
  std::vector<IntPoly> cnt(static_cast<std::size_t>(r), IntPoly{1});
  for (int i = 1; i < n; ++i) {
    std::vector<IntPoly> next(static_cast<std::size_t>(r));
    const bool descent_ok = allowed(i);
    IntPoly below;
    IntPoly at_or_above;
    for (const auto& c : cnt) at_or_above += c;
    for (int b = 0; b < r; ++b) {
      next[static_cast<std::size_t>(b)] = below;
      if (descent_ok) next[static_cast<std::size_t>(b)] += at_or_above.shifted(1);
      below += cnt[static_cast<std::size_t>(b)];
      at_or_above -= cnt[static_cast<std::size_t>(b)];
    }
    cnt = std::move(next);
  }
  return cnt;
}

}  // namespace

IntPoly e_nr(int n, int r) {
  if (n < 0 || r < 1) throw DomainError("E_{n,r} needs n >= 0 and r >= 1");
  if (n == 0) return IntPoly{1};
  IntPoly sum;
  for (const auto& c : word_table(n, r, [](int) { return true; })) sum += c;
  return sum;
}

mpz_class words_with_descents_in(int n, int r, PositionSet t) {
  if (n < 0 || r < 1) throw DomainError("word count needs n >= 0 and r >= 1");
  if (n == 0) return 1;
  IntPoly sum;
  for (const auto& c : word_table(n, r, [&](int i) { return t.contains(i); })) sum += c;
  return sum.value_at_one();
}

IntPoly e_nr_bruteforce(int n, int r, const EnumerationCaps& caps) {
  if (n < 0 || r < 1) throw DomainError("E_{n,r} needs n >= 0 and r >= 1");
  require_objects(capped_pow(static_cast<std::uint64_t>(r), n), caps, "word enumeration");
  std::vector<mpz_class> c(static_cast<std::size_t>(std::max(n, 1)));
  std::vector<int> w(static_cast<std::size_t>(n), 1);
  while (true) {
    c[static_cast<std::size_t>(word_descent_set(w).size())] += 1;
    std::size_t i = 0;
    while (i < w.size() && ++w[i] > r) w[i++] = 1;
    if (i == w.size()) break;
  }
  return IntPoly(std::move(c));
}

IntPoly e_tilde(int n, int r) {
  if (n < 0 || r < 1) throw DomainError("Ẽ_{n,r} needs n >= 0 and r >= 1");
  // cnt[b]: words w(0..i) with w(0) = 1 ending in letter b+1.
  std::vector<IntPoly> cnt(static_cast<std::size_t>(r));
  cnt[0] = IntPoly{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<IntPoly> next(static_cast<std::size_t>(r));
    IntPoly below;
    IntPoly at_or_above;
    for (const auto& c : cnt) at_or_above += c;
    for (int b = 0; b < r; ++b) {
      next[static_cast<std::size_t>(b)] = below.shifted(1) + at_or_above;
      below += cnt[static_cast<std::size_t>(b)];
      at_or_above -= cnt[static_cast<std::size_t>(b)];
    }
    cnt = std::move(next);
  }
  IntPoly sum;
  for (const auto& c : cnt) sum += c;
  return sum;
}

IntPoly e_tilde_bruteforce(int n, int r, const EnumerationCaps& caps) {
  if (n < 0 || r < 1) throw DomainError("Ẽ_{n,r} needs n >= 0 and r >= 1");
  require_objects(capped_pow(static_cast<std::uint64_t>(r), n), caps, "word enumeration");
  std::vector<mpz_class> c(static_cast<std::size_t>(n) + 1);
  std::vector<int> w(static_cast<std::size_t>(n) + 1, 1);
  while (true) {
    int asc = 0;
    for (std::size_t i = 1; i < w.size(); ++i)
      if (w[i - 1] < w[i]) ++asc;
    c[static_cast<std::size_t>(asc)] += 1;
    std::size_t i = 1;
    while (i < w.size() && ++w[i] > r) w[i++] = 1;
    if (i == w.size()) break;
  }
  return IntPoly(std::move(c));
}

std::vector<IntPoly> d_word_family(int n, int k) {
  if (n < 2) throw DomainError("D_{n,k} needs n >= 2");
  if (k < 2) throw DomainError("D_{n,k} needs k >= 2");
  std::vector<IntPoly> h(static_cast<std::size_t>(n) - 1);
  for (int j = 1; j <= n - 1; ++j) h[static_cast<std::size_t>(j) - 1] = IntPoly{2L * j - 1, 2L * n - 2L * j - 1};
  for (int level = 2; level < k; ++level) {
    std::vector<IntPoly> next(h.size());
    IntPoly below;
    IntPoly at_or_above;
    for (const auto& p : h) at_or_above += p;
    for (std::size_t j = 0; j < h.size(); ++j) {
      next[j] = below + at_or_above.shifted(1);
      below += h[j];
      at_or_above -= h[j];
    }
    h = std::move(next);
  }
  return h;
}

IntPoly d_word_enumerator(int n) {
  if (n < 2) throw DomainError("D_n is defined for n >= 2");
  IntPoly top = d_word_family(n, n + 1).front();
  if (!top.is_zero() && top[0] != 0) throw InternalConsistencyError("h_{n,n+1,1} is not divisible by x");
  std::vector<mpz_class> c(top.coeffs().begin() + (top.is_zero() ? 0 : 1), top.coeffs().end());
  return IntPoly(std::move(c));
}

IntPoly d_word_bruteforce(int n, const EnumerationCaps& caps) {
  if (n < 2) throw DomainError("D_n is defined for n >= 2");
  require_objects(capped_mul(2, capped_pow(static_cast<std::uint64_t>(n) - 1, n)), caps, "D_n enumeration");
  std::vector<mpz_class> c(static_cast<std::size_t>(n));
  std::vector<int> w(static_cast<std::size_t>(n), 1);
  w[0] = -(n - 1);
  while (true) {
    c[static_cast<std::size_t>(signed_word_descent_set(w).size())] += 1;
    // Odometer: w(1) runs over -(n-1)..-1, 1..n-1; the rest over 1..n-1.
    std::size_t i = 0;
    for (; i < w.size(); ++i) {
      if (i == 0) {
        w[0] = w[0] == -1 ? 1 : w[0] + 1;
        if (w[0] <= n - 1) break;
        w[0] = -(n - 1);
      } else {
        if (++w[i] <= n - 1) break;
        w[i] = 1;
      }
    }
    if (i == w.size()) break;
  }
  return IntPoly(std::move(c));
}

}  // namespace chainpoly
