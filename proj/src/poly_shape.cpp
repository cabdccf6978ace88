#include "chainpoly/poly_shape.hpp"

#include <string>

#include "chainpoly/error.hpp"
#include "chainpoly/real_roots.hpp"

namespace chainpoly {

IntPoly reverse(const IntPoly& p, int n) {
  if (n < p.degree()) {
    throw InvalidDegreeError("reverse: n = " + std::to_string(n) + " is below the degree " + std::to_string(p.degree()));
  }
  if (p.is_zero()) return {};
  std::vector<mpz_class> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) c[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(n - i)];
  return IntPoly(std::move(c));
}

IntPoly veronese(const IntPoly& p, int r) {
  if (r < 1) throw DomainError("veronese: r must be positive");
  std::vector<mpz_class> c;
  for (std::size_t i = 0; i < p.size(); i += static_cast<std::size_t>(r)) c.push_back(p[i]);
  return IntPoly(std::move(c));
}

SymmetricDecomposition symmetric_decomposition(const IntPoly& p, int n) {
  if (n < 0 || p.degree() > n) {
    throw InvalidDegreeError("symmetric decomposition: degree " + std::to_string(p.degree()) + " exceeds n = " + std::to_string(n));
  }
  // p_{n-i} - p_i = b_i - b_{i-1}, then a_i = p_i - b_{i-1}.
  const auto un = static_cast<std::size_t>(n);
  std::vector<mpz_class> b(un);
  mpz_class run = 0;
  for (std::size_t i = 0; i < un; ++i) {
    run += p[un - i] - p[i];
    b[i] = run;
  }
  std::vector<mpz_class> a(un + 1);
  for (std::size_t i = 0; i <= un; ++i) a[i] = p[i] - (i == 0 ? mpz_class(0) : b[i - 1]);
  return {n, IntPoly(std::move(a)), IntPoly(std::move(b))};
}

bool has_nonneg_realrooted_symdec(const IntPoly& p, int n) {
  auto d = symmetric_decomposition(p, n);
  return d.a.has_nonnegative_coeffs() && d.b.has_nonnegative_coeffs() && is_real_rooted(d.a) && is_real_rooted(d.b);
}

bool is_symmetric(const IntPoly& p, std::optional<int> n) {
  if (!n) throw MissingParameterError("is_symmetric needs the center parameter n");
  if (p.degree() > *n) return false;
  for (int i = 0; i <= *n; ++i)
    if (p[static_cast<std::size_t>(i)] != p[static_cast<std::size_t>(*n - i)]) return false;
  return true;
}

Unimodality unimodality(const IntPoly& p) {
  Unimodality u;
  const int d = p.degree();
  if (d < 0) {
    u.unimodal = true;
    return u;
  }
  // rise[k]: p_0 <= ... <= p_k; fall[k]: p_k >= ... >= p_d.
  std::vector<bool> rise(static_cast<std::size_t>(d) + 1), fall(static_cast<std::size_t>(d) + 1);
  rise[0] = true;
  for (int k = 1; k <= d; ++k) rise[k] = rise[k - 1] && p[k - 1] <= p[k];
  fall[d] = true;
  for (int k = d - 1; k >= 0; --k) fall[k] = fall[k + 1] && p[k] >= p[k + 1];
  for (int k = 0; k <= d; ++k)
    if (rise[k] && fall[k]) u.peaks.push_back(k);
  u.unimodal = !u.peaks.empty();
  return u;
}

bool is_unimodal(const IntPoly& p) { return unimodality(p).unimodal; }

bool is_log_concave(const IntPoly& p) {
  for (int i = 1; i < p.degree(); ++i)
    if (p[i] * p[i] < p[i - 1] * p[i + 1]) return false;
  return true;
}

std::optional<mpq_class> mode(const IntPoly& p) {
  if (!p.has_nonnegative_coeffs()) throw DomainError("mode needs nonnegative coefficients: " + to_string(p));
  if (p.is_zero()) return std::nullopt;
  mpz_class best = 0;
  for (const auto& c : p.coeffs())
    if (c > best) best = c;
  std::vector<int> at;
  for (int i = 0; i <= p.degree(); ++i)
    if (p[i] == best) at.push_back(i);
  if (at.size() == 1) return mpq_class(at[0]);
  if (at.size() == 2 && at[1] == at[0] + 1) return mpq_class(2 * at[0] + 1, 2);
  return std::nullopt;
}

}  // namespace chainpoly
