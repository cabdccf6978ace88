#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace chainpoly {

/// Dense polynomial with arbitrary-precision integer coefficients.
/// coeffs()[i] is the coefficient of x^i. The zero polynomial has no
/// coefficients; otherwise the last coefficient is nonzero.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const mpz_class& c);
  static IntPoly monomial(const mpz_class& c, std::size_t k);
  static IntPoly x() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  /// Coefficient of x^i; zero beyond the degree.
  const mpz_class& operator[](std::size_t i) const;
  const mpz_class& leading() const;
  int leading_sign() const { return is_zero() ? 0 : sgn(c_.back()); }

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);
  IntPoly& operator*=(const mpz_class& s);
  IntPoly operator-() const;

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const mpz_class& s) { return a *= s; }
  friend IntPoly operator*(const mpz_class& s, IntPoly a) { return a *= s; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  /// Adds s * x^k * o in place.
  void add_scaled_shifted(const IntPoly& o, const mpz_class& s, std::size_t k);

  IntPoly derivative() const;
  /// x^k * p(x)
  IntPoly shifted(std::size_t k) const;
  /// p(x^k)
  IntPoly inflated(std::size_t k) const;
  /// Truncation to the coefficients of x^0 .. x^{len-1}.
  IntPoly truncated(std::size_t len) const;

  mpz_class eval(const mpz_class& x) const;
  /// Sign of p at the rational num/den (den > 0), evaluated exactly.
  int sign_at(const mpz_class& num, const mpz_class& den) const;
  int sign_at(const mpq_class& x) const { return sign_at(x.get_num(), x.get_den()); }
  /// Sum of the coefficients.
  mpz_class value_at_one() const;

  /// Nonnegative gcd of the coefficients (0 for the zero polynomial).
  mpz_class content() const;
  /// p / content(p), leading coefficient sign preserved.
  IntPoly primitive_part() const;

  bool has_nonnegative_coeffs() const;

 private:
  void normalize();
  std::vector<mpz_class> c_;
};

IntPoly pow(const IntPoly& p, unsigned e);

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b. Requires b != 0.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// a / b when b divides a in Z[x]; throws DomainError otherwise.
IntPoly divide_exact(const IntPoly& a, const IntPoly& b);

/// True iff b divides a over Q[x].
bool divides(const IntPoly& b, const IntPoly& a);

/// p / gcd(p, p'), primitive with positive leading coefficient.
IntPoly squarefree_part(const IntPoly& p);

/// "1,28,21" for 1 + 28x + 21x^2; "0" for the zero polynomial.
std::string to_string(const IntPoly& p);
/// Human-readable form such as "1 + 28x + 21x^2".
std::string to_pretty_string(const IntPoly& p);
IntPoly parse_int_poly(std::string_view text);

/// Dense polynomial with exact rational coefficients, same canonical form
/// as IntPoly.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<mpq_class> coeffs);
  explicit RatPoly(const IntPoly& p);
  RatPoly(std::initializer_list<mpq_class> coeffs);

  static RatPoly constant(const mpq_class& c);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  const mpq_class& operator[](std::size_t i) const;
  const mpq_class& leading() const;

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const mpq_class& s);
  RatPoly operator-() const;
  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(RatPoly a, const mpq_class& s) { return a *= s; }
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

  mpq_class eval(const mpq_class& x) const;
  RatPoly derivative() const;

  bool is_integral() const;
  /// Throws DomainError when some coefficient is not an integer.
  IntPoly to_int_poly() const;

 private:
  void normalize();
  std::vector<mpq_class> c_;
};

/// Euclidean division over Q: a = q*b + r with deg r < deg b. Requires b != 0.
void divmod(const RatPoly& a, const RatPoly& b, RatPoly& quotient, RatPoly& remainder);
/// Exact quotient a / b; throws DomainError when the remainder is nonzero.
RatPoly divide_exact(const RatPoly& a, const RatPoly& b);

std::string to_string(const RatPoly& p);
RatPoly parse_rat_poly(std::string_view text);

}  // namespace chainpoly
