#include "chainpoly/poly.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "chainpoly/error.hpp"

namespace chainpoly {

namespace {

const mpz_class kZeroZ = 0;
const mpq_class kZeroQ = 0;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) {
      out.push_back(trim(text.substr(pos)));
      break;
    }
    out.push_back(trim(text.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return out;
}

bool is_integer_token(std::string_view tok) {
  if (!tok.empty() && (tok.front() == '-' || tok.front() == '+')) tok.remove_prefix(1);
  return !tok.empty() && std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

mpz_class parse_integer(std::string_view tok, std::string_view whole) {
  if (!is_integer_token(tok)) throw ParseError("bad coefficient '" + std::string(tok) + "' in '" + std::string(whole) + "'");
  std::string s(tok);
  if (s.front() == '+') s.erase(0, 1);
  return mpz_class(s);
}

}  // namespace

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  normalize();
}

IntPoly IntPoly::constant(const mpz_class& c) { return IntPoly(std::vector<mpz_class>{c}); }

IntPoly IntPoly::monomial(const mpz_class& c, std::size_t k) {
  std::vector<mpz_class> v(k + 1);
  v[k] = c;
  return IntPoly(std::move(v));
}

void IntPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpz_class& IntPoly::operator[](std::size_t i) const { return i < c_.size() ? c_[i] : kZeroZ; }

const mpz_class& IntPoly::leading() const { return c_.empty() ? kZeroZ : c_.back(); }

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) mpz_addmul(out[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
  }
  return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator*=(const IntPoly& o) { return *this = *this * o; }

IntPoly& IntPoly::operator*=(const mpz_class& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& v : c_) v *= s;
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

void IntPoly::add_scaled_shifted(const IntPoly& o, const mpz_class& s, std::size_t k) {
  if (o.is_zero() || s == 0) return;
  if (o.c_.size() + k > c_.size()) c_.resize(o.c_.size() + k);
  for (std::size_t i = 0; i < o.c_.size(); ++i) mpz_addmul(c_[i + k].get_mpz_t(), o.c_[i].get_mpz_t(), s.get_mpz_t());
  normalize();
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<mpz_class> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(d));
}

IntPoly IntPoly::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<mpz_class> v(k);
  v.insert(v.end(), c_.begin(), c_.end());
  return IntPoly(std::move(v));
}

IntPoly IntPoly::inflated(std::size_t k) const {
  if (k == 0) throw DomainError("inflation factor must be positive");
  if (is_zero()) return {};
  std::vector<mpz_class> v((c_.size() - 1) * k + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i * k] = c_[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::truncated(std::size_t len) const {
  if (len >= c_.size()) return *this;
  return IntPoly(std::vector<mpz_class>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(len)));
}

mpz_class IntPoly::eval(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

int IntPoly::sign_at(const mpz_class& num, const mpz_class& den) const {
  if (c_.empty()) return 0;
  // den^d * p(num/den) by homogeneous Horner.
  mpz_class acc = c_.back();
  mpz_class den_pow = 1;
  for (std::size_t i = c_.size() - 1; i-- > 0;) {
    acc *= num;
    den_pow *= den;
    mpz_addmul(acc.get_mpz_t(), c_[i].get_mpz_t(), den_pow.get_mpz_t());
  }
  return sgn(acc);
}

mpz_class IntPoly::value_at_one() const {
  mpz_class s = 0;
  for (const auto& v : c_) s += v;
  return s;
}

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& v : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  mpz_class g = content();
  if (g == 1) return *this;
  IntPoly r = *this;
  for (auto& v : r.c_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return r;
}

bool IntPoly::has_nonnegative_coeffs() const {
  return std::all_of(c_.begin(), c_.end(), [](const mpz_class& v) { return v >= 0; });
}

IntPoly pow(const IntPoly& p, unsigned e) {
  IntPoly result = IntPoly::constant(1);
  IntPoly base = p;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DomainError("pseudo-remainder by the zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<mpz_class> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const mpz_class& lb = bc.back();
  // One step per degree from deg a down to deg b, each multiplying by lb.
  for (std::size_t top = r.size() - 1;; --top) {
    mpz_class t = r[top];
    const std::size_t shift = top - db;
    for (std::size_t i = 0; i < top; ++i) r[i] *= lb;
    r[top] = 0;
    for (std::size_t i = 0; i < db; ++i) mpz_submul(r[i + shift].get_mpz_t(), t.get_mpz_t(), bc[i].get_mpz_t());
    if (top == db) break;
  }
  return IntPoly(std::move(r));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly A = a.primitive_part();
  IntPoly B = b.primitive_part();
  if (A.degree() < B.degree()) std::swap(A, B);
  while (!B.is_zero()) {
    IntPoly R = pseudo_remainder(A, B).primitive_part();
    A = std::move(B);
    B = std::move(R);
  }
  if (A.leading_sign() < 0) A = -A;
  return A;
}

IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw DomainError("polynomial division is not exact");
  std::vector<mpz_class> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<mpz_class> q(r.size() - db);
  for (std::size_t k = q.size(); k-- > 0;) {
    mpz_class& top = r[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), bc.back().get_mpz_t())) throw DomainError("polynomial division is not exact");
    mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), bc.back().get_mpz_t());
    for (std::size_t i = 0; i <= db; ++i) mpz_submul(r[k + i].get_mpz_t(), q[k].get_mpz_t(), bc[i].get_mpz_t());
  }
  for (std::size_t i = 0; i < db; ++i)
    if (r[i] != 0) throw DomainError("polynomial division is not exact");
  return IntPoly(std::move(q));
}

bool divides(const IntPoly& b, const IntPoly& a) {
  if (b.is_zero()) return a.is_zero();
  return pseudo_remainder(a, b).is_zero();
}

IntPoly squarefree_part(const IntPoly& p) {
  if (p.degree() <= 0) return p.is_zero() ? IntPoly{} : IntPoly::constant(1);
  IntPoly pp = p.primitive_part();
  IntPoly g = gcd(pp, pp.derivative());
  IntPoly s = divide_exact(pp, g).primitive_part();
  if (s.leading_sign() < 0) s = -s;
  return s;
}

std::string to_string(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += p[i].get_str();
  }
  return s;
}

std::string to_pretty_string(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const mpz_class& c = p[i];
    if (c == 0) continue;
    mpz_class a = abs(c);
    if (s.empty()) {
      if (c < 0) s += '-';
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (i == 0 || a != 1) s += a.get_str();
    if (i >= 1) s += 'x';
    if (i >= 2) s += '^' + std::to_string(i);
  }
  return s;
}

IntPoly parse_int_poly(std::string_view text) {
  std::string_view t = trim(text);
  if (t.empty()) throw ParseError("empty polynomial");
  std::vector<mpz_class> c;
  for (auto tok : split_commas(t)) c.push_back(parse_integer(tok, t));
  return IntPoly(std::move(c));
}

// ---------------------------------------------------------------- RatPoly

RatPoly::RatPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
  for (auto& v : c_) v.canonicalize();
  normalize();
}

RatPoly::RatPoly(const IntPoly& p) {
  c_.reserve(p.size());
  for (const auto& v : p.coeffs()) c_.emplace_back(v);
}

RatPoly::RatPoly(std::initializer_list<mpq_class> coeffs) : RatPoly(std::vector<mpq_class>(coeffs)) {}

RatPoly RatPoly::constant(const mpq_class& c) { return RatPoly(std::vector<mpq_class>{c}); }

void RatPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpq_class& RatPoly::operator[](std::size_t i) const { return i < c_.size() ? c_[i] : kZeroQ; }
const mpq_class& RatPoly::leading() const { return c_.empty() ? kZeroQ : c_.back(); }

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

RatPoly& RatPoly::operator*=(const mpq_class& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& v : c_) v *= s;
  return *this;
}

RatPoly RatPoly::operator-() const {
  RatPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return RatPoly(std::move(out));
}

mpq_class RatPoly::eval(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly RatPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<mpq_class> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return RatPoly(std::move(d));
}

bool RatPoly::is_integral() const {
  return std::all_of(c_.begin(), c_.end(), [](const mpq_class& v) { return v.get_den() == 1; });
}

IntPoly RatPoly::to_int_poly() const {
  std::vector<mpz_class> out;
  out.reserve(c_.size());
  for (const auto& v : c_) {
    if (v.get_den() != 1) throw DomainError("rational polynomial has a non-integral coefficient " + v.get_str());
    out.push_back(v.get_num());
  }
  return IntPoly(std::move(out));
}

void divmod(const RatPoly& a, const RatPoly& b, RatPoly& quotient, RatPoly& remainder) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  std::vector<mpq_class> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  if (r.size() < bc.size()) {
    quotient = RatPoly{};
    remainder = a;
    return;
  }
  std::vector<mpq_class> q(r.size() - db);
  for (std::size_t k = q.size(); k-- > 0;) {
    q[k] = r[k + db] / bc.back();
    if (q[k] == 0) continue;
    for (std::size_t i = 0; i <= db; ++i) r[k + i] -= q[k] * bc[i];
  }
  r.resize(db);
  quotient = RatPoly(std::move(q));
  remainder = RatPoly(std::move(r));
}

RatPoly divide_exact(const RatPoly& a, const RatPoly& b) {
  RatPoly q, r;
  divmod(a, b, q, r);
  if (!r.is_zero()) throw DomainError("polynomial division is not exact");
  return q;
}

std::string to_string(const RatPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i <= static_cast<std::size_t>(p.degree()); ++i) {
    if (i) s += ',';
    s += p[i].get_str();
  }
  return s;
}

RatPoly parse_rat_poly(std::string_view text) {
  std::string_view t = trim(text);
  if (t.empty()) throw ParseError("empty polynomial");
  std::vector<mpq_class> c;
  for (auto tok : split_commas(t)) {
    std::size_t slash = tok.find('/');
    if (slash == std::string_view::npos) {
      c.emplace_back(parse_integer(tok, t));
      continue;
    }
    mpz_class num = parse_integer(trim(tok.substr(0, slash)), t);
    std::string_view den_tok = trim(tok.substr(slash + 1));
    if (!den_tok.empty() && (den_tok.front() == '-' || den_tok.front() == '+'))
      throw ParseError("denominator must be an unsigned integer in '" + std::string(t) + "'");
    mpz_class den = parse_integer(den_tok, t);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(t) + "'");
    c.emplace_back(num, den);
  }
  return RatPoly(std::move(c));
}

}  // namespace chainpoly
