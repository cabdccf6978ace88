#include "chainpoly/real_roots.hpp"

#include <Eigen/Core>
#include <unsupported/Eigen/Polynomials>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <optional>
#include <utility>

#include "chainpoly/error.hpp"

namespace chainpoly {

namespace {

std::atomic<long> g_fast_hits{0};
std::atomic<long> g_exact_runs{0};

int sign_variations(const std::vector<int>& signs) {
  int v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

// ------------------------------------------------------------- SturmChain

SturmChain::SturmChain(const IntPoly& p) {
  if (p.is_zero()) return;
  chain_.push_back(p.primitive_part());
  IntPoly d = p.derivative().primitive_part();
  if (d.is_zero()) return;
  chain_.push_back(std::move(d));
  while (true) {
    const IntPoly& a = chain_[chain_.size() - 2];
    const IntPoly& b = chain_.back();
    IntPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    // prem = lc(b)^(delta+1) * rem; the classical member is -rem.
    const int delta = a.degree() - b.degree();
    const bool multiplier_negative = b.leading_sign() < 0 && ((delta + 1) % 2 == 1);
    r = r.primitive_part();
    if (!multiplier_negative) r = -r;
    chain_.push_back(std::move(r));
  }
}

int SturmChain::variations_at(const mpq_class& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& f : chain_) signs.push_back(f.sign_at(x));
  return sign_variations(signs);
}

int SturmChain::variations_at_neg_infinity() const {
  std::vector<int> signs;
  for (const auto& f : chain_) signs.push_back(f.degree() % 2 == 0 ? f.leading_sign() : -f.leading_sign());
  return sign_variations(signs);
}

int SturmChain::variations_at_pos_infinity() const {
  std::vector<int> signs;
  for (const auto& f : chain_) signs.push_back(f.leading_sign());
  return sign_variations(signs);
}

int SturmChain::count_roots(const mpq_class& a, const mpq_class& b) const {
  return variations_at(a) - variations_at(b);
}

int SturmChain::squarefree_degree() const {
  if (chain_.empty()) return -1;
  return chain_.front().degree() - chain_.back().degree();
}

RealRootCertificate certify_real_rooted(const IntPoly& p) {
  RealRootCertificate cert;
  cert.degree = p.degree();
  if (p.is_zero()) {
    cert.real_rooted = true;
    return cert;
  }
  SturmChain chain(p);
  cert.squarefree_degree = chain.squarefree_degree();
  cert.variations_neg_infinity = chain.variations_at_neg_infinity();
  cert.variations_pos_infinity = chain.variations_at_pos_infinity();
  cert.distinct_real_roots = cert.variations_neg_infinity - cert.variations_pos_infinity;
  cert.real_rooted = cert.distinct_real_roots == cert.squarefree_degree;
  return cert;
}

bool is_real_rooted(const IntPoly& p) { return certify_real_rooted(p).real_rooted; }

// -------------------------------------------------------------- isolation

mpz_class root_bound(const IntPoly& p) {
  if (p.degree() <= 0) return 1;
  mpz_class lead = abs(p.leading());
  mpz_class m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), mpz_class(abs(p[i])).get_mpz_t(), lead.get_mpz_t());
    if (q > m) m = q;
  }
  mpz_class bound = 1;
  while (bound <= m + 1) bound *= 2;
  return bound;
}

namespace {

// A split point of (lo, hi) that is not a root of f.
mpq_class nonroot_split(const IntPoly& f, const mpq_class& lo, const mpq_class& hi) {
  mpq_class width = hi - lo;
  mpq_class m = lo + width / 2;
  for (int k = 3; f.sign_at(m) == 0; ++k) {
    mpq_class step = width;
    mpz_class pow2 = 1;
    pow2 <<= k;
    step /= pow2;
    m = lo + width / 2 + step;
  }
  return m;
}

std::vector<RootInterval> isolate_squarefree(const IntPoly& f) {
  std::vector<RootInterval> out;
  if (f.degree() <= 0) return out;
  SturmChain chain(f);
  const mpz_class b = root_bound(f);
  struct Pending {
    mpq_class lo, hi;
    int count;
  };
  std::vector<Pending> stack;
  stack.push_back({mpq_class(-b), mpq_class(b), chain.distinct_real_roots()});
  while (!stack.empty()) {
    Pending cur = std::move(stack.back());
    stack.pop_back();
    if (cur.count == 0) continue;
    if (cur.count == 1) {
      out.push_back({cur.lo, cur.hi, 1});
      continue;
    }
    mpq_class m = nonroot_split(f, cur.lo, cur.hi);
    int left = chain.count_roots(cur.lo, m);
    stack.push_back({m, cur.hi, cur.count - left});
    stack.push_back({cur.lo, m, left});
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  return out;
}

// True iff the root isolated by iv is a root of the squarefree g whose
// roots are all roots of the polynomial iv was isolated for.
bool root_of(const IntPoly& g, const RootInterval& iv) {
  if (g.degree() <= 0) return false;
  if (iv.exact()) return g.sign_at(iv.lo) == 0;
  return g.sign_at(iv.lo) * g.sign_at(iv.hi) < 0;
}

bool separated(const RootInterval& a, const RootInterval& b) {
  if (a.exact() && b.exact()) return a.lo != b.lo;
  return a.hi <= b.lo || b.hi <= a.lo;
}

}  // namespace

void refine_root(const IntPoly& f, RootInterval& iv) {
  if (iv.exact()) return;
  mpq_class m = (iv.lo + iv.hi) / 2;
  int s = f.sign_at(m);
  if (s == 0) {
    iv.lo = m;
    iv.hi = m;
  } else if (s == f.sign_at(iv.lo)) {
    iv.lo = m;
  } else {
    iv.hi = m;
  }
}

std::vector<RootInterval> isolate_real_roots(const IntPoly& p) {
  if (p.degree() <= 0) return {};
  IntPoly f = squarefree_part(p);
  std::vector<RootInterval> roots = isolate_squarefree(f);
  // Multiplicity = number of iterated gcd(g, g') layers that still vanish.
  std::vector<IntPoly> layers;
  IntPoly g = gcd(p, p.derivative());
  while (g.degree() > 0) {
    layers.push_back(squarefree_part(g));
    g = gcd(g, g.derivative());
  }
  for (auto& r : roots) {
    r.multiplicity = 1;
    for (const auto& layer : layers) {
      if (!root_of(layer, r)) break;
      ++r.multiplicity;
    }
  }
  return roots;
}

// ----------------------------------------------------------- interlacing

namespace {

enum class Owner { P, Q };

// Exact dyadic rational equal to the finite long double v.
mpq_class exact_rational(long double v) {
  int exp = 0;
  long double frac = std::frexp(v, &exp);  // v = frac * 2^exp, |frac| in [0.5, 1)
  long double scaled = std::ldexp(frac, 64);
  // scaled is an integer with |scaled| < 2^64.
  bool neg = scaled < 0;
  unsigned long long mag = static_cast<unsigned long long>(neg ? -scaled : scaled);
  mpz_class num;
  mpz_import(num.get_mpz_t(), 1, 1, sizeof(mag), 0, 0, &mag);
  if (neg) num = -num;
  mpq_class q(num);
  const int shift = exp - 64;
  if (shift >= 0) {
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(shift));
  } else {
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-shift));
  }
  return q;
}

// Floating-point approximations of the roots, real parts only. Empty when
// the solver fails or produces non-finite values.
std::vector<long double> approximate_roots(const IntPoly& p) {
  const int d = p.degree();
  std::vector<long double> out;
  if (d <= 0) return out;
  std::vector<long double> c(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) c[static_cast<std::size_t>(i)] = static_cast<long double>(p[static_cast<std::size_t>(i)].get_d());
  if (d == 1) {
    out.push_back(-c[0] / c[1]);
  } else {
    Eigen::Matrix<long double, Eigen::Dynamic, 1> coeffs(d + 1);
    for (int i = 0; i <= d; ++i) coeffs(i) = c[static_cast<std::size_t>(i)];
    Eigen::PolynomialSolver<long double, Eigen::Dynamic> solver;
    solver.compute(coeffs);
    for (int i = 0; i < d; ++i) out.push_back(solver.roots()(i).real());
  }
  auto eval = [&](long double x, long double& fx, long double& dfx) {
    fx = 0;
    dfx = 0;
    for (int i = d; i >= 0; --i) {
      dfx = dfx * x + fx;
      fx = fx * x + c[static_cast<std::size_t>(i)];
    }
  };
  for (auto& x : out) {
    if (!std::isfinite(x)) return {};
    for (int it = 0; it < 3; ++it) {
      long double fx, dfx;
      eval(x, fx, dfx);
      if (dfx == 0) break;
      long double nx = x - fx / dfx;
      long double fnx, dfnx;
      eval(nx, fnx, dfnx);
      if (!std::isfinite(nx) || std::fabs(fnx) >= std::fabs(fx)) break;
      x = nx;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Checks that f changes sign exactly across the gaps labelled `self`.
bool verify_sign_pattern(const IntPoly& f, Owner self, const std::vector<Owner>& labels, const std::vector<mpq_class>& separators) {
  const int d = f.degree();
  int prev = d % 2 == 0 ? f.leading_sign() : -f.leading_sign();
  for (std::size_t j = 0; j < labels.size(); ++j) {
    int next = j < separators.size() ? f.sign_at(separators[j]) : f.leading_sign();
    if (next == 0) return false;
    const bool changes = next != prev;
    if (changes != (labels[j] == self)) return false;
    prev = next;
  }
  return true;
}

// Descending labels must read Q, P, Q, P, ... and account for all roots.
bool alternates_from_top(const std::vector<Owner>& ascending) {
  Owner expect = Owner::Q;
  for (auto it = ascending.rbegin(); it != ascending.rend(); ++it) {
    if (*it != expect) return false;
    expect = expect == Owner::Q ? Owner::P : Owner::Q;
  }
  return true;
}

// Floating-point guided separation, verified exactly. Succeeds only when
// every root of p and q is real, simple and distinct from all others; the
// sign checks then prove the isolation.
std::optional<bool> interlaces_fast(const IntPoly& p, const IntPoly& q) {
  const int dp = p.degree();
  const int dq = q.degree();
  if (dp < 1 || dq < 1 || !(dq == dp || dq == dp + 1)) return std::nullopt;
  auto rp = approximate_roots(p);
  auto rq = approximate_roots(q);
  if (rp.size() != static_cast<std::size_t>(dp) || rq.size() != static_cast<std::size_t>(dq)) return std::nullopt;
  std::vector<std::pair<long double, Owner>> merged;
  merged.reserve(rp.size() + rq.size());
  for (auto x : rp) merged.emplace_back(x, Owner::P);
  for (auto x : rq) merged.emplace_back(x, Owner::Q);
  std::sort(merged.begin(), merged.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Owner> labels;
  std::vector<mpq_class> separators;
  for (std::size_t i = 0; i < merged.size(); ++i) {
    labels.push_back(merged[i].second);
    if (i + 1 == merged.size()) break;
    long double a = merged[i].first;
    long double b = merged[i + 1].first;
    long double mid = a + (b - a) / 2;
    if (!(a < mid && mid < b)) return std::nullopt;
    separators.push_back(exact_rational(mid));
  }
  if (!verify_sign_pattern(p, Owner::P, labels, separators)) return std::nullopt;
  if (!verify_sign_pattern(q, Owner::Q, labels, separators)) return std::nullopt;
  return alternates_from_top(labels);
}

bool interlaces_exact(const IntPoly& p, const IntPoly& q) {
  if (!is_real_rooted(p)) throw NotRealRootedError("interlacing undefined: " + to_string(p) + " is not real-rooted");
  if (!is_real_rooted(q)) throw NotRealRootedError("interlacing undefined: " + to_string(q) + " is not real-rooted");
  const int dp = p.degree();
  const int dq = q.degree();
  if (!(dq == dp || dq == dp + 1)) return false;
  // Common roots pair off (one from each side at the same point) and never
  // break the weak alternation, so only the coprime parts matter.
  const IntPoly g = gcd(p, q);
  const IntPoly p1 = divide_exact(p.primitive_part(), g);
  const IntPoly q1 = divide_exact(q.primitive_part(), g);
  // Coprime parts must alternate strictly, which rules out repeated roots.
  if (p1.degree() > 0 && squarefree_part(p1).degree() != p1.degree()) return false;
  if (q1.degree() > 0 && squarefree_part(q1).degree() != q1.degree()) return false;
  std::vector<RootInterval> ip = isolate_squarefree(p1.leading_sign() < 0 ? -p1 : p1);
  std::vector<RootInterval> iq = isolate_squarefree(q1.leading_sign() < 0 ? -q1 : q1);
  for (auto& a : ip) {
    for (auto& b : iq) {
      while (!separated(a, b)) {
        refine_root(p1, a);
        refine_root(q1, b);
      }
    }
  }
  std::vector<std::pair<const RootInterval*, Owner>> merged;
  for (const auto& a : ip) merged.emplace_back(&a, Owner::P);
  for (const auto& b : iq) merged.emplace_back(&b, Owner::Q);
  // An exact root at c lies below an open interval (c, d).
  std::sort(merged.begin(), merged.end(), [](const auto& x, const auto& y) {
    if (x.first->lo != y.first->lo) return x.first->lo < y.first->lo;
    return x.first->exact() && !y.first->exact();
  });
  std::vector<Owner> labels;
  for (const auto& m : merged) labels.push_back(m.second);
  return alternates_from_top(labels);
}

}  // namespace

bool interlaces(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) {
    const IntPoly& other = p.is_zero() ? q : p;
    if (!is_real_rooted(other)) throw NotRealRootedError("interlacing undefined: " + to_string(other) + " is not real-rooted");
    return true;
  }
  if (auto fast = interlaces_fast(p, q)) {
    g_fast_hits.fetch_add(1, std::memory_order_relaxed);
    return *fast;
  }
  g_exact_runs.fetch_add(1, std::memory_order_relaxed);
  return interlaces_exact(p, q);
}

bool is_interlacing_sequence(std::span<const IntPoly> ps) {
  for (std::size_t j = 0; j < ps.size(); ++j) {
    if (!is_real_rooted(ps[j])) throw NotRealRootedError("interlacing undefined: " + to_string(ps[j]) + " is not real-rooted");
  }
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j)
      if (!interlaces(ps[i], ps[j])) return false;
  return true;
}

InterlaceStats interlace_stats() { return {g_fast_hits.load(), g_exact_runs.load()}; }

void reset_interlace_stats() {
  g_fast_hits = 0;
  g_exact_runs = 0;
}

}  // namespace chainpoly
