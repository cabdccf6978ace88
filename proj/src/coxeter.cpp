#include "chainpoly/coxeter.hpp"

#include <algorithm>
#include <cstdlib>

#include "chainpoly/descent.hpp"
#include "chainpoly/error.hpp"
#include "chainpoly/real_roots.hpp"

namespace chainpoly {

// ------------------------------------------------------------ types

int CoxeterType::rank() const {
  switch (family) {
    case CoxeterFamily::A:
    case CoxeterFamily::B:
      if (param < 1) throw DomainError("type " + std::string(family == CoxeterFamily::A ? "A" : "B") + " needs n >= 1");
      return param;
    case CoxeterFamily::D:
      if (param < 2) throw DomainError("type D needs n >= 2");
      return param;
    case CoxeterFamily::I2:
      if (param < 3) throw DomainError("type I2(m) needs m >= 3");
      return 2;
    case CoxeterFamily::H3: return 3;
    case CoxeterFamily::H4: return 4;
    case CoxeterFamily::F4: return 4;
    case CoxeterFamily::E6: return 6;
    case CoxeterFamily::E7: return 7;
    case CoxeterFamily::E8: return 8;
  }
  throw DomainError("unknown Coxeter family");
}

std::string CoxeterType::to_string() const {
  switch (family) {
    case CoxeterFamily::A: return "A" + std::to_string(param);
    case CoxeterFamily::B: return "B" + std::to_string(param);
    case CoxeterFamily::D: return "D" + std::to_string(param);
    case CoxeterFamily::I2: return "I2:" + std::to_string(param);
    case CoxeterFamily::H3: return "H3";
    case CoxeterFamily::H4: return "H4";
    case CoxeterFamily::F4: return "F4";
    case CoxeterFamily::E6: return "E6";
    case CoxeterFamily::E7: return "E7";
    case CoxeterFamily::E8: return "E8";
  }
  return "?";
}

CoxeterType CoxeterType::parse(std::string_view text) {
  const std::string s(text);
  static const std::pair<const char*, CoxeterFamily> fixed[] = {
      {"H3", CoxeterFamily::H3}, {"H4", CoxeterFamily::H4}, {"F4", CoxeterFamily::F4},
      {"E6", CoxeterFamily::E6}, {"E7", CoxeterFamily::E7}, {"E8", CoxeterFamily::E8}};
  for (const auto& [name, fam] : fixed)
    if (s == name) return {fam, 0};
  auto number = [&](std::size_t from) {
    if (from >= s.size() || s.find_first_not_of("0123456789", from) != std::string::npos || s.size() - from > 6) {
      throw ParseError("invalid Coxeter type \"" + s + "\"");
    }
    return std::stoi(s.substr(from));
  };
  CoxeterType t;
  if (s.rfind("I2:", 0) == 0) {
    t = {CoxeterFamily::I2, number(3)};
  } else if (!s.empty() && (s[0] == 'A' || s[0] == 'B' || s[0] == 'D')) {
    t = {s[0] == 'A' ? CoxeterFamily::A : s[0] == 'B' ? CoxeterFamily::B : CoxeterFamily::D, number(1)};
  } else {
    throw ParseError("invalid Coxeter type \"" + s + "\"");
  }
  try {
    t.rank();
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  return t;
}

std::vector<CoxeterType> exceptional_types() {
  std::vector<CoxeterType> out;
  for (int m = 3; m <= 10; ++m) out.push_back(CoxeterType::i2(m));
  for (auto f : {CoxeterFamily::H3, CoxeterFamily::H4, CoxeterFamily::F4, CoxeterFamily::E6, CoxeterFamily::E7, CoxeterFamily::E8})
    out.push_back({f, 0});
  return out;
}

// ------------------------------------------------------------ signed permutations

int SignedPermutation::apply(int i) const {
  const int v = images[static_cast<std::size_t>(std::abs(i)) - 1];
  return i < 0 ? -v : v;
}

std::uint64_t SignedPermutation::key() const {
  std::uint64_t k = 0;
  for (int v : images) k = (k << 5) | static_cast<std::uint64_t>(v + 16);
  return k;
}

SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b) {
  SignedPermutation out;
  out.images.resize(b.images.size());
  for (std::size_t i = 0; i < b.images.size(); ++i) out.images[i] = a.apply(b.images[i]);
  return out;
}

SignedPermutation inverse(const SignedPermutation& a) {
  SignedPermutation out;
  out.images.resize(a.images.size());
  for (std::size_t i = 0; i < a.images.size(); ++i) {
    const int v = a.images[i];
    out.images[static_cast<std::size_t>(std::abs(v)) - 1] = v < 0 ? -static_cast<int>(i + 1) : static_cast<int>(i + 1);
  }
  return out;
}

SignedPermutation identity_permutation(int n) {
  SignedPermutation e;
  for (int i = 1; i <= n; ++i) e.images.push_back(i);
  return e;
}

std::string to_string(const SignedPermutation& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.images.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w.images[i]);
  }
  return s + "]";
}

// ------------------------------------------------------------ groups

namespace {

constexpr int kMaxDegree = 12;

// i <-> j (1-based), optionally with both signs flipped: i -> -j, j -> -i.
SignedPermutation transposition(int n, int i, int j, bool negated) {
  SignedPermutation t = identity_permutation(n);
  t.images[static_cast<std::size_t>(i) - 1] = negated ? -j : j;
  t.images[static_cast<std::size_t>(j) - 1] = negated ? -i : i;
  return t;
}

SignedPermutation sign_flip(int n, int i) {
  SignedPermutation t = identity_permutation(n);
  t.images[static_cast<std::size_t>(i) - 1] = -i;
  return t;
}

std::uint64_t group_order(CoxeterFamily f, int n) {
  std::uint64_t order = 1;
  for (int i = 2; i <= n; ++i) order *= static_cast<std::uint64_t>(i);
  if (f == CoxeterFamily::B) order <<= n;
  if (f == CoxeterFamily::D) order <<= (n - 1);
  return order;
}

void check_order(CoxeterFamily f, int n, const GroupCaps& caps) {
  if (n > kMaxDegree || group_order(f, n) > caps.max_order) {
    throw ResourceError("group of degree " + std::to_string(n) + " exceeds the order cap " + std::to_string(caps.max_order));
  }
}

}  // namespace

ReflectionGroup ReflectionGroup::symmetric_group(int n, std::optional<SignedPermutation> coxeter, const GroupCaps& caps) {
  if (n < 2) throw DomainError("symmetric group needs n >= 2");
  check_order(CoxeterFamily::A, n, caps);
  ReflectionGroup g;
  g.type_ = CoxeterType::a(n - 1);
  g.degree_ = n;
  std::vector<SignedPermutation> refl;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) refl.push_back(transposition(n, i, j, false));
  SignedPermutation gamma;
  if (coxeter) {
    gamma = *coxeter;
    if (gamma.degree() != n) throw DomainError("Coxeter element has the wrong degree");
  } else {
    for (int i = 2; i <= n; ++i) gamma.images.push_back(i);
    gamma.images.push_back(1);
  }
  g.finish(refl, gamma);
  return g;
}

ReflectionGroup ReflectionGroup::build(CoxeterType t, const GroupCaps& caps) {
  if (t.family == CoxeterFamily::A) return symmetric_group(t.rank() + 1, std::nullopt, caps);
  if (t.family != CoxeterFamily::B && t.family != CoxeterFamily::D) {
    throw DomainError("no concrete model for type " + t.to_string());
  }
  const int n = t.rank();
  check_order(t.family, n, caps);
  ReflectionGroup g;
  g.type_ = t;
  g.degree_ = n;
  std::vector<SignedPermutation> refl;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      refl.push_back(transposition(n, i, j, false));
      refl.push_back(transposition(n, i, j, true));
    }
  SignedPermutation gamma;
  if (t.family == CoxeterFamily::B) {
    for (int i = 1; i <= n; ++i) refl.push_back(sign_flip(n, i));
    for (int i = 2; i <= n; ++i) gamma.images.push_back(i);
    gamma.images.push_back(-1);
  } else {
    // Simple reflections s_1' = (1 -2), s_i = (i i+1); bipartite product
    // with s_1' on the side of s_1.
    SignedPermutation odd = transposition(n, 1, 2, true);
    SignedPermutation even = identity_permutation(n);
    for (int i = 1; i < n; ++i) {
      if (i % 2) {
        odd = compose(odd, transposition(n, i, i + 1, false));
      } else {
        even = compose(even, transposition(n, i, i + 1, false));
      }
    }
    gamma = compose(odd, even);
  }
  g.finish(refl, gamma);
  return g;
}

void ReflectionGroup::finish(const std::vector<SignedPermutation>& reflections, const SignedPermutation& coxeter) {
  // Breadth-first search on the Cayley graph generated by the reflections.
  elements_.push_back(identity_permutation(degree_));
  index_.emplace(elements_[0].key(), 0);
  length_.push_back(0);
  for (std::size_t head = 0; head < elements_.size(); ++head) {
    for (const auto& t : reflections) {
      SignedPermutation w = compose(elements_[head], t);
      if (index_.emplace(w.key(), static_cast<int>(elements_.size())).second) {
        elements_.push_back(std::move(w));
        length_.push_back(length_[head] + 1);
      }
    }
  }
  for (const auto& t : reflections) reflections_.push_back(index_of(t));
  coxeter_ = index_of(coxeter);
  if (abs_length(coxeter_) != type_.rank()) {
    throw DomainError("element " + to_string(coxeter) + " has reflection length " + std::to_string(abs_length(coxeter_)) + ", not the rank");
  }
}

int ReflectionGroup::index_of(const SignedPermutation& w) const {
  auto it = index_.find(w.key());
  if (it == index_.end() || w.degree() != degree_) throw DomainError(to_string(w) + " is not an element of the group");
  return it->second;
}

int ReflectionGroup::multiply(int a, int b) const {
  return index_of(compose(elements_[static_cast<std::size_t>(a)], elements_[static_cast<std::size_t>(b)]));
}

int ReflectionGroup::inverse_of(int a) const { return index_of(inverse(elements_[static_cast<std::size_t>(a)])); }

bool ReflectionGroup::absolute_le(int a, int b) const {
  return abs_length(a) + abs_length(multiply(inverse_of(a), b)) == abs_length(b);
}

// ------------------------------------------------------------ NC lattices

std::vector<int> nc_elements(const ReflectionGroup& g) {
  std::vector<int> out;
  const int gamma = g.coxeter_element();
  for (int a = 0; a < static_cast<int>(g.order()); ++a)
    if (g.absolute_le(a, gamma)) out.push_back(a);
  return out;
}

GradedBoundedPoset nc_lattice(const ReflectionGroup& g) {
  const std::vector<int> members = nc_elements(g);
  std::unordered_map<int, int> pos;
  for (std::size_t i = 0; i < members.size(); ++i) pos.emplace(members[i], static_cast<int>(i));
  std::vector<std::pair<int, int>> covers;
  std::vector<std::string> labels;
  std::vector<int> ranks;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const int a = members[i];
    labels.push_back(to_string(g.elements()[static_cast<std::size_t>(a)]));
    ranks.push_back(g.abs_length(a));
    for (int t : g.reflections()) {
      const int b = g.multiply(a, t);
      auto it = pos.find(b);
      if (it != pos.end() && g.abs_length(b) == g.abs_length(a) + 1) covers.emplace_back(static_cast<int>(i), it->second);
    }
  }
  Poset p = Poset::trusted(static_cast<int>(members.size()), covers, std::move(labels));
  GradedBoundedPoset out(std::move(p), pos.at(g.identity()), std::move(ranks));
  const auto& levels = out.levels();
  for (std::size_t i = 0; i < levels.size(); ++i)
    if (levels[i].size() != levels[levels.size() - 1 - i].size()) throw InternalConsistencyError("NC lattice levels are not rank-symmetric");
  return out;
}

// ------------------------------------------------------------ formulas

namespace {

IntPoly exceptional_h(CoxeterFamily f) {
  switch (f) {
    case CoxeterFamily::H3: return IntPoly{1, 28, 21};
    case CoxeterFamily::H4: return IntPoly{1, 275, 842, 232};
    case CoxeterFamily::F4: return IntPoly{1, 100, 265, 66};
    case CoxeterFamily::E6: return IntPoly{1, 826, 10778, 21308, 8141, 418};
    case CoxeterFamily::E7: return IntPoly{1, 4152, 110958, 446776, 412764, 85800, 2431};
    case CoxeterFamily::E8: return IntPoly{1, 25071, 1295238, 9523785, 17304775, 8733249, 1069289, 17342};
    default: break;
  }
  throw DomainError("no stored data for this type");
}

mpz_class binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

template <typename F>
void compositions_from(int remaining, int parts_left, std::vector<int>& parts, F& f) {
  if (parts_left == 1) {
    parts.push_back(remaining);
    f(static_cast<const std::vector<int>&>(parts));
    parts.pop_back();
    return;
  }
  for (int first = 1; first <= remaining - (parts_left - 1); ++first) {
    parts.push_back(first);
    compositions_from(remaining - first, parts_left - 1, parts, f);
    parts.pop_back();
  }
}

// Calls f(parts) for every composition of n into k positive parts.
template <typename F>
void for_each_composition(int n, int k, F&& f) {
  if (k <= 0 || n < k) return;
  std::vector<int> parts;
  compositions_from(n, k, parts, f);
}

IntPoly geometric(int r) {
  std::vector<mpz_class> c(static_cast<std::size_t>(r), 1);
  return IntPoly(std::move(c));
}

}  // namespace

IntPoly nc_h_formula(CoxeterType t) {
  const int rank = t.rank();
  switch (t.family) {
    case CoxeterFamily::A: {
      const int n = rank + 1;
      IntPoly e = e_nr(n - 1, n);
      for (const auto& c : e.coeffs())
        if (c % n != 0) throw InternalConsistencyError("type A word count not divisible by n");
      std::vector<mpz_class> c(e.coeffs());
      for (auto& v : c) v /= n;
      return IntPoly(std::move(c));
    }
    case CoxeterFamily::B: return e_nr(rank, rank);
    case CoxeterFamily::D: return d_word_enumerator(rank);
    case CoxeterFamily::I2: return IntPoly{1, t.param - 1};
    default: return exceptional_h(t.family);
  }
}

IntPoly nc_chain_polynomial(CoxeterType t) {
  const int d = t.rank() - 1;
  const IntPoly h = nc_h_formula(t);
  const IntPoly one_plus_x{1, 1};
  IntPoly f;
  for (int i = 0; i <= h.degree(); ++i) f += (h[static_cast<std::size_t>(i)] * pow(one_plus_x, static_cast<unsigned>(d - i))).shifted(static_cast<std::size_t>(i));
  return pow(one_plus_x, 2) * f;
}

mpz_class flag_f_nc_d(int n, int k) {
  if (n < 3) throw DomainError("flag_f_nc_d needs n >= 3");
  if (k < 0 || k > n - 1) throw DomainError("flag_f_nc_d needs 0 <= k <= n-1");
  mpz_class first = 0, second = 0;
  for_each_composition(n, k + 1, [&](const std::vector<int>& a) {
    mpz_class prod = 1;
    for (int v : a) prod *= binomial(n - 1, v);
    first += prod;
    for (std::size_t i = 0; i < a.size(); ++i) {
      mpz_class term = binomial(n - 2, a[i] - 2);
      for (std::size_t j = 0; j < a.size(); ++j)
        if (j != i) term *= binomial(n - 1, a[j]);
      second += term;
    }
  });
  return 2 * first + second;
}

mpz_class flag_f_nc_d_simplified(int n, int k) {
  if (n < 3) throw DomainError("flag_f_nc_d needs n >= 3");
  if (k < 0 || k > n - 1) throw DomainError("flag_f_nc_d needs 0 <= k <= n-1");
  mpz_class first = 0, second = 0;
  for_each_composition(n, k + 1, [&](const std::vector<int>& a) {
    mpz_class prod = 1;
    for (int v : a) prod *= binomial(n - 1, v);
    first += prod;
  });
  for_each_composition(n - 1, k + 1, [&](const std::vector<int>& a) {
    mpz_class prod = 1;
    for (int v : a) prod *= binomial(n - 1, v);
    second += prod;
  });
  return 2 * first + second;
}

NcSymdecReport nc_symdec_report(CoxeterType t) {
  NcSymdecReport r;
  r.type = t;
  r.rank = t.rank();
  r.h = nc_h_formula(t);
  r.chain = nc_chain_polynomial(t);
  r.h_real_rooted = is_real_rooted(r.h);
  r.chain_real_rooted = is_real_rooted(r.chain);
  r.symdec = symmetric_decomposition(r.h, r.rank - 1);
  r.symdec_nonneg_real_rooted = has_nonneg_realrooted_symdec(r.h, r.rank - 1);
  Unimodality u = unimodality(r.h);
  r.peaks = u.peaks;
  r.peak_at_half_rank = u.unimodal && std::find(u.peaks.begin(), u.peaks.end(), r.rank / 2) != u.peaks.end();
  const IntPoly x = IntPoly::x();
  const IntPoly rev = reverse(r.h, r.rank);
  switch (t.family) {
    case CoxeterFamily::A: {
      const int n = r.rank + 1;
      r.veronese_identity = rev * mpz_class(n) == veronese(x * pow(geometric(n), static_cast<unsigned>(n)), n);
      break;
    }
    case CoxeterFamily::B:
      r.veronese_identity = rev == veronese(x * pow(geometric(r.rank), static_cast<unsigned>(r.rank + 1)), r.rank);
      break;
    case CoxeterFamily::D:
      r.veronese_identity = rev == veronese(IntPoly{0, 1, 1} * pow(geometric(r.rank - 1), static_cast<unsigned>(r.rank + 1)), r.rank - 1);
      break;
    default: break;
  }
  return r;
}

}  // namespace chainpoly
