#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>

#include "chainpoly/error.hpp"
#include "chainpoly/poset.hpp"

namespace chainpoly {

namespace {

// Strict down-set of y, excluding elements of rank < min_rank when a rank
// function is supplied. Reuses caller-owned buffers.
class DownWalker {
 public:
  explicit DownWalker(const Poset& p) : p_(p), stamp_(static_cast<std::size_t>(p.size()), -1) {}

  template <typename Keep, typename Visit>
  void walk(int y, Keep keep, Visit visit) {
    queue_.clear();
    for (int z : p_.lower_covers(y))
      if (stamp_[static_cast<std::size_t>(z)] != y && keep(z)) {
        stamp_[static_cast<std::size_t>(z)] = y;
        queue_.push_back(z);
      }
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const int z = queue_[head];
      visit(z);
      for (int w : p_.lower_covers(z))
        if (stamp_[static_cast<std::size_t>(w)] != y && keep(w)) {
          stamp_[static_cast<std::size_t>(w)] = y;
          queue_.push_back(w);
        }
    }
  }

 private:
  const Poset& p_;
  std::vector<int> stamp_;
  std::vector<int> queue_;
};

std::vector<IntPoly> one_minus_x_powers(int n) {
  std::vector<IntPoly> out{IntPoly{1}};
  for (int i = 1; i <= n; ++i) out.push_back(out.back() * IntPoly{1, -1});
  return out;
}

}  // namespace

// ---------------------------------------------------------------- chains

IntPoly chain_polynomial(const Poset& p) {
  // c[y] = generating polynomial of the chains whose top element is y.
  std::vector<std::vector<mpz_class>> c(static_cast<std::size_t>(p.size()));
  std::vector<mpz_class> total{1};
  DownWalker walker(p);
  for (int y : p.topological_order()) {
    std::vector<mpz_class> acc{1};
    walker.walk(
        y, [](int) { return true; },
        [&](int z) {
          const auto& cz = c[static_cast<std::size_t>(z)];
          if (acc.size() < cz.size()) acc.resize(cz.size());
          for (std::size_t i = 0; i < cz.size(); ++i) acc[i] += cz[i];
        });
    auto& cy = c[static_cast<std::size_t>(y)];
    cy.assign(acc.size() + 1, 0);
    for (std::size_t i = 0; i < acc.size(); ++i) cy[i + 1] = acc[i];
    if (total.size() < cy.size()) total.resize(cy.size());
    for (std::size_t i = 0; i < cy.size(); ++i) total[i] += cy[i];
  }
  return IntPoly(std::move(total));
}

IntPoly h_from_f(const IntPoly& f, int n) {
  if (f.degree() > n) throw InvalidDegreeError("f-polynomial degree exceeds n = " + std::to_string(n));
  auto pw = one_minus_x_powers(n);
  IntPoly h;
  for (int i = 0; i <= f.degree(); ++i) h.add_scaled_shifted(pw[static_cast<std::size_t>(n - i)], f[static_cast<std::size_t>(i)], static_cast<std::size_t>(i));
  return h;
}

IntPoly order_h_polynomial(const Poset& p) {
  IntPoly f = chain_polynomial(p);
  return h_from_f(f, f.degree());
}

GradedBoundedPoset rank_selected(const GradedBoundedPoset& p, PositionSet t) {
  if (!t.is_subset_of(PositionSet::interval(p.rank()))) {
    throw DomainError("rank set " + t.to_string() + " is not a subset of [" + std::to_string(p.rank()) + "]");
  }
  const std::vector<int> sel = t.elements();
  std::vector<int> keep{p.bottom()};
  std::vector<int> new_rank{0};
  for (std::size_t i = 0; i < sel.size(); ++i)
    for (int y : p.levels()[static_cast<std::size_t>(sel[i])]) {
      keep.push_back(y);
      new_rank.push_back(static_cast<int>(i) + 1);
    }
  std::vector<int> index(static_cast<std::size_t>(p.size()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);

  std::vector<std::pair<int, int>> covers;
  DownWalker walker(p.poset());
  for (std::size_t i = 0; i < sel.size(); ++i) {
    const int lower = i == 0 ? 0 : sel[i - 1];
    for (int y : p.levels()[static_cast<std::size_t>(sel[i])]) {
      walker.walk(
          y, [&](int z) { return p.rank(z) >= lower; },
          [&](int z) {
            if (p.rank(z) == lower) covers.emplace_back(index[static_cast<std::size_t>(z)], index[static_cast<std::size_t>(y)]);
          });
    }
  }
  std::vector<std::string> labels;
  labels.reserve(keep.size());
  for (int x : keep) labels.push_back(p.poset().label(x));
  Poset q = Poset::trusted(static_cast<int>(keep.size()), covers, std::move(labels));
  GradedBoundedPoset out(std::move(q), 0, std::move(new_rank));
  std::vector<int> orig{p.original_ranks()[0]};
  for (int s : sel) orig.push_back(p.original_ranks()[static_cast<std::size_t>(s)]);
  out.set_original_ranks(std::move(orig));
  return out;
}

// ----------------------------------------------------------- flag vectors

namespace {

// Chains of P with rank set S, S ⊆ [n]. For every element y of rank k >= 1
// the census needs N(y, S) for S ⊆ [k-1]: the number of chains with rank
// set S ∪ {k} and top element y. Elements with equal rows share one stored
// row, so the census of a poset with many equivalent elements stays small.
// The row of y sums the rows of its down-set grouped by row id.
template <typename Count>
struct RowPool {
  std::vector<Count> data;
  std::vector<std::size_t> start;
  std::vector<int> rank;
  std::unordered_map<std::uint64_t, std::vector<int>> by_hash;

  const Count* row(int id) const { return data.data() + start[static_cast<std::size_t>(id)]; }

  // Id of the row equal to data[from, end), dropping the copy when the
  // row is already present.
  int intern(std::size_t from, int k) {
    const std::size_t len = data.size() - from;
    std::uint64_t h = static_cast<std::uint64_t>(k) * 0x9e3779b97f4a7c15ULL;
    for (std::size_t i = 0; i < len; ++i) h = (h ^ hash_of(data[from + i])) * 0x100000001b3ULL;
    auto& bucket = by_hash[h];
    for (int id : bucket)
      if (rank[static_cast<std::size_t>(id)] == k && std::equal(data.begin() + static_cast<std::ptrdiff_t>(from), data.end(), row(id))) {
        data.resize(from);
        return id;
      }
    const int id = static_cast<int>(start.size());
    start.push_back(from);
    rank.push_back(k);
    bucket.push_back(id);
    return id;
  }

  static std::uint64_t hash_of(std::uint64_t v) { return v; }
  static std::uint64_t hash_of(const mpz_class& v) { return mpz_get_ui(v.get_mpz_t()) ^ static_cast<std::uint64_t>(mpz_size(v.get_mpz_t())); }
};

// d += m * s; false on overflow.
bool add_mul(std::uint64_t& d, std::uint64_t s, std::uint64_t m) {
  std::uint64_t t;
  return !__builtin_mul_overflow(s, m, &t) && !__builtin_add_overflow(d, t, &d);
}
bool add_mul(mpz_class& d, const mpz_class& s, std::uint64_t m) {
  mpz_addmul_ui(d.get_mpz_t(), s.get_mpz_t(), m);
  return true;
}

template <typename Count>
bool run_census(const GradedBoundedPoset& p, const CensusLimits& limits, std::vector<Count>& alpha) {
  const int n = p.rank();
  RowPool<Count> pool;
  std::vector<int> row_of(static_cast<std::size_t>(p.size()), -1);
  std::vector<std::uint64_t> mult, tops;
  std::vector<int> touched;
  bool ok = true;
  DownWalker walker(p.poset());
  for (int k = 1; k <= n; ++k) {
    const std::size_t width = std::size_t{1} << (k - 1);
    for (int y : p.levels()[static_cast<std::size_t>(k)]) {
      touched.clear();
      walker.walk(
          y, [&](int z) { return p.rank(z) >= 1; },
          [&](int z) {
            const auto id = static_cast<std::size_t>(row_of[static_cast<std::size_t>(z)]);
            if (mult[id]++ == 0) touched.push_back(static_cast<int>(id));
          });
      const std::size_t from = pool.data.size();
      if (from + width > limits.max_entries) {
        throw ResourceError("chain census needs more than " + std::to_string(limits.max_entries) + " stored counts");
      }
      pool.data.resize(from + width, Count(0));
      pool.data[from] = Count(1);
      for (int id : touched) {
        const std::size_t len = std::size_t{1} << (pool.rank[static_cast<std::size_t>(id)] - 1);
        const Count* src = pool.row(id);
        Count* dst = pool.data.data() + from + len;
        const std::uint64_t m = mult[static_cast<std::size_t>(id)];
        for (std::size_t s = 0; s < len; ++s) ok &= add_mul(dst[s], src[s], m);
        mult[static_cast<std::size_t>(id)] = 0;
      }
      if (!ok) return false;
      const int id = pool.intern(from, k);
      row_of[static_cast<std::size_t>(y)] = id;
      if (static_cast<std::size_t>(id) == mult.size()) {
        mult.push_back(0);
        tops.push_back(0);
      }
      ++tops[static_cast<std::size_t>(id)];
    }
  }
  alpha.assign(std::size_t{1} << n, Count(0));
  alpha[0] = Count(1);
  for (std::size_t id = 0; id < tops.size(); ++id) {
    const std::size_t width = std::size_t{1} << (pool.rank[id] - 1);
    const Count* row = pool.row(static_cast<int>(id));
    Count* a = alpha.data() + width;
    for (std::size_t s = 0; s < width; ++s) ok &= add_mul(a[s], row[s], tops[id]);
  }
  return ok;
}

}  // namespace

FlagVectors flag_vectors(const GradedBoundedPoset& p, CensusLimits limits) {
  const int n = p.rank();
  if (n > 30) throw ResourceError("rank " + std::to_string(n) + " is too large for flag vectors");
  FlagVectors fv;
  fv.n = n;
  std::vector<std::uint64_t> a64;
  if (run_census<std::uint64_t>(p, limits, a64)) {
    fv.alpha.reserve(a64.size());
    for (auto v : a64) {
      mpz_class z;
      mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
      fv.alpha.push_back(std::move(z));
    }
  } else {
    run_census<mpz_class>(p, limits, fv.alpha);
  }
  fv.beta = beta_from_alpha(fv.alpha);
  return fv;
}

std::vector<mpz_class> beta_from_alpha(const std::vector<mpz_class>& alpha) {
  std::vector<mpz_class> b = alpha;
  for (std::size_t bit = 1; bit < b.size(); bit <<= 1)
    for (std::size_t m = 0; m < b.size(); ++m)
      if (m & bit) b[m] -= b[m ^ bit];
  return b;
}

std::vector<mpz_class> alpha_from_beta(const std::vector<mpz_class>& beta) {
  std::vector<mpz_class> a = beta;
  for (std::size_t bit = 1; bit < a.size(); bit <<= 1)
    for (std::size_t m = 0; m < a.size(); ++m)
      if (m & bit) a[m] += a[m ^ bit];
  return a;
}

namespace {

void check_rank_set(const FlagVectors& fv, PositionSet t) {
  if (!t.is_subset_of(PositionSet::interval(fv.n))) {
    throw DomainError("rank set " + t.to_string() + " is not a subset of [" + std::to_string(fv.n) + "]");
  }
}

}  // namespace

IntPoly rank_selected_h(const FlagVectors& fv, PositionSet t) {
  check_rank_set(fv, t);
  std::vector<mpz_class> c(static_cast<std::size_t>(t.size()) + 1);
  for_each_subset(t, [&](PositionSet s) { c[static_cast<std::size_t>(s.size())] += fv.beta_of(s); });
  return IntPoly(std::move(c));
}

IntPoly rank_selected_h(const GradedBoundedPoset& p, PositionSet t) { return rank_selected_h(flag_vectors(p), t); }

IntPoly rank_selected_f(const FlagVectors& fv, PositionSet t) {
  check_rank_set(fv, t);
  std::vector<mpz_class> c(static_cast<std::size_t>(t.size()) + 1);
  for_each_subset(t, [&](PositionSet s) { c[static_cast<std::size_t>(s.size())] += fv.alpha_of(s); });
  return IntPoly(std::move(c));
}

IntPoly rank_selected_h_from_alpha(const FlagVectors& fv, PositionSet t) {
  return h_from_f(rank_selected_f(fv, t), t.size());
}

// ------------------------------------------------------ simplicial posets

bool is_simplicial(const GradedBoundedPoset& p) {
  const Poset& q = p.poset();
  const auto size = static_cast<std::size_t>(q.size());
  // Atom sets, sorted, stored contiguously; an element of rank k has k atoms.
  std::vector<std::size_t> off(size + 1, 0);
  for (std::size_t x = 0; x < size; ++x) off[x + 1] = off[x] + static_cast<std::size_t>(p.rank(static_cast<int>(x)));
  std::vector<int> atoms(off[size]);
  auto atoms_of = [&](int x) {
    return std::span<const int>(atoms.data() + off[static_cast<std::size_t>(x)], static_cast<std::size_t>(p.rank(x)));
  };
  std::vector<int> merged, missing;
  for (int k = 1; k <= p.rank(); ++k) {
    for (int y : p.levels()[static_cast<std::size_t>(k)]) {
      auto lower = q.lower_covers(y);
      if (static_cast<int>(lower.size()) != k) return false;
      int* out = atoms.data() + off[static_cast<std::size_t>(y)];
      if (k == 1) {
        out[0] = y;
        continue;
      }
      merged.clear();
      for (int z : lower) merged.insert(merged.end(), atoms_of(z).begin(), atoms_of(z).end());
      std::sort(merged.begin(), merged.end());
      merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
      if (static_cast<int>(merged.size()) != k) return false;
      // Each lower cover misses a different atom of y.
      missing.clear();
      for (int z : lower) {
        auto az = atoms_of(z);
        std::size_t i = 0;
        while (i < az.size() && az[i] == merged[i]) ++i;
        missing.push_back(merged[i]);
      }
      std::sort(missing.begin(), missing.end());
      if (std::adjacent_find(missing.begin(), missing.end()) != missing.end()) return false;
      // Two lower covers must share a lower cover; together with the
      // conditions above this makes the atom-set map a bijection from
      // [0̂, y] onto the subsets of the atoms of y, preserving covers.
      for (std::size_t i = 0; i < lower.size(); ++i)
        for (std::size_t j = i + 1; j < lower.size(); ++j) {
          auto a = q.lower_covers(lower[i]);
          auto b = q.lower_covers(lower[j]);
          std::size_t u = 0, v = 0;
          bool common = false;
          while (u < a.size() && v < b.size()) {
            if (a[u] == b[v]) {
              common = true;
              break;
            }
            if (a[u] < b[v]) ++u; else ++v;
          }
          if (!common) return false;
        }
      std::copy(merged.begin(), merged.end(), out);
    }
  }
  return true;
}

SimplicialHVector simplicial_h(const GradedBoundedPoset& p) {
  if (!is_simplicial(p)) throw DomainError("poset is not simplicial");
  SimplicialHVector out;
  out.n = p.rank();
  for (const auto& level : p.levels()) out.f.emplace_back(static_cast<unsigned long>(level.size()));
  IntPoly h = h_from_f(IntPoly(out.f), out.n);
  out.h.assign(static_cast<std::size_t>(out.n) + 1, 0);
  for (int i = 0; i <= h.degree(); ++i) out.h[static_cast<std::size_t>(i)] = h[static_cast<std::size_t>(i)];
  return out;
}

namespace {

// last[j] = #{w in S_{n+1} : Asc(w) = s, w(n+1) = j+1}, by inserting values
// left to right and tracking the relative rank of the newest entry.
std::vector<mpz_class> last_value_counts(int n, PositionSet s) {
  std::vector<mpz_class> f{1}, g;
  for (int i = 1; i <= n; ++i) {
    g.assign(static_cast<std::size_t>(i) + 1, 0);
    if (s.contains(i)) {
      mpz_class run = 0;
      for (int j = 0; j <= i; ++j) {
        g[static_cast<std::size_t>(j)] = run;
        if (j < i) run += f[static_cast<std::size_t>(j)];
      }
    } else {
      mpz_class run = 0;
      for (int j = i; j >= 0; --j) {
        if (j < i) run += f[static_cast<std::size_t>(j)];
        g[static_cast<std::size_t>(j)] = run;
      }
    }
    f.swap(g);
  }
  return f;
}

}  // namespace

std::vector<mpz_class> stanley_flag_betas(const SimplicialHVector& h) {
  const int n = h.n;
  std::vector<mpz_class> out(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < out.size(); ++m) {
    auto last = last_value_counts(n, PositionSet::from_mask(m));
    mpz_class sum = 0;
    for (int k = 0; k <= n; ++k) sum += h.h[static_cast<std::size_t>(k)] * last[static_cast<std::size_t>(k)];
    out[m] = sum;
  }
  return out;
}

mpz_class stanley_flag_beta(const GradedBoundedPoset& p, PositionSet s) {
  if (!s.is_subset_of(PositionSet::interval(p.rank()))) {
    throw DomainError("set " + s.to_string() + " is not a subset of [" + std::to_string(p.rank()) + "]");
  }
  SimplicialHVector h = simplicial_h(p);
  auto last = last_value_counts(h.n, s);
  mpz_class sum = 0;
  for (int k = 0; k <= h.n; ++k) sum += h.h[static_cast<std::size_t>(k)] * last[static_cast<std::size_t>(k)];
  return sum;
}

}  // namespace chainpoly
