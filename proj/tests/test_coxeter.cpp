#include <doctest.h>

#include <algorithm>

#include "chainpoly/coxeter.hpp"
#include "chainpoly/descent.hpp"
#include "chainpoly/error.hpp"
#include "chainpoly/real_roots.hpp"
#include "support.hpp"

using namespace chainpoly;

namespace {

IntPoly P(std::initializer_list<long> c) { return IntPoly(c); }

// Rank of w - I in the signed permutation representation: the codimension
// of the fixed space, which equals the reflection length.
int fixed_space_codimension(const SignedPermutation& w) {
  const int n = w.degree();
  std::vector<std::vector<mpq_class>> m(static_cast<std::size_t>(n), std::vector<mpq_class>(static_cast<std::size_t>(n)));
  for (int j = 0; j < n; ++j) {
    const int v = w.images[static_cast<std::size_t>(j)];
    m[static_cast<std::size_t>(std::abs(v)) - 1][static_cast<std::size_t>(j)] += v < 0 ? -1 : 1;
    m[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] -= 1;
  }
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int piv = rank;
    while (piv < n && m[static_cast<std::size_t>(piv)][static_cast<std::size_t>(col)] == 0) ++piv;
    if (piv == n) continue;
    std::swap(m[static_cast<std::size_t>(piv)], m[static_cast<std::size_t>(rank)]);
    for (int r = 0; r < n; ++r) {
      if (r == rank) continue;
      mpq_class f = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] / m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
      for (int c = col; c < n; ++c) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -= f * m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)];
    }
    ++rank;
  }
  return rank;
}

std::vector<std::size_t> level_sizes(const GradedBoundedPoset& g) {
  std::vector<std::size_t> out;
  for (const auto& l : g.levels()) out.push_back(l.size());
  return out;
}

std::vector<ReflectionGroup> small_groups() {
  std::vector<ReflectionGroup> out;
  for (int k = 1; k <= 4; ++k) out.push_back(ReflectionGroup::build(CoxeterType::a(k)));
  for (int n = 2; n <= 4; ++n) out.push_back(ReflectionGroup::build(CoxeterType::b(n)));
  for (int n = 2; n <= 4; ++n) out.push_back(ReflectionGroup::build(CoxeterType::d(n)));
  return out;
}

}  // namespace

TEST_CASE("Coxeter type syntax") {
  for (const char* s : {"A4", "B3", "D4", "I2:7", "H3", "H4", "F4", "E6", "E7", "E8"}) CHECK(CoxeterType::parse(s).to_string() == s);
  CHECK(CoxeterType::parse("I2:7").rank() == 2);
  CHECK(CoxeterType::parse("A4").rank() == 4);
  CHECK(CoxeterType::parse("E7").rank() == 7);
  for (const char* s : {"", "A", "A0", "D1", "I2:2", "X3", "B-1", "H5", "a3", "A3x"}) CHECK_THROWS_AS(CoxeterType::parse(s), ParseError);
}

TEST_CASE("small groups") {
  auto s3 = ReflectionGroup::build(CoxeterType::a(2));
  CHECK(s3.order() == 6);
  CHECK(s3.reflections().size() == 3);
  CHECK(s3.abs_length(s3.coxeter_element()) == 2);
  auto b2 = ReflectionGroup::build(CoxeterType::b(2));
  CHECK(b2.order() == 8);
  CHECK(b2.reflections().size() == 4);
  CHECK(b2.abs_length(b2.coxeter_element()) == 2);
  auto d3 = ReflectionGroup::build(CoxeterType::d(3));
  CHECK(d3.order() == 24);
  CHECK(d3.reflections().size() == 6);
  CHECK(ReflectionGroup::build(CoxeterType::d(4)).order() == 192);
  CHECK_THROWS_AS(ReflectionGroup::build(CoxeterType::a(8)), ResourceError);
  CHECK_THROWS_AS(ReflectionGroup::build(CoxeterType::b(7)), ResourceError);
  CHECK_THROWS_AS(ReflectionGroup::build(CoxeterType{CoxeterFamily::H3, 0}), DomainError);
  CHECK_THROWS_AS(ReflectionGroup::symmetric_group(4, SignedPermutation{{2, 1, 3, 4}}), DomainError);
}

TEST_CASE("reflection length agrees with the fixed-space codimension") {
  for (const auto& g : small_groups()) {
    CAPTURE(g.type().to_string());
    for (std::size_t a = 0; a < g.order(); ++a) CHECK(g.abs_length(static_cast<int>(a)) == fixed_space_codimension(g.elements()[a]));
  }
}

TEST_CASE("reflection set axioms") {
  for (const auto& g : small_groups()) {
    std::vector<int> refl = g.reflections();
    std::sort(refl.begin(), refl.end());
    for (int t : refl) {
      CHECK(g.multiply(t, t) == g.identity());
      CHECK(g.abs_length(t) == 1);
      for (std::size_t w = 0; w < g.order(); ++w) {
        const int c = g.multiply(g.multiply(static_cast<int>(w), t), g.inverse_of(static_cast<int>(w)));
        CHECK(std::binary_search(refl.begin(), refl.end(), c));
      }
    }
    for (std::size_t w = 0; w < g.order(); ++w)
      for (int t : refl) CHECK(std::abs(g.abs_length(g.multiply(static_cast<int>(w), t)) - g.abs_length(static_cast<int>(w))) == 1);
  }
}

TEST_CASE("NC lattice sizes") {
  auto nc = [](CoxeterType t) { return nc_lattice(ReflectionGroup::build(t)); };
  CHECK(level_sizes(nc(CoxeterType::a(2))) == std::vector<std::size_t>{1, 3, 1});
  CHECK(level_sizes(nc(CoxeterType::a(3))) == std::vector<std::size_t>{1, 6, 6, 1});
  CHECK(level_sizes(nc(CoxeterType::b(2))) == std::vector<std::size_t>{1, 4, 1});
  CHECK(nc(CoxeterType::a(4)).size() == 42);
  CHECK(nc(CoxeterType::a(5)).size() == 132);
  CHECK(nc(CoxeterType::b(3)).size() == 20);
  CHECK(nc(CoxeterType::b(4)).size() == 70);
  CHECK(nc(CoxeterType::d(3)).size() == 14);
  CHECK(nc(CoxeterType::d(4)).size() == 50);
  CHECK(nc(CoxeterType::d(5)).size() == 182);
}

TEST_CASE("NC covers generate the absolute order") {
  for (const auto& g : small_groups()) {
    if (g.order() > 200) continue;
    auto lat = nc_lattice(g);
    auto members = nc_elements(g);
    const Poset& p = lat.poset();
    for (int i = 0; i < p.size(); ++i)
      for (int j = 0; j < p.size(); ++j) CHECK(p.less_equal(i, j) == g.absolute_le(members[static_cast<std::size_t>(i)], members[static_cast<std::size_t>(j)]));
  }
}

TEST_CASE("h-polynomial formulas") {
  CHECK(nc_h_formula(CoxeterType::a(2)) == P({1, 2}));
  CHECK(nc_h_formula(CoxeterType::parse("H3")) == P({1, 28, 21}));
  CHECK(nc_h_formula(CoxeterType::parse("H4")) == P({1, 275, 842, 232}));
  CHECK(nc_h_formula(CoxeterType::parse("F4")) == P({1, 100, 265, 66}));
  CHECK(nc_h_formula(CoxeterType::parse("E6")) == P({1, 826, 10778, 21308, 8141, 418}));
  CHECK(nc_h_formula(CoxeterType::parse("E7")) == P({1, 4152, 110958, 446776, 412764, 85800, 2431}));
  CHECK(nc_h_formula(CoxeterType::parse("E8")) == P({1, 25071, 1295238, 9523785, 17304775, 8733249, 1069289, 17342}));
  CHECK(nc_h_formula(CoxeterType::b(2)) == nc_h_formula(CoxeterType::i2(4)));
  CHECK(nc_h_formula(CoxeterType::a(2)) == nc_h_formula(CoxeterType::i2(3)));
  CHECK(nc_h_formula(CoxeterType::d(3)) == nc_h_formula(CoxeterType::a(3)));
  CHECK(nc_h_formula(CoxeterType::b(1)) == P({1}));
  CHECK(nc_chain_polynomial(CoxeterType::a(2)) == P({1, 5, 7, 3}));
  for (int m = 3; m <= 10; ++m) CHECK(nc_chain_polynomial(CoxeterType::i2(m)) == P({1, 2, 1}) * P({1, m}));
  // h(1) counts maximal chains of the proper part: n^{n-2} for S_n.
  CHECK(nc_h_formula(CoxeterType::a(4)).value_at_one() == 125);
}

TEST_CASE("formula h-polynomials equal the brute-force lattices") {
  std::vector<CoxeterType> types;
  for (int k = 2; k <= 5; ++k) types.push_back(CoxeterType::a(k));
  for (int n = 2; n <= 4; ++n) types.push_back(CoxeterType::b(n));
  for (int n = 3; n <= 4; ++n) types.push_back(CoxeterType::d(n));
  for (auto t : types) {
    CAPTURE(t.to_string());
    auto lat = nc_lattice(ReflectionGroup::build(t));
    CHECK(order_h_polynomial(lat.poset()) == nc_h_formula(t));
    CHECK(chain_polynomial(lat.poset()) == nc_chain_polynomial(t));
  }
}

TEST_CASE("flag f-vector of NC for types A and B counts words") {
  for (int n = 2; n <= 6; ++n) {
    auto fv = flag_vectors(nc_lattice(ReflectionGroup::build(CoxeterType::a(n - 1))));
    for_each_subset(PositionSet::interval(n - 2), [&](PositionSet t) {
      mpz_class words = words_with_descents_in(n - 1, n, t);
      CHECK(words % n == 0);
      CHECK(fv.alpha_of(t) * n == words);
    });
  }
  for (int n = 2; n <= 4; ++n) {
    auto fv = flag_vectors(nc_lattice(ReflectionGroup::build(CoxeterType::b(n))));
    for_each_subset(PositionSet::interval(n - 1), [&](PositionSet t) { CHECK(fv.alpha_of(t) == words_with_descents_in(n, n, t)); });
  }
}

TEST_CASE("type D face counts") {
  for (int n = 3; n <= 5; ++n) {
    auto lat = nc_lattice(ReflectionGroup::build(CoxeterType::d(n)));
    std::vector<int> proper;
    auto top = lat.levels().back()[0];
    for (int x = 0; x < lat.size(); ++x)
      if (x != lat.bottom() && x != top) proper.push_back(x);
    IntPoly f = chain_polynomial(lat.poset().induced(proper));
    IntPoly from_formula;
    for (int k = 0; k <= n - 1; ++k) {
      CHECK(flag_f_nc_d(n, k) == f[static_cast<std::size_t>(k)]);
      CHECK(flag_f_nc_d_simplified(n, k) == f[static_cast<std::size_t>(k)]);
      from_formula += IntPoly::monomial(flag_f_nc_d(n, k), static_cast<std::size_t>(k));
    }
    CHECK(h_from_f(from_formula, n - 1) == d_word_enumerator(n));
  }
  CHECK(flag_f_nc_d(3, 0) == 1);
  CHECK_THROWS_AS(flag_f_nc_d(3, 3), DomainError);
  CHECK_THROWS_AS(flag_f_nc_d(2, 0), DomainError);
}

TEST_CASE("NC lattice does not depend on the Coxeter element") {
  for (int n = 4; n <= 5; ++n) {
    auto standard = nc_lattice(ReflectionGroup::symmetric_group(n));
    // The n-cycle 1 -> 3 -> 2 -> 4 -> ... in one-line notation.
    std::vector<int> cyc{1, 3, 2};
    for (int i = 4; i <= n; ++i) cyc.push_back(i);
    SignedPermutation gamma{std::vector<int>(static_cast<std::size_t>(n))};
    for (std::size_t i = 0; i < cyc.size(); ++i) gamma.images[static_cast<std::size_t>(cyc[i]) - 1] = cyc[(i + 1) % cyc.size()];
    auto other = nc_lattice(ReflectionGroup::symmetric_group(n, gamma));
    CHECK(level_sizes(other) == level_sizes(standard));
    CHECK(chain_polynomial(other.poset()) == chain_polynomial(standard.poset()));
    CHECK(flag_vectors(other).alpha == flag_vectors(standard).alpha);
  }
}

TEST_CASE("symmetric decomposition report") {
  auto h3 = nc_symdec_report(CoxeterType::parse("H3"));
  CHECK(std::find(h3.peaks.begin(), h3.peaks.end(), 1) != h3.peaks.end());
  CHECK(h3.peak_at_half_rank);
  CHECK(h3.symdec_nonneg_real_rooted);
  CHECK_FALSE(h3.veronese_identity.has_value());
  auto f4 = nc_symdec_report(CoxeterType::parse("F4"));
  CHECK(f4.h_real_rooted);
  CHECK(f4.symdec_nonneg_real_rooted);
  auto b3 = nc_symdec_report(CoxeterType::b(3));
  REQUIRE(b3.veronese_identity.has_value());
  CHECK(*b3.veronese_identity);

  std::vector<CoxeterType> types = exceptional_types();
  for (int n = 1; n <= 9; ++n) types.push_back(CoxeterType::a(n));
  for (int n = 2; n <= 9; ++n) types.push_back(CoxeterType::b(n));
  for (int n = 2; n <= 9; ++n) types.push_back(CoxeterType::d(n));
  for (auto t : types) {
    CAPTURE(t.to_string());
    auto r = nc_symdec_report(t);
    CHECK(r.h_real_rooted);
    CHECK(r.chain_real_rooted);
    CHECK(r.symdec_nonneg_real_rooted);
    CHECK(r.peak_at_half_rank);
    if (t.classical()) CHECK(r.veronese_identity.value_or(false));
    CHECK(r.symdec.a + r.symdec.b.shifted(1) == r.h);
  }
}
