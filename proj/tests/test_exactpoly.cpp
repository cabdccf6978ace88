#include <doctest.h>

#include <random>

#include "chainpoly/error.hpp"
#include "chainpoly/poly.hpp"
#include "chainpoly/poly_shape.hpp"
#include "chainpoly/real_roots.hpp"
#include "support.hpp"

using namespace chainpoly;
using testsupport::from_rational_roots;

namespace {

IntPoly P(std::initializer_list<long> c) { return IntPoly(c); }

IntPoly random_poly(std::mt19937& rng, int degree, int bound) {
  std::uniform_int_distribution<int> coeff(-bound, bound);
  std::vector<mpz_class> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = coeff(rng);
  if (c.back() == 0) c.back() = 1;
  return IntPoly(std::move(c));
}

// A positive-definite quadratic (no real roots).
IntPoly random_definite_quadratic(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(1, 6);
  int a = d(rng), b = d(rng) - 3, c = 0;
  do {
    c = d(rng);
  } while (b * b >= 4 * a * c);
  return IntPoly(std::vector<mpz_class>{c, b, a});
}

}  // namespace

TEST_CASE("arithmetic keeps canonical form") {
  CHECK(P({1, 1}) * P({1, 1}) == P({1, 2, 1}));
  CHECK(P({1, 4, 1}).derivative() == P({4, 2}));
  CHECK(IntPoly() + P({1, 1}) == P({1, 1}));
  CHECK(P({5}).derivative().is_zero());
  CHECK((P({1, 2, 3}) - P({0, 0, 3})) == P({1, 2}));
  CHECK((P({1, 2, 3}) - P({1, 2, 3})).is_zero());
  CHECK((P({1, 2}) - P({1, 2})).degree() == -1);
  CHECK(P({1, 1}).inflated(3) == P({1, 0, 0, 1}));
  CHECK(P({1, 1}).shifted(2) == P({0, 0, 1, 1}));
  CHECK(pow(P({1, 1}), 3) == P({1, 3, 3, 1}));
  CHECK(P({0, 0, 0}).is_zero());
}

TEST_CASE("text format") {
  CHECK(to_string(P({1, 28, 21})) == "1,28,21");
  CHECK(to_string(IntPoly()) == "0");
  CHECK(parse_int_poly("1,28,21") == P({1, 28, 21}));
  CHECK(parse_int_poly("0").is_zero());
  CHECK(parse_int_poly("1,0,0") == P({1}));
  CHECK_THROWS_AS(parse_int_poly("1,x"), ParseError);
  CHECK(to_string(parse_rat_poly("1/2,3,-4/6")) == "1/2,3,-2/3");
}

TEST_CASE("gcd, exact division, squarefree part") {
  IntPoly a = from_rational_roots({{mpq_class(1), 2}, {mpq_class(-3, 2), 1}});
  IntPoly b = from_rational_roots({{mpq_class(1), 1}, {mpq_class(5), 1}});
  CHECK(gcd(a, b) == P({-1, 1}));
  CHECK(divide_exact(a, P({-1, 1})) * P({-1, 1}) == a);
  CHECK_THROWS_AS(divide_exact(P({1, 0, 1}), P({1, 1})), DomainError);
  CHECK(squarefree_part(a) == from_rational_roots({{mpq_class(1), 1}, {mpq_class(-3, 2), 1}}));
  CHECK(squarefree_part(P({3})) == P({1}));
}

TEST_CASE("reverse") {
  CHECK(reverse(P({1, 2}), 1) == P({2, 1}));
  CHECK(reverse(P({1, 2}), 2) == P({0, 2, 1}));
  CHECK(reverse(P({0, 2}), 1) == P({2}));
  CHECK_THROWS_AS(reverse(P({1, 2, 3}), 1), InvalidDegreeError);
  CHECK(reverse(IntPoly(), 0).is_zero());
}

TEST_CASE("real-rootedness examples") {
  CHECK(is_real_rooted(P({1, 4, 1})));
  CHECK_FALSE(is_real_rooted(P({1, 1, 1})));
  CHECK(is_real_rooted(P({1, 28, 21})));
  CHECK(is_real_rooted(IntPoly()));
  CHECK(is_real_rooted(P({7})));
  // (x^2+1)^2 has no real roots; x^2 (x-1)^3 only real roots.
  CHECK_FALSE(is_real_rooted(P({1, 0, 2, 0, 1})));
  CHECK(is_real_rooted(from_rational_roots({{mpq_class(0), 2}, {mpq_class(1), 3}})));
  auto cert = certify_real_rooted(P({1, 4, 1}));
  CHECK(cert.distinct_real_roots == 2);
  CHECK(cert.squarefree_degree == 2);
  CHECK(cert.variations_neg_infinity - cert.variations_pos_infinity == 2);
}

TEST_CASE("Sturm counts agree with polynomials of known roots") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> num(-12, 12), den(1, 5), mult(1, 3), nroots(0, 4), nquad(0, 2);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::pair<mpq_class, int>> roots;
    std::vector<mpq_class> distinct;
    int total = 0;
    const int k = nroots(rng);
    while (static_cast<int>(roots.size()) < k) {
      mpq_class r(num(rng), den(rng));
      r.canonicalize();
      if (std::find(distinct.begin(), distinct.end(), r) != distinct.end()) continue;
      distinct.push_back(r);
      int m = mult(rng);
      roots.emplace_back(r, m);
      total += m;
    }
    IntPoly p = from_rational_roots(roots);
    const int q = nquad(rng);
    for (int i = 0; i < q; ++i) p *= random_definite_quadratic(rng);
    if (trial % 2) p *= mpz_class(-3);
    CAPTURE(to_string(p));
    auto cert = certify_real_rooted(p);
    CHECK(cert.distinct_real_roots == k);
    CHECK(cert.real_rooted == (q == 0));
    auto iso = isolate_real_roots(p);
    REQUIRE(iso.size() == roots.size());
    std::sort(roots.begin(), roots.end());
    for (std::size_t i = 0; i < iso.size(); ++i) {
      CHECK(iso[i].multiplicity == roots[i].second);
      CHECK(iso[i].lo <= roots[i].first);
      CHECK(roots[i].first <= iso[i].hi);
    }
    int mult_sum = 0;
    for (const auto& iv : iso) mult_sum += iv.multiplicity;
    CHECK(mult_sum == total);
  }
}

TEST_CASE("Sturm counts bound grid sign changes of random polynomials") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> deg(1, 8);
    IntPoly p = random_poly(rng, deg(rng), 20);
    IntPoly f = squarefree_part(p);
    SturmChain chain(f);
    const int sturm = chain.distinct_real_roots();
    // Grid of step 1/64 over [-B, B]; each sign change marks a root.
    const mpz_class b = root_bound(f);
    const long steps = 128 * b.get_si();
    int changes = 0, last = 0, zeros = 0;
    for (long i = 0; i <= steps; ++i) {
      mpq_class x(mpz_class(i) - mpz_class(steps / 2), mpz_class(64));
      x.canonicalize();
      int s = f.sign_at(x);
      if (s == 0) {
        ++zeros;
        continue;
      }
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    CAPTURE(to_string(p));
    // Between consecutive nonzero samples f has an odd number of roots
    // exactly when it changes sign (f is squarefree).
    CHECK(changes <= sturm);
    CHECK(zeros <= sturm);
    CHECK((sturm - changes) % 2 == 0);
    CHECK(static_cast<int>(isolate_real_roots(p).size()) == sturm);
  }
}

TEST_CASE("interlacing examples and conventions") {
  CHECK(testsupport::interlaces_checked(P({1, 1}), P({1, 4, 1})));
  CHECK(interlaces(IntPoly(), P({1, 1})));
  CHECK(interlaces(P({1, 1}), IntPoly()));
  CHECK_FALSE(testsupport::interlaces_checked(P({1, 4, 1}), P({1, 1})));
  CHECK(interlaces(P({3}), P({1, 1})));
  CHECK(interlaces(P({3}), P({5})));
  CHECK_FALSE(interlaces(P({3}), P({1, 4, 1})));
  CHECK_THROWS_AS(interlaces(P({1, 1, 1}), P({1, 1})), NotRealRootedError);
  CHECK_THROWS_AS(interlaces(P({1, 1}), P({1, 1, 1})), NotRealRootedError);
  CHECK_THROWS_AS(interlaces(IntPoly(), P({1, 1, 1})), NotRealRootedError);
  // Common and repeated roots.
  CHECK(interlaces(P({0, 0, 1}), P({0, 0, 1})));
  CHECK(interlaces(P({0, 1}), P({0, 0, 1})));
  CHECK_FALSE(interlaces(P({0, 0, 1}), P({0, 1})));
  IntPoly a = from_rational_roots({{-2, 1}, {0, 1}});
  IntPoly b = from_rational_roots({{-1, 1}, {0, 1}});
  CHECK(testsupport::interlaces_checked(a, b));
  CHECK_FALSE(testsupport::interlaces_checked(b, a));
  IntPoly c = from_rational_roots({{-1, 2}, {1, 1}});
  IntPoly d = from_rational_roots({{-1, 1}, {0, 1}, {2, 1}});
  CHECK(testsupport::interlaces_checked(c, d));
  IntPoly e = from_rational_roots({{-1, 2}, {1, 1}});
  IntPoly f = from_rational_roots({{-1, 1}, {2, 1}, {3, 1}});
  CHECK_FALSE(testsupport::interlaces_checked(e, f));
}

TEST_CASE("interlacing sequences") {
  CHECK(testsupport::interlacing_sequence_checked({P({1, 1}), P({1, 2}), P({1, 3})}));
  CHECK_FALSE(testsupport::interlacing_sequence_checked({P({1, 3}), P({1, 1})}));
  // Consecutive pairs interlace but the outer pair does not.
  IntPoly p0 = from_rational_roots({{-3, 1}, {-1, 1}});
  IntPoly p1 = from_rational_roots({{-2, 1}, {0, 1}});
  IntPoly p2 = from_rational_roots({{mpq_class(-1, 2), 1}, {1, 1}});
  CHECK(interlaces(p0, p1));
  CHECK(interlaces(p1, p2));
  CHECK_FALSE(interlaces(p0, p2));
  CHECK_FALSE(is_interlacing_sequence(std::vector<IntPoly>{p0, p1, p2}));
  CHECK_THROWS_AS(is_interlacing_sequence(std::vector<IntPoly>{P({1, 1}), P({1, 1, 1})}), NotRealRootedError);
}

TEST_CASE("interlacing agrees with the Wronskian sign on random real-rooted pairs") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 3), deg(1, 6), shift(0, 1), mult(1, 2);
  int true_count = 0;
  for (int trial = 0; trial < 400; ++trial) {
    auto make = [&](int d) {
      std::vector<std::pair<mpq_class, int>> roots;
      int total = 0;
      while (total < d) {
        mpq_class r(num(rng), den(rng));
        r.canonicalize();
        int m = std::min(mult(rng), d - total);
        roots.emplace_back(r, m);
        total += m;
      }
      return from_rational_roots(roots);
    };
    const int dp = deg(rng);
    IntPoly p = make(dp);
    IntPoly q = make(dp + shift(rng));
    if (trial % 3 == 0) {
      // The derivative of a real-rooted polynomial interlaces it.
      q = p;
      p = p.derivative();
    }
    if (testsupport::interlaces_checked(p, q)) ++true_count;
  }
  CHECK(true_count > 50);
}

TEST_CASE("interlacing closure properties") {
  std::mt19937 rng(99);
  std::vector<IntPoly> seq{P({1, 1}), P({1, 2}), P({1, 3}), P({0, 1})};
  REQUIRE(is_interlacing_sequence(seq));
  for (int i = 0; i < 5; ++i) testsupport::check_interlacing_closure(seq, rng);
}

TEST_CASE("symmetric decomposition") {
  auto d = symmetric_decomposition(P({1, 2, 1}), 2);
  CHECK(d.a == P({1, 2, 1}));
  CHECK(d.b.is_zero());
  d = symmetric_decomposition(P({1}), 1);
  CHECK(d.a == P({1, 1}));
  CHECK(d.b == P({-1}));
  // a is symmetric about 1 and b about 1/2, so b = c(1 + x) and a = u + v x + u x^2.
  d = symmetric_decomposition(P({1, 3}), 2);
  CHECK(d.a == P({1, 4, 1}));
  CHECK(d.b == P({-1, -1}));
  CHECK_FALSE(has_nonneg_realrooted_symdec(P({1, 3}), 2));
  CHECK_THROWS_AS(symmetric_decomposition(P({1, 2, 3}), 1), InvalidDegreeError);
  CHECK(has_nonneg_realrooted_symdec(IntPoly(), 3));
  // H3 row: with respect to r_W - 1 = 2.
  d = symmetric_decomposition(P({1, 28, 21}), 2);
  CHECK(d.a == P({1, 8, 1}));
  CHECK(d.b == P({20, 20}));
  CHECK(has_nonneg_realrooted_symdec(P({1, 28, 21}), 2));
  CHECK_FALSE(has_nonneg_realrooted_symdec(P({1, 28, 21}), 3));
}

TEST_CASE("symmetric decomposition round trip") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> deg(0, 9);
    IntPoly p = random_poly(rng, deg(rng), 50);
    const int n = p.degree() + static_cast<int>(rng() % 3);
    auto d = symmetric_decomposition(p, n);
    CHECK(d.a + d.b.shifted(1) == p);
    CHECK(is_symmetric(d.a, n));
    CHECK(d.b.degree() <= n - 1);
    for (int i = 0; i <= n - 1; ++i) CHECK(d.b[i] == d.b[n - 1 - i]);
  }
}

TEST_CASE("veronese") {
  CHECK(veronese(P({0, 1, 2, 1}), 2) == P({0, 2}));
  CHECK(veronese(P({3, 1, 4}), 1) == P({3, 1, 4}));
  CHECK(veronese(P({0, 1, 3, 3, 1}), 2) == P({0, 3, 1}));
  std::mt19937 rng(17);
  for (int r = 1; r <= 5; ++r) {
    IntPoly p = random_poly(rng, 6, 9);
    CHECK(veronese(p.inflated(static_cast<std::size_t>(r)), r) == p);
  }
}

TEST_CASE("shape predicates") {
  IntPoly p = P({1, 4, 1});
  CHECK(is_symmetric(p, 2));
  CHECK(unimodality(p).peaks == std::vector<int>{1});
  CHECK(is_log_concave(p));
  IntPoly q = P({1, 1, 2});
  CHECK(unimodality(q).peaks == std::vector<int>{2});
  CHECK_FALSE(is_log_concave(q));
  IntPoly c = P({5});
  CHECK(is_symmetric(c, 0));
  CHECK(is_unimodal(c));
  CHECK(is_log_concave(c));
  CHECK_THROWS_AS(is_symmetric(p, std::nullopt), MissingParameterError);
  CHECK_FALSE(is_unimodal(P({2, 1, 2})));
  CHECK(unimodality(P({1, 3, 3, 1})).peaks == std::vector<int>{1, 2});
  CHECK_FALSE(is_symmetric(P({1, 4, 1}), 3));
}

TEST_CASE("mode") {
  CHECK(*mode(P({1, 4, 1})) == 1);
  CHECK(*mode(P({1, 3, 3, 1})) == mpq_class(3, 2));
  CHECK_FALSE(mode(P({1, 2, 1, 2})).has_value());
  CHECK_FALSE(mode(P({2, 2, 2})).has_value());
  CHECK(*mode(P({7})) == 0);
  CHECK_THROWS_AS(mode(P({1, -1})), DomainError);
}

TEST_CASE("real-rooted nonnegative polynomials are log-concave and unimodal") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> num(-20, 0), den(1, 4), deg(1, 7);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::pair<mpq_class, int>> roots;
    const int d = deg(rng);
    for (int i = 0; i < d; ++i) roots.emplace_back(mpq_class(num(rng), den(rng)), 1);
    IntPoly p = from_rational_roots(roots);
    REQUIRE(p.has_nonnegative_coeffs());
    REQUIRE(is_real_rooted(p));
    testsupport::check_shape_chain(p);
  }
}
