#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "chainpoly/poly.hpp"
#include "chainpoly/poly_shape.hpp"
#include "chainpoly/poset.hpp"

namespace chainpoly {

enum class CoxeterFamily { A, B, D, I2, H3, H4, F4, E6, E7, E8 };

/// Irreducible finite Coxeter type. `param` is n for A, B, D and m for
/// I2(m); unused otherwise. A(k) is the symmetric group S_{k+1}.
struct CoxeterType {
  CoxeterFamily family = CoxeterFamily::A;
  int param = 0;

  static CoxeterType a(int k) { return {CoxeterFamily::A, k}; }
  static CoxeterType b(int n) { return {CoxeterFamily::B, n}; }
  static CoxeterType d(int n) { return {CoxeterFamily::D, n}; }
  static CoxeterType i2(int m) { return {CoxeterFamily::I2, m}; }

  /// r_W. Throws DomainError on an invalid parameter.
  int rank() const;
  bool classical() const { return family == CoxeterFamily::A || family == CoxeterFamily::B || family == CoxeterFamily::D; }
  /// "A4", "B3", "D4", "I2:7", "H3", ...
  std::string to_string() const;
  /// Inverse of to_string. Throws ParseError.
  static CoxeterType parse(std::string_view text);
  bool operator==(const CoxeterType&) const = default;
};

/// Every irreducible type with stored or formula data used by the tables:
/// I2(3..10), H3, H4, F4, E6, E7, E8.
std::vector<CoxeterType> exceptional_types();

/// Signed permutation of [n]: images[i] = ±w(i+1). Plain permutations
/// have all images positive.
struct SignedPermutation {
  std::vector<int> images;

  int degree() const { return static_cast<int>(images.size()); }
  /// Signed image of ±(i+1).
  int apply(int i) const;
  std::uint64_t key() const;
  bool operator==(const SignedPermutation&) const = default;
};
/// (a * b)(i) = a(b(i)).
SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b);
SignedPermutation inverse(const SignedPermutation& a);
SignedPermutation identity_permutation(int n);
/// One-line notation such as "[2,-1,3]".
std::string to_string(const SignedPermutation& w);

struct GroupCaps {
  std::size_t max_order = 50'000;
};

/// A finite reflection group given by its elements, reflections, a
/// Coxeter element and the reflection length of every element.
class ReflectionGroup {
 public:
  /// Concrete models: S_n by transpositions, B_n as all signed
  /// permutations, D_n as those with an even number of minus signs.
  /// Throws DomainError for other families, ResourceError over the cap.
  static ReflectionGroup build(CoxeterType t, const GroupCaps& caps = {});
  /// S_n with an arbitrary n-cycle (or any element) as Coxeter element.
  static ReflectionGroup symmetric_group(int n, std::optional<SignedPermutation> coxeter = std::nullopt, const GroupCaps& caps = {});

  CoxeterType type() const { return type_; }
  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<SignedPermutation>& elements() const { return elements_; }
  const std::vector<int>& reflections() const { return reflections_; }
  int coxeter_element() const { return coxeter_; }
  int identity() const { return 0; }
  int abs_length(int g) const { return length_[static_cast<std::size_t>(g)]; }
  int multiply(int a, int b) const;
  int inverse_of(int a) const;
  int index_of(const SignedPermutation& w) const;
  /// ℓ_T(a) + ℓ_T(a^{-1} b) = ℓ_T(b).
  bool absolute_le(int a, int b) const;

 private:
  void finish(const std::vector<SignedPermutation>& reflections, const SignedPermutation& coxeter);

  CoxeterType type_;
  int degree_ = 0;
  std::vector<SignedPermutation> elements_;
  std::unordered_map<std::uint64_t, int> index_;
  std::vector<int> reflections_;
  std::vector<int> length_;
  int coxeter_ = 0;
};

/// The interval [e, γ] in absolute order, ranked by ℓ_T. Element labels
/// are signed one-line notations. Throws InternalConsistencyError when
/// the level sizes are not symmetric.
GradedBoundedPoset nc_lattice(const ReflectionGroup& g);
/// Group element represented by each element of nc_lattice(g).
std::vector<int> nc_elements(const ReflectionGroup& g);

/// h(Δ(NC_W), x): word enumerators for A, B, D, stored data otherwise.
IntPoly nc_h_formula(CoxeterType t);
/// Chain polynomial of NC_W, (1+x)^2 Σ_i h_i x^i (1+x)^{r_W-1-i}.
IntPoly nc_chain_polynomial(CoxeterType t);

/// f_{k-1} of the order complex of the proper part of NC_{D_n}, from the
/// composition-sum formula; C(a, b) = 0 outside 0 <= b <= a. Requires
/// n >= 3 and 0 <= k <= n-1.
mpz_class flag_f_nc_d(int n, int k);
/// The same count from the simplified sum over compositions of n and n-1.
mpz_class flag_f_nc_d_simplified(int n, int k);

struct NcSymdecReport {
  CoxeterType type;
  int rank = 0;
  IntPoly h;
  IntPoly chain;
  bool h_real_rooted = false;
  bool chain_real_rooted = false;
  SymmetricDecomposition symdec;
  bool symdec_nonneg_real_rooted = false;
  /// All peak positions of h.
  std::vector<int> peaks;
  bool peak_at_half_rank = false;
  /// x^{r_W} h(1/x) against the Veronese expression (classical types).
  std::optional<bool> veronese_identity;
};
NcSymdecReport nc_symdec_report(CoxeterType t);

}  // namespace chainpoly
