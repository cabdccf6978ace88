#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chainpoly/poly.hpp"
#include "chainpoly/position_set.hpp"

namespace chainpoly {

/// Finite poset given by its cover relations. Elements are 0..size()-1;
/// (x, y) is a cover pair when y covers x. Adjacency is stored in
/// compressed rows with each row sorted.
class Poset {
 public:
  using Labeler = std::function<std::string(int)>;

  Poset() = default;

  /// Checks that the covers reference known elements, contain no loops or
  /// duplicates, are acyclic and irredundant. Throws DomainError.
  static Poset validated(int size, const std::vector<std::pair<int, int>>& covers, std::vector<std::string> labels = {});
  /// No irredundancy check; acyclicity is still verified. For builders
  /// that produce covers by construction.
  static Poset trusted(int size, const std::vector<std::pair<int, int>>& covers, std::vector<std::string> labels = {});

  int size() const { return n_; }
  std::string label(int x) const;
  std::optional<int> find(std::string_view label) const;
  void set_labeler(Labeler f) { labeler_ = std::move(f); }

  std::span<const int> upper_covers(int x) const;
  std::span<const int> lower_covers(int x) const;
  std::size_t cover_count() const { return up_.size(); }
  std::vector<std::pair<int, int>> cover_pairs() const;

  /// Every element appears after all elements below it.
  const std::vector<int>& topological_order() const { return topo_; }
  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;
  bool less_equal(int x, int y) const;
  /// All z <= y (including y), in no particular order.
  std::vector<int> down_set(int y) const;

  /// Induced subposet on `keep` (in the given order); covers recomputed.
  Poset induced(const std::vector<int>& keep) const;

 private:
  void build(int size, const std::vector<std::pair<int, int>>& covers);

  int n_ = 0;
  std::vector<std::size_t> up_off_, down_off_;
  std::vector<int> up_, down_;
  std::vector<int> topo_;
  std::vector<std::string> labels_;
  Labeler labeler_;
};

/// Graded poset with minimum (0̂ = bottom, rank 0) whose maximal elements
/// all have rank n. The maximum 1̂ of P̂ is never stored; operations that
/// need it adjoin it implicitly at rank n + 1.
class GradedBoundedPoset {
 public:
  GradedBoundedPoset() = default;
  /// Computes ranks from the unique minimum. Throws GradedStructureError.
  explicit GradedBoundedPoset(Poset p);
  /// Uses the given bottom/ranks when present and verifies them.
  GradedBoundedPoset(Poset p, std::optional<int> bottom, std::optional<std::vector<int>> ranks);

  const Poset& poset() const { return p_; }
  int size() const { return p_.size(); }
  int bottom() const { return bottom_; }
  int rank(int x) const { return rank_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& ranks() const { return rank_; }
  /// The rank n of P.
  int rank() const { return n_; }
  /// Elements of each rank 0..n.
  const std::vector<std::vector<int>>& levels() const { return levels_; }
  /// original_ranks()[i] is the rank, in the poset this one was selected
  /// from, of the elements now at rank i. Identity unless rank-selected.
  const std::vector<int>& original_ranks() const { return original_ranks_; }
  void set_original_ranks(std::vector<int> r) { original_ranks_ = std::move(r); }

 private:
  void check_and_index();

  Poset p_;
  int bottom_ = 0;
  int n_ = 0;
  std::vector<int> rank_;
  std::vector<std::vector<int>> levels_;
  std::vector<int> original_ranks_;
};

// ---------------------------------------------------------------- chains

/// f_P(x): coefficient of x^i counts the i-element chains of P.
IntPoly chain_polynomial(const Poset& p);
/// h(Δ(P), x) = Σ f_{i-1} x^i (1-x)^{n-i} with n the size of a largest chain.
IntPoly order_h_polynomial(const Poset& p);
/// Applies the f-to-h transform with respect to n to a chain polynomial.
IntPoly h_from_f(const IntPoly& f, int n);

/// P̂_T: the bottom plus the elements with rank in t, ranks compressed to
/// 1..|t|. Throws DomainError when t is not a subset of [n].
GradedBoundedPoset rank_selected(const GradedBoundedPoset& p, PositionSet t);

// ----------------------------------------------------------- flag vectors

/// Flag f- and h-vectors of P̂, indexed by the mask of S ⊆ [n].
struct FlagVectors {
  int n = 0;
  std::vector<mpz_class> alpha;
  std::vector<mpz_class> beta;

  const mpz_class& alpha_of(PositionSet s) const { return alpha[static_cast<std::size_t>(s.mask())]; }
  const mpz_class& beta_of(PositionSet s) const { return beta[static_cast<std::size_t>(s.mask())]; }
};

struct CensusLimits {
  /// Upper bound on stored chain counts; elements with equal count rows
  /// share storage.
  std::size_t max_entries = std::size_t{1} << 28;
};

/// alpha(S) = number of chains of P with rank set exactly S (the maximal
/// chains of P̂_S), counted by a per-element census of the chains below
/// each element. Throws ResourceError when the census would exceed limits.
FlagVectors flag_vectors(const GradedBoundedPoset& p, CensusLimits limits = {});
/// beta from alpha by inclusion-exclusion, and back.
std::vector<mpz_class> beta_from_alpha(const std::vector<mpz_class>& alpha);
std::vector<mpz_class> alpha_from_beta(const std::vector<mpz_class>& beta);

/// Σ_{S⊆t} beta(S) x^{|S|}.
IntPoly rank_selected_h(const FlagVectors& fv, PositionSet t);
IntPoly rank_selected_h(const GradedBoundedPoset& p, PositionSet t);
/// Σ_{S⊆t} alpha(S) x^{|S|}: the f-polynomial of Δ(P̂_t minus 0̂, 1̂).
IntPoly rank_selected_f(const FlagVectors& fv, PositionSet t);
/// Σ_{S⊆t} alpha(S) x^{|S|} (1-x)^{|t∖S|}.
IntPoly rank_selected_h_from_alpha(const FlagVectors& fv, PositionSet t);

// ------------------------------------------------------ simplicial posets

/// True iff every interval [0̂, y] is a Boolean lattice.
bool is_simplicial(const GradedBoundedPoset& p);

struct SimplicialHVector {
  int n = 0;
  /// f[j] = f_{j-1}(P), the number of elements of rank j.
  std::vector<mpz_class> f;
  std::vector<mpz_class> h;
  IntPoly polynomial() const { return IntPoly(h); }
};
/// h(P, x) = Σ f_{i-1}(P) x^i (1-x)^{n-i}. Throws DomainError when p is not simplicial.
SimplicialHVector simplicial_h(const GradedBoundedPoset& p);

/// Σ_k h_k(P) #{w in S_{n+1} : w(n+1) = k+1, Asc(w) = s}.
mpz_class stanley_flag_beta(const GradedBoundedPoset& p, PositionSet s);
/// The same for every s ⊆ [n] at once, indexed by mask.
std::vector<mpz_class> stanley_flag_betas(const SimplicialHVector& h);

// -------------------------------------------------------------- builders

GradedBoundedPoset boolean_lattice(int n);
/// Subsets of [n] x {0..r-1} using each i at most once, by inclusion.
GradedBoundedPoset colored_subset_poset(int n, int r);
/// All faces (including the empty face) of the complex generated by the
/// facets. The complex must be pure. Vertices are arbitrary integers.
GradedBoundedPoset face_poset(const std::vector<std::vector<int>>& facets);
/// Poset without a rank function from the JSON text format.
Poset poset_from_json(std::string_view text);
/// Graded poset from the JSON text format, ranks checked or computed.
GradedBoundedPoset graded_poset_from_json(std::string_view text);
std::string read_text_file(const std::string& path);

}  // namespace chainpoly
