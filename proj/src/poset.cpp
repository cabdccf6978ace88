#include "chainpoly/poset.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "chainpoly/error.hpp"

namespace chainpoly {

// ------------------------------------------------------------------ Poset

void Poset::build(int size, const std::vector<std::pair<int, int>>& covers) {
  if (size < 0) throw DomainError("negative poset size");
  n_ = size;
  const auto un = static_cast<std::size_t>(size);
  up_off_.assign(un + 1, 0);
  down_off_.assign(un + 1, 0);
  for (const auto& [x, y] : covers) {
    if (x < 0 || y < 0 || x >= size || y >= size) throw DomainError("cover pair references an unknown element");
    if (x == y) throw DomainError("cover pair (" + label(x) + ", " + label(x) + ") is a loop");
    ++up_off_[static_cast<std::size_t>(x) + 1];
    ++down_off_[static_cast<std::size_t>(y) + 1];
  }
  for (std::size_t i = 0; i < un; ++i) {
    up_off_[i + 1] += up_off_[i];
    down_off_[i + 1] += down_off_[i];
  }
  up_.assign(covers.size(), 0);
  down_.assign(covers.size(), 0);
  std::vector<std::size_t> up_fill(up_off_.begin(), up_off_.end() - 1);
  std::vector<std::size_t> down_fill(down_off_.begin(), down_off_.end() - 1);
  for (const auto& [x, y] : covers) {
    up_[up_fill[static_cast<std::size_t>(x)]++] = y;
    down_[down_fill[static_cast<std::size_t>(y)]++] = x;
  }
  for (std::size_t i = 0; i < un; ++i) {
    std::sort(up_.begin() + static_cast<std::ptrdiff_t>(up_off_[i]), up_.begin() + static_cast<std::ptrdiff_t>(up_off_[i + 1]));
    std::sort(down_.begin() + static_cast<std::ptrdiff_t>(down_off_[i]), down_.begin() + static_cast<std::ptrdiff_t>(down_off_[i + 1]));
    auto row = upper_covers(static_cast<int>(i));
    if (std::adjacent_find(row.begin(), row.end()) != row.end()) {
      throw DomainError("duplicate cover pair starting at " + label(static_cast<int>(i)));
    }
  }
  // Kahn's algorithm; leftover elements lie on a cycle.
  std::vector<std::size_t> indeg(un);
  for (std::size_t i = 0; i < un; ++i) indeg[i] = down_off_[i + 1] - down_off_[i];
  topo_.clear();
  topo_.reserve(un);
  for (int i = 0; i < size; ++i)
    if (indeg[static_cast<std::size_t>(i)] == 0) topo_.push_back(i);
  for (std::size_t head = 0; head < topo_.size(); ++head) {
    for (int y : upper_covers(topo_[head]))
      if (--indeg[static_cast<std::size_t>(y)] == 0) topo_.push_back(y);
  }
  if (topo_.size() != un) throw DomainError("cover relation contains a cycle");
}

Poset Poset::trusted(int size, const std::vector<std::pair<int, int>>& covers, std::vector<std::string> labels) {
  Poset p;
  p.labels_ = std::move(labels);
  p.build(size, covers);
  return p;
}

Poset Poset::validated(int size, const std::vector<std::pair<int, int>>& covers, std::vector<std::string> labels) {
  Poset p = trusted(size, covers, std::move(labels));
  // A cover x < y is redundant when x lies strictly below another lower
  // cover of y.
  std::vector<int> stamp(static_cast<std::size_t>(size), -1);
  std::vector<int> stack;
  for (int y = 0; y < size; ++y) {
    auto lower = p.lower_covers(y);
    if (lower.size() < 2) continue;
    stack.clear();
    for (int z : lower)
      for (int w : p.lower_covers(z))
        if (stamp[static_cast<std::size_t>(w)] != y) {
          stamp[static_cast<std::size_t>(w)] = y;
          stack.push_back(w);
        }
    while (!stack.empty()) {
      int w = stack.back();
      stack.pop_back();
      for (int v : p.lower_covers(w))
        if (stamp[static_cast<std::size_t>(v)] != y) {
          stamp[static_cast<std::size_t>(v)] = y;
          stack.push_back(v);
        }
    }
    for (int z : lower)
      if (stamp[static_cast<std::size_t>(z)] == y) {
        throw DomainError("cover pair (" + p.label(z) + ", " + p.label(y) + ") is implied by transitivity");
      }
  }
  return p;
}

std::string Poset::label(int x) const {
  if (static_cast<std::size_t>(x) < labels_.size()) return labels_[static_cast<std::size_t>(x)];
  if (labeler_) return labeler_(x);
  return std::to_string(x);
}

std::optional<int> Poset::find(std::string_view label) const {
  for (int i = 0; i < n_; ++i)
    if (this->label(i) == label) return i;
  return std::nullopt;
}

std::span<const int> Poset::upper_covers(int x) const {
  const auto i = static_cast<std::size_t>(x);
  return {up_.data() + up_off_[i], up_off_[i + 1] - up_off_[i]};
}

std::span<const int> Poset::lower_covers(int x) const {
  const auto i = static_cast<std::size_t>(x);
  return {down_.data() + down_off_[i], down_off_[i + 1] - down_off_[i]};
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(up_.size());
  for (int x = 0; x < n_; ++x)
    for (int y : upper_covers(x)) out.emplace_back(x, y);
  return out;
}

std::vector<int> Poset::minimal_elements() const {
  std::vector<int> out;
  for (int x = 0; x < n_; ++x)
    if (lower_covers(x).empty()) out.push_back(x);
  return out;
}

std::vector<int> Poset::maximal_elements() const {
  std::vector<int> out;
  for (int x = 0; x < n_; ++x)
    if (upper_covers(x).empty()) out.push_back(x);
  return out;
}

std::vector<int> Poset::down_set(int y) const {
  std::vector<int> out{y};
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  seen[static_cast<std::size_t>(y)] = 1;
  for (std::size_t head = 0; head < out.size(); ++head)
    for (int z : lower_covers(out[head]))
      if (!seen[static_cast<std::size_t>(z)]) {
        seen[static_cast<std::size_t>(z)] = 1;
        out.push_back(z);
      }
  return out;
}

bool Poset::less_equal(int x, int y) const {
  if (x == y) return true;
  auto d = down_set(y);
  return std::find(d.begin(), d.end(), x) != d.end();
}

Poset Poset::induced(const std::vector<int>& keep) const {
  std::vector<int> index(static_cast<std::size_t>(n_), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
  // For each kept y, the maximal kept elements strictly below it: walk down
  // through unkept elements only.
  std::vector<std::pair<int, int>> covers;
  std::vector<int> below;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    const int y = keep[i];
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<int> stack(lower_covers(y).begin(), lower_covers(y).end());
    below.clear();
    for (int z : stack) seen[static_cast<std::size_t>(z)] = 1;
    while (!stack.empty()) {
      int z = stack.back();
      stack.pop_back();
      if (index[static_cast<std::size_t>(z)] >= 0) {
        below.push_back(z);
        continue;
      }
      for (int w : lower_covers(z))
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
    }
    // Drop candidates that lie below another candidate.
    for (int z : below) {
      bool maximal = true;
      for (int other : below)
        if (other != z && less_equal(z, other)) {
          maximal = false;
          break;
        }
      if (maximal) covers.emplace_back(index[static_cast<std::size_t>(z)], static_cast<int>(i));
    }
  }
  std::vector<std::string> labels;
  labels.reserve(keep.size());
  for (int x : keep) labels.push_back(label(x));
  return trusted(static_cast<int>(keep.size()), covers, std::move(labels));
}

// ----------------------------------------------------- GradedBoundedPoset

GradedBoundedPoset::GradedBoundedPoset(Poset p) : GradedBoundedPoset(std::move(p), std::nullopt, std::nullopt) {}

GradedBoundedPoset::GradedBoundedPoset(Poset p, std::optional<int> bottom, std::optional<std::vector<int>> ranks)
    : p_(std::move(p)) {
  if (p_.size() == 0) throw GradedStructureError("empty poset has no minimum");
  auto minimal = p_.minimal_elements();
  if (minimal.size() != 1) throw GradedStructureError("poset has " + std::to_string(minimal.size()) + " minimal elements, expected a unique minimum");
  if (bottom && *bottom != minimal[0]) throw GradedStructureError("declared bottom " + p_.label(*bottom) + " is not the minimum");
  bottom_ = minimal[0];
  if (ranks) {
    if (ranks->size() != static_cast<std::size_t>(p_.size())) throw GradedStructureError("rank map does not cover every element");
    rank_ = std::move(*ranks);
    if (rank_[static_cast<std::size_t>(bottom_)] != 0) throw GradedStructureError("bottom must have rank 0");
  } else {
    rank_.assign(static_cast<std::size_t>(p_.size()), -1);
    rank_[static_cast<std::size_t>(bottom_)] = 0;
    for (int x : p_.topological_order())
      for (int y : p_.upper_covers(x))
        if (rank_[static_cast<std::size_t>(y)] < 0) rank_[static_cast<std::size_t>(y)] = rank_[static_cast<std::size_t>(x)] + 1;
  }
  check_and_index();
}

void GradedBoundedPoset::check_and_index() {
  for (const auto& [x, y] : p_.cover_pairs()) {
    if (rank(y) != rank(x) + 1) {
      throw GradedStructureError("cover " + p_.label(x) + " < " + p_.label(y) + " does not raise the rank by one");
    }
  }
  auto maximal = p_.maximal_elements();
  n_ = rank(maximal[0]);
  for (int m : maximal)
    if (rank(m) != n_) throw GradedStructureError("maximal elements " + p_.label(maximal[0]) + " and " + p_.label(m) + " have different ranks");
  levels_.assign(static_cast<std::size_t>(n_) + 1, {});
  for (int x = 0; x < p_.size(); ++x) levels_[static_cast<std::size_t>(rank(x))].push_back(x);
  original_ranks_.resize(static_cast<std::size_t>(n_) + 1);
  for (int i = 0; i <= n_; ++i) original_ranks_[static_cast<std::size_t>(i)] = i;
}

}  // namespace chainpoly
