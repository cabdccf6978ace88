#include "chainpoly/position_set.hpp"

#include <charconv>

#include "chainpoly/error.hpp"

namespace chainpoly {

PositionSet::PositionSet(std::initializer_list<int> positions) {
  for (int p : positions) insert(p);
}

PositionSet PositionSet::interval(int n) {
  if (n < 0 || n > kMaxPosition) throw DomainError("interval bound out of range: " + std::to_string(n));
  return from_mask(n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n)));
}

std::vector<int> PositionSet::elements() const {
  std::vector<int> out;
  for (std::uint64_t m = mask_; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

void PositionSet::insert(int i) {
  if (i < 1 || i > kMaxPosition) throw DomainError("position out of range: " + std::to_string(i));
  mask_ |= std::uint64_t{1} << (i - 1);
}

void PositionSet::erase(int i) {
  if (i >= 1 && i <= kMaxPosition) mask_ &= ~(std::uint64_t{1} << (i - 1));
}

PositionSet PositionSet::shifted_down(int k) const {
  if (k <= 0) return *this;
  if (k >= 64) return {};
  return from_mask(mask_ >> k);
}

PositionSet PositionSet::reflected(int m) const {
  PositionSet out;
  for (int a : elements()) {
    int b = m - a;
    if (b >= 1 && b <= kMaxPosition) out.insert(b);
  }
  return out;
}

std::string PositionSet::to_string() const {
  if (empty()) return "-";
  std::string s;
  for (int a : elements()) {
    if (!s.empty()) s += ',';
    s += std::to_string(a);
  }
  return s;
}

PositionSet PositionSet::parse(std::string_view text) {
  PositionSet out;
  if (text == "-" || text.empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw ParseError("bad position '" + std::string(tok) + "' in set '" + std::string(text) + "'");
    if (value < 1 || value > kMaxPosition)
      throw ParseError("position out of range in set '" + std::string(text) + "'");
    out.insert(value);
    pos = comma + 1;
  }
  return out;
}

}  // namespace chainpoly
