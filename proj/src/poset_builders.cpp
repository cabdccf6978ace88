#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <unordered_map>

#include <json.hpp>

#include "chainpoly/error.hpp"
#include "chainpoly/poset.hpp"

namespace chainpoly {

namespace {

constexpr std::uint64_t kMaxBuiltElements = std::uint64_t{1} << 25;

std::string colored_label(std::uint64_t code, int n, int r) {
  std::string s = "{";
  bool first = true;
  for (int i = 1; i <= n; ++i) {
    const auto digit = static_cast<int>(code % static_cast<std::uint64_t>(r + 1));
    code /= static_cast<std::uint64_t>(r + 1);
    if (digit == 0) continue;
    if (!first) s += ',';
    first = false;
    s += std::to_string(i);
    if (r > 1) s += ":" + std::to_string(digit - 1);
  }
  return s + "}";
}

}  // namespace

GradedBoundedPoset colored_subset_poset(int n, int r) {
  if (n < 0 || r < 1) throw DomainError("colored subset poset needs n >= 0 and r >= 1");
  // Element code: base r+1 digits, digit i = 0 when i+1 is absent and
  // c+1 when it carries color c. Clearing a digit gives a lower cover, so
  // codes are already a linear extension.
  std::uint64_t size = 1;
  for (int i = 0; i < n; ++i) {
    size *= static_cast<std::uint64_t>(r) + 1;
    if (size > kMaxBuiltElements) {
      throw ResourceError("colored subset poset (" + std::to_string(n) + ", " + std::to_string(r) + ") is too large to build");
    }
  }
  std::vector<std::pair<int, int>> covers;
  covers.reserve(static_cast<std::size_t>(size) * static_cast<std::size_t>(n) * static_cast<std::size_t>(r) / (static_cast<std::size_t>(r) + 1) + 1);
  for (std::uint64_t y = 0; y < size; ++y) {
    std::uint64_t rest = y, place = 1;
    for (int i = 0; i < n; ++i) {
      const std::uint64_t digit = rest % (static_cast<std::uint64_t>(r) + 1);
      rest /= static_cast<std::uint64_t>(r) + 1;
      if (digit) covers.emplace_back(static_cast<int>(y - digit * place), static_cast<int>(y));
      place *= static_cast<std::uint64_t>(r) + 1;
    }
  }
  Poset p = Poset::trusted(static_cast<int>(size), covers);
  p.set_labeler([n, r](int x) { return colored_label(static_cast<std::uint64_t>(x), n, r); });
  return GradedBoundedPoset(std::move(p));
}

GradedBoundedPoset boolean_lattice(int n) { return colored_subset_poset(n, 1); }

GradedBoundedPoset face_poset(const std::vector<std::vector<int>>& facets) {
  if (facets.empty()) throw DomainError("face poset needs at least one facet");
  std::vector<int> vertices;
  for (const auto& f : facets) vertices.insert(vertices.end(), f.begin(), f.end());
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  if (vertices.size() > 30) throw ResourceError("face poset supports at most 30 vertices");
  auto vindex = [&](int v) { return static_cast<int>(std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin()); };

  std::vector<std::uint32_t> faces;
  for (const auto& f : facets) {
    std::uint32_t mask = 0;
    for (int v : f) mask |= std::uint32_t{1} << vindex(v);
    if (std::popcount(mask) > 20) throw ResourceError("facet too large");
    // Every subset of the facet.
    std::uint32_t s = 0;
    while (true) {
      faces.push_back(s);
      if (s == mask) break;
      s = (s - mask) & mask;
    }
  }
  std::sort(faces.begin(), faces.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b) : a < b;
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::unordered_map<std::uint32_t, int> index;
  for (std::size_t i = 0; i < faces.size(); ++i) index.emplace(faces[i], static_cast<int>(i));
  std::vector<std::pair<int, int>> covers;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    std::string label = "{";
    for (std::uint32_t m = faces[i]; m; m &= m - 1) {
      const int b = std::countr_zero(m);
      covers.emplace_back(index.at(faces[i] & ~(std::uint32_t{1} << b)), static_cast<int>(i));
      if (label.size() > 1) label += ',';
      label += std::to_string(vertices[static_cast<std::size_t>(b)]);
    }
    labels.push_back(label + "}");
  }
  return GradedBoundedPoset(Poset::trusted(static_cast<int>(faces.size()), covers, std::move(labels)));
}

// ------------------------------------------------------------ JSON input

namespace {

std::size_t line_at(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

// Line of the first occurrence of "token" (as a JSON string) at or after
// the first occurrence of the key; 0 when not found.
std::size_t line_of(std::string_view text, std::string_view key, const std::string& token) {
  std::size_t from = text.find("\"" + std::string(key) + "\"");
  if (from == std::string_view::npos) from = 0;
  std::size_t pos = text.find("\"" + token + "\"", from);
  return pos == std::string_view::npos ? 0 : line_at(text, pos);
}

struct ParsedPoset {
  Poset poset;
  std::optional<int> bottom;
  std::optional<std::vector<int>> ranks;
};

std::string element_name(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw ParseError("element names must be strings or integers");
}

ParsedPoset parse_poset_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), line_at(text, e.byte == 0 ? 0 : e.byte - 1));
  }
  if (!doc.is_object()) throw ParseError("poset file must contain a JSON object", 1);
  if (!doc.contains("elements") || !doc["elements"].is_array()) throw ParseError("missing \"elements\" array", 1);
  if (!doc.contains("covers") || !doc["covers"].is_array()) throw ParseError("missing \"covers\" array", 1);

  std::vector<std::string> labels;
  std::map<std::string, int> index;
  for (const auto& e : doc["elements"]) {
    std::string name;
    try {
      name = element_name(e);
    } catch (const ParseError&) {
      throw ParseError("element names must be strings or integers", line_of(text, "elements", e.dump()));
    }
    if (!index.emplace(name, static_cast<int>(labels.size())).second) {
      throw ParseError("duplicate element \"" + name + "\"", line_of(text, "elements", name));
    }
    labels.push_back(name);
  }
  auto lookup = [&](const nlohmann::json& v, std::string_view key) {
    std::string name = v.is_string() ? v.get<std::string>() : v.dump();
    auto it = index.find(name);
    if (it == index.end()) throw ParseError("unknown element \"" + name + "\"", line_of(text, key, name));
    return it->second;
  };
  std::vector<std::pair<int, int>> covers;
  for (const auto& c : doc["covers"]) {
    if (!c.is_array() || c.size() != 2) throw ParseError("each cover must be a pair [lower, upper]", line_of(text, "covers", c.is_array() && !c.empty() ? element_name(c[0]) : ""));
    covers.emplace_back(lookup(c[0], "covers"), lookup(c[1], "covers"));
  }
  ParsedPoset out;
  try {
    out.poset = Poset::validated(static_cast<int>(labels.size()), covers, labels);
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid cover relation: ") + e.what(), line_of(text, "covers", ""));
  }
  if (doc.contains("bottom")) out.bottom = lookup(doc["bottom"], "bottom");
  if (doc.contains("ranks")) {
    const auto& r = doc["ranks"];
    if (!r.is_object()) throw ParseError("\"ranks\" must be an object", line_of(text, "ranks", ""));
    std::vector<int> ranks(labels.size(), -1);
    for (auto it = r.begin(); it != r.end(); ++it) {
      auto found = index.find(it.key());
      if (found == index.end()) throw ParseError("unknown element \"" + it.key() + "\" in ranks", line_of(text, "ranks", it.key()));
      if (!it.value().is_number_integer()) throw ParseError("rank of \"" + it.key() + "\" must be an integer", line_of(text, "ranks", it.key()));
      ranks[static_cast<std::size_t>(found->second)] = it.value().get<int>();
    }
    for (std::size_t i = 0; i < ranks.size(); ++i)
      if (ranks[i] < 0) throw ParseError("missing or negative rank for \"" + labels[i] + "\"", line_of(text, "ranks", ""));
    out.ranks = std::move(ranks);
  }
  return out;
}

}  // namespace

Poset poset_from_json(std::string_view text) { return parse_poset_json(text).poset; }

GradedBoundedPoset graded_poset_from_json(std::string_view text) {
  ParsedPoset parsed = parse_poset_json(text);
  return GradedBoundedPoset(std::move(parsed.poset), parsed.bottom, std::move(parsed.ranks));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace chainpoly
