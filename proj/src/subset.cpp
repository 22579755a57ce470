#include "dm/subset.hpp"

#include <algorithm>
#include <sstream>

namespace dm {

namespace {

bool valid_label(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c == '{' || c == '}' || c == ',' || c == '#') return false;
    if (std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() > static_cast<std::size_t>(kMaxGroundSize)) {
    throw std::invalid_argument("ground set exceeds " + std::to_string(kMaxGroundSize) +
                                " elements");
  }
  index_.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!valid_label(labels_[i])) {
      throw std::invalid_argument("invalid element label '" + labels_[i] + "'");
    }
    auto [_, inserted] = index_.emplace(labels_[i], static_cast<int>(i));
    if (!inserted) {
      throw std::invalid_argument("duplicate element label '" + labels_[i] + "'");
    }
  }
}

GroundSet GroundSet::numbered(int n) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return GroundSet(std::move(labels));
}

std::optional<int> GroundSet::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  return it == index_.end() ? std::nullopt : std::optional<int>(it->second);
}

Subset::Subset(Mask bits, int width) : bits_(bits), width_(width) {
  if (width < 0 || width > kMaxGroundSize) {
    throw std::invalid_argument("subset width out of range");
  }
  if ((bits & ~low_bits(width)) != 0) {
    throw std::invalid_argument("subset has bits outside its ground set");
  }
}

void Subset::check_same_width(const Subset& o) const {
  if (width_ != o.width_) {
    throw std::invalid_argument("subsets live over different ground sets");
  }
}

bool Subset::subset_of(const Subset& o) const {
  check_same_width(o);
  return (bits_ & ~o.bits_) == 0;
}

bool Subset::intersects(const Subset& o) const {
  check_same_width(o);
  return (bits_ & o.bits_) != 0;
}

Subset Subset::operator^(const Subset& o) const {
  check_same_width(o);
  return Subset(bits_ ^ o.bits_, width_);
}

Subset Subset::operator&(const Subset& o) const {
  check_same_width(o);
  return Subset(bits_ & o.bits_, width_);
}

Subset Subset::operator|(const Subset& o) const {
  check_same_width(o);
  return Subset(bits_ | o.bits_, width_);
}

Subset symmetric_difference(const Subset& a, const Subset& b) { return a ^ b; }

std::string format_subset(const Subset& a, const GroundSet& g) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < g.size(); ++i) {
    if (!a.contains(i)) continue;
    if (!first) out += ',';
    out += g.label(i);
    first = false;
  }
  out += '}';
  return out;
}

Subset parse_subset(std::string_view text, const GroundSet& g) {
  std::string_view s = trim(text);
  if (s.size() < 2 || s.front() != '{' || s.back() != '}') {
    throw ParseError("expected a set written {a,b,...}, got '" + std::string(text) + "'");
  }
  s = trim(s.substr(1, s.size() - 2));
  Mask bits = 0;
  if (!s.empty()) {
    std::size_t pos = 0;
    while (true) {
      std::size_t comma = s.find(',', pos);
      std::string_view name = trim(s.substr(pos, comma == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : comma - pos));
      if (name.empty()) throw ParseError("empty element name in set");
      auto idx = g.index_of(name);
      if (!idx) throw ParseError("unknown element '" + std::string(name) + "'");
      bits |= bit(*idx);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  }
  return Subset(bits, g.size());
}

Mask compress_bits(Mask m, Mask selector) {
  Mask out = 0;
  int k = 0;
  while (selector != 0) {
    Mask lsb = selector & (~selector + 1);
    if (m & lsb) out |= Mask{1} << k;
    ++k;
    selector ^= lsb;
  }
  return out;
}

}  // namespace dm
