#pragma once

// Ground sets and machine-word subset masks. A ground set is an ordered list
// of distinct element labels (at most 64, one bit per element); a Subset is a
// bitmask over such a ground set, with bit i standing for label i.

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace dm {

using Mask = std::uint64_t;

inline constexpr int kMaxGroundSize = 64;   // one machine word per subset
inline constexpr int kMaxLatticeSize = 20;  // 2^n tables materialized up to here

constexpr Mask bit(int i) { return Mask{1} << i; }

constexpr Mask low_bits(int n) {
  return n >= kMaxGroundSize ? ~Mask{0} : (Mask{1} << n) - 1;
}

constexpr int card(Mask a) { return std::popcount(a); }

/// Thrown on malformed text input (set-system files, matrix files, subset
/// literals on the command line).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ordered list of distinct element labels. Labels may not contain
/// whitespace, braces, commas or '#', so every label survives the text
/// formats unescaped.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels);

  /// Labels "1", "2", ..., "n".
  static GroundSet numbered(int n);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
  std::optional<int> index_of(std::string_view name) const;
  Mask full_mask() const { return low_bits(size()); }

  friend bool operator==(const GroundSet& a, const GroundSet& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
};

/// A subset of a ground set, as a bitmask plus the universe width it lives
/// in. Binary operations require equal widths; the width stands in for the
/// ground set itself (masks do not carry labels).
class Subset {
 public:
  constexpr Subset() = default;
  Subset(Mask bits, int width);

  static Subset empty(int width) { return Subset(0, width); }
  static Subset full(int width) { return Subset(low_bits(width), width); }

  Mask bits() const { return bits_; }
  int width() const { return width_; }
  int card() const { return std::popcount(bits_); }
  bool is_empty() const { return bits_ == 0; }
  bool contains(int i) const { return (bits_ >> i) & 1; }

  bool subset_of(const Subset& o) const;
  bool intersects(const Subset& o) const;

  Subset operator^(const Subset& o) const;  // symmetric difference
  Subset operator&(const Subset& o) const;
  Subset operator|(const Subset& o) const;
  Subset complement() const { return Subset(~bits_ & low_bits(width_), width_); }

  friend bool operator==(const Subset&, const Subset&) = default;

 private:
  Mask bits_ = 0;
  int width_ = 0;

  void check_same_width(const Subset& o) const;
};

/// Elements in exactly one of the two sets (bitwise XOR). Same as operator^;
/// kept as a named function since it is the workhorse of the whole library.
Subset symmetric_difference(const Subset& a, const Subset& b);

/// Canonical order on subsets of one ground set: by cardinality, then by
/// numeric bit pattern. All feasible families are kept sorted this way.
inline bool canonical_less(const Subset& a, const Subset& b) {
  if (a.card() != b.card()) return a.card() < b.card();
  return a.bits() < b.bits();
}

/// Renders "{a,b}" with elements in ground-set order; "{}" for the empty set.
std::string format_subset(const Subset& a, const GroundSet& g);

/// Parses "{}" or "{a,b,c}" (spaces around names tolerated) against g.
Subset parse_subset(std::string_view text, const GroundSet& g);

/// Packs the bits of m selected by `selector` into the low bits of the
/// result, preserving order (software PEXT).
Mask compress_bits(Mask m, Mask selector);

}  // namespace dm
