#pragma once

// Set systems (ground set + feasible family), the symmetric exchange axiom
// check with witness reporting, and the validated DeltaMatroid wrapper.
// The text format lives here too: parse_set_system / serialize.

#include <cassert>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "dm/subset.hpp"

namespace dm {

struct DmFlags {
  bool proper = false;   // feasible family nonempty
  bool trivial = false;  // empty ground set
  bool normal = false;   // empty set feasible
  bool even = false;     // all feasible cardinalities share parity
};

/// A ground set plus a deduplicated feasible family in canonical order
/// (cardinality, then bit pattern). Membership queries are O(1): an explicit
/// 2^n-bit indicator when n <= kMaxLatticeSize, a hash set above that.
/// Immutable after construction; safe to share across threads.
class SetSystem {
 public:
  SetSystem(GroundSet ground, std::vector<Subset> feasible);

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }
  const std::vector<Subset>& feasible() const { return feasible_; }

  bool is_feasible(const Subset& a) const;
  bool is_feasible(Mask bits) const;  // bits must lie within the ground set

  DmFlags flags() const;

  friend bool operator==(const SetSystem& a, const SetSystem& b) {
    return a.ground_ == b.ground_ && a.feasible_ == b.feasible_;
  }

 private:
  GroundSet ground_;
  std::vector<Subset> feasible_;
  std::vector<std::uint64_t> lattice_;  // indicator over all 2^n subsets, n <= 20
  std::unordered_set<Mask> members_;    // fallback for 20 < n <= 64
};

DmFlags classify_flags(const SetSystem& s);

/// Why a set system failed validation: either the family is empty, or the
/// triple (x, y, u) admits no v in x^y with x^{u,v} feasible.
struct ExchangeWitness {
  bool empty_family = false;
  Subset x, y;
  int u = -1;  // element index into the ground set

  std::string describe(const GroundSet& g) const;
};

/// Checks the symmetric exchange axiom over all ordered pairs of feasible
/// sets, in canonical order, and reports the first violation found.
/// Returns nullopt iff s is a delta-matroid. O(|F|^2 n^2).
std::optional<ExchangeWitness> exchange_violation(const SetSystem& s);

inline bool is_delta_matroid(const SetSystem& s) { return !exchange_violation(s).has_value(); }

/// A set system that satisfies the symmetric exchange axiom. Build with
/// validated() to run the axiom check, or trusted() when closure under the
/// construction is a theorem (twists, minors, direct sums, matrix systems);
/// trusted() re-runs the check in debug builds.
class DeltaMatroid {
 public:
  static DeltaMatroid validated(SetSystem s);  // throws std::invalid_argument with witness
  static DeltaMatroid trusted(SetSystem s);

  const SetSystem& system() const { return sys_; }
  const GroundSet& ground() const { return sys_.ground(); }
  int size() const { return sys_.size(); }
  const std::vector<Subset>& feasible() const { return sys_.feasible(); }
  bool is_feasible(const Subset& a) const { return sys_.is_feasible(a); }
  bool is_feasible(Mask bits) const { return sys_.is_feasible(bits); }
  DmFlags flags() const { return sys_.flags(); }

  friend bool operator==(const DeltaMatroid& a, const DeltaMatroid& b) {
    return a.sys_ == b.sys_;
  }

 private:
  explicit DeltaMatroid(SetSystem s) : sys_(std::move(s)) {}
  SetSystem sys_;
};

struct ParsedSetSystem {
  SetSystem system;
  std::vector<std::string> warnings;  // e.g. duplicate feasible lines
};

/// Parses the line-based set-system format:
///   # comment
///   elements: a b c
///   feasible: {}
///   feasible: {a,b}
/// Feasible lines may come in any order; duplicates are dropped with a
/// warning. Throws ParseError on malformed input, unknown element names,
/// duplicate labels, or more than 64 elements.
ParsedSetSystem parse_set_system(std::string_view text);

/// Canonical form: one elements line, then feasible lines sorted by
/// (cardinality, bit pattern). parse(serialize(s)) == s.
std::string serialize(const SetSystem& s);

}  // namespace dm
