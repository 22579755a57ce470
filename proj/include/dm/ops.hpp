#pragma once

// The delta-matroid operation algebra: twist, dual, direct sum, single
// element deletion/contraction, restriction, rank bounds and width, element
// classification (loop/coloop/ribbon loop), and definitional connectivity.
// All functions are pure; results reuse DeltaMatroid::trusted because closure
// of each construction is a theorem (re-checked in debug builds).

#include <optional>

#include "dm/set_system.hpp"

namespace dm {

/// Smallest and largest feasible cardinalities. The feasible sets of minimum
/// (maximum) cardinality form the bases of the lower (upper) matroid; width
/// is the rank gap between them.
struct RankBounds {
  int r_min = 0;
  int r_max = 0;
  int width() const { return r_max - r_min; }
};

struct ElementKind {
  bool is_loop = false;         // in no feasible set
  bool is_coloop = false;       // in every feasible set
  bool is_ribbon_loop = false;  // in no minimum-cardinality feasible set
  // Present iff ribbon loop; false means e is also a ribbon loop of d*e.
  std::optional<bool> orientable;
};

enum class LabelCollision { error, suffix };

/// Replaces every feasible set x by a^x. Involution; composition of twists
/// is the twist by the symmetric difference.
DeltaMatroid twist(const DeltaMatroid& d, const Subset& a);

/// Twist by the full ground set.
DeltaMatroid dual(const DeltaMatroid& d);

/// Disjoint union of ground sets; feasible sets are all unions of one
/// feasible set from each side. Colliding labels are an error unless
/// LabelCollision::suffix is passed, which renames collisions on the right
/// operand ("x" -> "x_2", "x_3", ...).
DeltaMatroid direct_sum(const DeltaMatroid& d1, const DeltaMatroid& d2,
                        LabelCollision on_collision = LabelCollision::error);

/// Removes element e. Keeps the feasible sets avoiding e when e is not a
/// coloop; strips e from every feasible set when it is. Deletion order over
/// several elements does not matter.
DeltaMatroid delete_element(const DeltaMatroid& d, int e);

/// Contracts element e. Keeps {f \ e : e in f} when e is not a loop; keeps
/// the family unchanged when it is. Dual to deletion: contracting e in d
/// equals dualizing, deleting e, dualizing back (debug-asserted).
DeltaMatroid contract_element(const DeltaMatroid& d, int e);

/// Deletes every element outside a. For normal d this is the subset filter
/// {f feasible : f within a} on the ground set a (debug-asserted).
DeltaMatroid restrict_to(const DeltaMatroid& d, const Subset& a);

RankBounds rank_bounds(const DeltaMatroid& d);
int width(const DeltaMatroid& d);

ElementKind element_kind(const DeltaMatroid& d, int e);

/// True iff d is not a direct sum of two nontrivial delta-matroids. Brute
/// force over all 2^(n-1)-1 bipartitions of the ground set, testing whether
/// the family equals the product of its two projections. Throws on trivial
/// input. Works for non-binary delta-matroids; the intersection-graph
/// shortcut is only a cross-check elsewhere.
bool is_connected(const DeltaMatroid& d);

}  // namespace dm
