#pragma once

// Symmetric matrices over GF(2) with labeled rows/columns, principal
// submatrix rank, the normal delta-matroid D(C) of a matrix, the inverse
// reconstruction C of a normal binary delta-matroid, and intersection
// graphs. Rows are stored as bitmasks; elimination is word-level XOR.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dm/set_system.hpp"

namespace dm {

/// Symmetric 0/1 matrix, rows and columns indexed by one ground set.
/// Immutable; rank computations run on scratch copies of the rows.
class Gf2SymMatrix {
 public:
  Gf2SymMatrix(GroundSet labels, std::vector<Mask> rows);

  static Gf2SymMatrix zero(GroundSet labels);

  /// Decodes the upper triangle (diagonal included) from the low bits of
  /// `code`, entries ordered (0,0),(0,1),...,(0,n-1),(1,1),...,(n-1,n-1).
  /// Counting codes 0..2^(n(n+1)/2)-1 enumerates every symmetric matrix
  /// exactly once, in a reproducible and partitionable order.
  static Gf2SymMatrix from_upper_bits(GroundSet labels, std::uint64_t code);
  static Gf2SymMatrix from_upper_bits(int n, std::uint64_t code);  // labels 1..n

  int size() const { return labels_.size(); }
  const GroundSet& labels() const { return labels_; }
  bool at(int i, int j) const { return (rows_[static_cast<std::size_t>(i)] >> j) & 1; }
  Mask row(int i) const { return rows_[static_cast<std::size_t>(i)]; }
  Mask diagonal() const;

  std::uint64_t upper_bits() const;  // inverse of from_upper_bits

  friend bool operator==(const Gf2SymMatrix& a, const Gf2SymMatrix& b) {
    return a.labels_ == b.labels_ && a.rows_ == b.rows_;
  }

 private:
  GroundSet labels_;
  std::vector<Mask> rows_;
};

/// n(n+1)/2: number of upper-triangle entries of an n x n symmetric matrix.
constexpr int upper_bit_count(int n) { return n * (n + 1) / 2; }

/// True iff the principal submatrix induced by a has full GF(2) rank,
/// by word-level Gaussian elimination on a scratch copy. The empty
/// submatrix counts as non-singular.
bool principal_nonsingular(const Gf2SymMatrix& c, const Subset& a);

/// The normal delta-matroid whose feasible sets are exactly the index sets
/// of non-singular principal submatrices of c. Enumerates all 2^n subsets
/// independently (trustworthy, no incremental pivoting); requires n <= 20.
DeltaMatroid delta_matroid_of_matrix(const Gf2SymMatrix& c);

/// The unique symmetric matrix candidate for a normal delta-matroid d:
/// diagonal from singleton feasibility, off-diagonal from pair feasibility
/// against the singletons. Requires d normal. The result represents d only
/// if the round trip delta_matroid_of_matrix(C) == d holds; see
/// is_normal_binary.
Gf2SymMatrix reconstruct_matrix(const DeltaMatroid& d);

/// Returns C with delta_matroid_of_matrix(C) == d exactly (same labels,
/// same family) when such a matrix exists, nullopt otherwise. By uniqueness
/// of the reconstruction this decides exact normal-binary membership; it
/// does not decide binarity up to twists or isomorphism.
std::optional<Gf2SymMatrix> is_normal_binary(const DeltaMatroid& d);

/// Undirected graph with loops allowed; loops stored apart from edges.
struct LoopyGraph {
  std::vector<std::string> vertices;
  std::vector<std::pair<int, int>> edges;  // i < j, unique, sorted
  Mask loops = 0;                          // bit v set iff loop at v

  int order() const { return static_cast<int>(vertices.size()); }
  bool has_loop(int v) const { return (loops >> v) & 1; }
};

/// Vertex per label; edge {u,v} iff the off-diagonal entry is 1; loop at v
/// iff the diagonal entry is 1.
LoopyGraph intersection_graph(const Gf2SymMatrix& c);

/// Parses the matrix text format: an optional "labels:" line, a line with
/// n, then n lines of n characters from {0,1}. Must be symmetric.
Gf2SymMatrix parse_matrix(std::string_view text);

/// Emits the matrix text format; the labels line appears only when the
/// labels differ from the default 1..n.
std::string serialize(const Gf2SymMatrix& c);

}  // namespace dm
