#pragma once

// The twist polynomial: the generating function summing z^{width(d*a)} over
// all 2^n subsets a of the ground set. Two routes: the definitional sweep
// (works for any delta-matroid) and the normal-case fast path built on a
// subset-lattice table of restriction widths.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dm/set_system.hpp"

namespace dm {

/// Sparse exponent -> coefficient map. Coefficients are positive (zero terms
/// are absent) and sum to 2^n for a delta-matroid on n elements; 64-bit
/// coefficients are exact at the enforced n <= 20 cap.
class TwistPolynomial {
 public:
  TwistPolynomial() = default;

  void add(int exp, std::uint64_t coef);
  const std::map<int, std::uint64_t>& terms() const { return terms_; }
  std::uint64_t coefficient(int exp) const;
  std::uint64_t coefficient_sum() const;
  std::size_t term_count() const { return terms_.size(); }

  /// (coefficient, exponent) iff the polynomial has exactly one term.
  std::optional<std::pair<std::uint64_t, int>> monomial() const;

  TwistPolynomial operator*(const TwistPolynomial& o) const;
  friend bool operator==(const TwistPolynomial&, const TwistPolynomial&) = default;

  /// Canonical text: descending exponents, "m*z^k"; exponent 1 drops the
  /// caret ("2*z"), exponent 0 is the bare coefficient ("2"). Example:
  /// "2*z^2 + 2*z".
  std::string str() const;

 private:
  std::map<int, std::uint64_t> terms_;
};

/// Definitional route: for each subset a, the width of d*a is read off the
/// cardinalities of the twisted family directly. Works for non-normal d.
/// Requires n <= 20.
TwistPolynomial twist_polynomial_naive(const DeltaMatroid& d);

/// For every subset a, the largest feasible-set cardinality contained in a
/// (which is the width of the restriction to a when d is normal). Built by
/// subset-lattice dynamic programming in O(2^n * n); monotone under
/// inclusion.
class RestrictionWidthTable {
 public:
  RestrictionWidthTable(int n, std::vector<std::int8_t> maxcard);

  int size() const { return n_; }
  int maxcard(Mask a) const { return maxcard_[a]; }

 private:
  int n_;
  std::vector<std::int8_t> maxcard_;
};

/// Requires d normal, n <= 20.
RestrictionWidthTable restriction_width_table(const DeltaMatroid& d);

/// Fast route for normal d: the width of d*a splits as maxcard(a) +
/// maxcard(complement of a), so one table lookup pair per subset. Output is
/// bit-identical to the naive route on normal inputs. Refuses non-normal
/// input; twist-normalize first (see normalize).
TwistPolynomial twist_polynomial_fast(const DeltaMatroid& d);

/// Twists d by its canonically smallest feasible set f0, yielding a normal
/// delta-matroid with the same twist polynomial. Returns the result and f0.
std::pair<DeltaMatroid, Subset> normalize(const DeltaMatroid& d);

/// (m, k) iff p = m*z^k has exactly one term.
std::optional<std::pair<std::uint64_t, int>> is_monomial(const TwistPolynomial& p);

}  // namespace dm
