#include "dm/twist_poly.hpp"

#include <algorithm>
#include <cassert>

#include "dm/ops.hpp"

namespace dm {

void TwistPolynomial::add(int exp, std::uint64_t coef) {
  if (coef == 0) return;
  terms_[exp] += coef;
}

std::uint64_t TwistPolynomial::coefficient(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? 0 : it->second;
}

std::uint64_t TwistPolynomial::coefficient_sum() const {
  std::uint64_t total = 0;
  for (const auto& [_, coef] : terms_) total += coef;
  return total;
}

std::optional<std::pair<std::uint64_t, int>> TwistPolynomial::monomial() const {
  if (terms_.size() != 1) return std::nullopt;
  const auto& [exp, coef] = *terms_.begin();
  return std::pair{coef, exp};
}

TwistPolynomial TwistPolynomial::operator*(const TwistPolynomial& o) const {
  TwistPolynomial out;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) out.add(e1 + e2, c1 * c2);
  }
  return out;
}

std::string TwistPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    const auto [exp, coef] = *it;
    out += std::to_string(coef);
    if (exp == 1) {
      out += "*z";
    } else if (exp > 1) {
      out += "*z^" + std::to_string(exp);
    }
  }
  return out;
}

TwistPolynomial twist_polynomial_naive(const DeltaMatroid& d) {
  const int n = d.size();
  if (n > kMaxLatticeSize) {
    throw std::invalid_argument("twist polynomial capped at 20 elements");
  }
  TwistPolynomial p;
  for (Mask a = 0; a < (Mask{1} << n); ++a) {
    int lo = n + 1, hi = -1;
    for (const Subset& f : d.feasible()) {
      const int c = card(a ^ f.bits());
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
    p.add(hi - lo, 1);
  }
  return p;
}

RestrictionWidthTable::RestrictionWidthTable(int n, std::vector<std::int8_t> maxcard)
    : n_(n), maxcard_(std::move(maxcard)) {
  assert(maxcard_.size() == (std::size_t{1} << n_));
}

RestrictionWidthTable restriction_width_table(const DeltaMatroid& d) {
  const int n = d.size();
  if (n > kMaxLatticeSize) {
    throw std::invalid_argument("restriction width table capped at 20 elements");
  }
  if (!d.flags().normal) {
    throw std::invalid_argument("restriction width table requires a normal delta-matroid");
  }
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::int8_t> table(size, -1);
  for (const Subset& f : d.feasible()) {
    table[f.bits()] = static_cast<std::int8_t>(f.card());
  }
  // Sum-over-supersets sweep: push each feasible cardinality up to every
  // superset, one bit dimension at a time.
  for (int i = 0; i < n; ++i) {
    const Mask b = bit(i);
    for (Mask a = 0; a < size; ++a) {
      if (a & b) table[a] = std::max(table[a], table[a ^ b]);
    }
  }
  // Normality puts the empty set everywhere, so every entry is >= 0.
  assert(table[0] == 0);
  return RestrictionWidthTable(n, std::move(table));
}

TwistPolynomial twist_polynomial_fast(const DeltaMatroid& d) {
  if (!d.flags().normal) {
    throw std::invalid_argument(
        "fast twist polynomial requires a normal delta-matroid; normalize first");
  }
  const int n = d.size();
  RestrictionWidthTable t = restriction_width_table(d);
  const Mask full = low_bits(n);
  std::vector<std::uint64_t> tally(static_cast<std::size_t>(n) + 1, 0);
  for (Mask a = 0; a <= full; ++a) {
    ++tally[static_cast<std::size_t>(t.maxcard(a) + t.maxcard(full & ~a))];
  }
  TwistPolynomial p;
  for (int k = 0; k <= n; ++k) p.add(k, tally[static_cast<std::size_t>(k)]);
  return p;
}

std::pair<DeltaMatroid, Subset> normalize(const DeltaMatroid& d) {
  const Subset f0 = d.feasible().front();  // canonical least: smallest, then lowest bits
  return {twist(d, f0), f0};
}

std::optional<std::pair<std::uint64_t, int>> is_monomial(const TwistPolynomial& p) {
  return p.monomial();
}

}  // namespace dm
