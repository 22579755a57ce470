#include "doctest.h"

#include "dm/gf2.hpp"
#include "dm/ops.hpp"
#include "dm/twist_poly.hpp"
#include "helpers.hpp"

using namespace dm;
using dmtest::dmat;
using dmtest::sub;

namespace {

TwistPolynomial poly(std::initializer_list<std::pair<int, std::uint64_t>> terms) {
  TwistPolynomial p;
  for (auto [e, c] : terms) p.add(e, c);
  return p;
}

template <typename Fn>
void for_each_matrix_system(int n, Fn fn) {
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << upper_bit_count(n)); ++code) {
    fn(delta_matroid_of_matrix(Gf2SymMatrix::from_upper_bits(n, code)));
  }
}

}  // namespace

TEST_CASE("polynomial arithmetic and text form") {
  TwistPolynomial p = poly({{2, 2}, {0, 2}});
  CHECK(p.str() == "2*z^2 + 2");
  CHECK(poly({{1, 2}}).str() == "2*z");
  CHECK(poly({{0, 1}}).str() == "1");
  CHECK(poly({{2, 2}, {1, 2}}).str() == "2*z^2 + 2*z");
  CHECK(TwistPolynomial{}.str() == "0");

  CHECK(p.coefficient(2) == 2);
  CHECK(p.coefficient(1) == 0);
  CHECK(p.coefficient_sum() == 4);

  CHECK(poly({{1, 2}}) * poly({{2, 8}}) == poly({{3, 16}}));
  CHECK(poly({{1, 1}, {0, 1}}) * poly({{1, 1}, {0, 1}}) ==
        poly({{2, 1}, {1, 2}, {0, 1}}));
}

TEST_CASE("monomial detection") {
  CHECK(is_monomial(poly({{1, 2}})) == std::pair<std::uint64_t, int>{2, 1});
  CHECK(is_monomial(poly({{0, 1}})) == std::pair<std::uint64_t, int>{1, 0});
  CHECK(!is_monomial(poly({{2, 2}, {0, 2}})));
  CHECK(!is_monomial(TwistPolynomial{}));
}

TEST_CASE("twist polynomial, definitional route: worked examples") {
  CHECK(twist_polynomial_naive(dmat({"1"}, {{}, {0}})) == poly({{1, 2}}));
  CHECK(twist_polynomial_naive(dmat({}, {{}})) == poly({{0, 1}}));
  CHECK(twist_polynomial_naive(dmat({"1", "2"}, {{}, {0, 1}})) == poly({{2, 2}, {0, 2}}));
  // works on non-normal input
  CHECK(twist_polynomial_naive(dmat({"1", "2"}, {{0}, {1}})) == poly({{2, 2}, {0, 2}}));
}

TEST_CASE("restriction width table: worked examples") {
  DeltaMatroid k3 = dmat({"1", "2", "3"}, {{}, {0, 1}, {0, 2}, {1, 2}});
  RestrictionWidthTable t = restriction_width_table(k3);
  CHECK(t.maxcard(0b011) == 2);
  CHECK(t.maxcard(0b001) == 0);
  CHECK(t.maxcard(0b111) == 2);
  CHECK(t.maxcard(0) == 0);

  RestrictionWidthTable single = restriction_width_table(dmat({"1"}, {{}, {0}}));
  CHECK(single.maxcard(0b1) == 1);
  CHECK(single.maxcard(0) == 0);

  CHECK_THROWS_AS(restriction_width_table(dmat({"1"}, {{0}})), std::invalid_argument);
}

TEST_CASE("restriction width table: monotone, matches direct maximum, n <= 4") {
  for (int n = 0; n <= 4; ++n) {
    for_each_matrix_system(n, [&](const DeltaMatroid& d) {
      RestrictionWidthTable t = restriction_width_table(d);
      CHECK(t.maxcard(low_bits(n)) == rank_bounds(d).r_max);
      for (Mask a = 0; a < (Mask{1} << n); ++a) {
        int direct = -1;
        for (const Subset& f : d.feasible()) {
          if ((f.bits() & ~a) == 0) direct = std::max(direct, f.card());
        }
        CHECK(t.maxcard(a) == direct);
        for (int i = 0; i < n; ++i) {  // monotone under adding one element
          if (!(a & bit(i))) CHECK(t.maxcard(a | bit(i)) >= t.maxcard(a));
        }
      }
    });
  }
}

TEST_CASE("twist polynomial, fast route: worked examples") {
  CHECK(twist_polynomial_fast(dmat({"1", "2", "3"}, {{}, {0, 1}, {0, 2}, {1, 2}})) ==
        poly({{2, 8}}));
  CHECK(twist_polynomial_fast(dmat({"1", "2"}, {{}, {0}, {0, 1}})) ==
        poly({{2, 2}, {1, 2}}));
  CHECK(twist_polynomial_fast(dmat({"1"}, {{}, {0}})) == poly({{1, 2}}));
  CHECK_THROWS_AS(twist_polynomial_fast(dmat({"1", "2"}, {{0}, {1}})),
                  std::invalid_argument);
}

TEST_CASE("fast and definitional routes are bit-identical on matrix systems, n <= 5") {
  for (int n = 0; n <= 5; ++n) {
    for_each_matrix_system(n, [](const DeltaMatroid& d) {
      CHECK(twist_polynomial_fast(d) == twist_polynomial_naive(d));
    });
  }
}

TEST_CASE("width decomposition under twisting, n <= 4") {
  // Definitional width of d*a versus the two restriction widths.
  for (int n = 0; n <= 4; ++n) {
    for_each_matrix_system(n, [&](const DeltaMatroid& d) {
      RestrictionWidthTable t = restriction_width_table(d);
      const Mask full = low_bits(n);
      for (Mask a = 0; a < (Mask{1} << n); ++a) {
        CHECK(width(twist(d, Subset(a, n))) == t.maxcard(a) + t.maxcard(full & ~a));
      }
    });
  }
}

TEST_CASE("twist invariance of the polynomial, n <= 4") {
  for (int n = 0; n <= 4; ++n) {
    for_each_matrix_system(n, [&](const DeltaMatroid& d) {
      TwistPolynomial base = twist_polynomial_naive(d);
      for (Mask a = 0; a < (Mask{1} << n); ++a) {
        CHECK(twist_polynomial_naive(twist(d, Subset(a, n))) == base);
      }
    });
  }
}

TEST_CASE("direct sums multiply polynomials, n1+n2 <= 5") {
  for (int n1 = 1; n1 <= 4; ++n1) {
    for (int n2 = 1; n1 + n2 <= 5; ++n2) {
      for_each_matrix_system(n1, [&](const DeltaMatroid& d1) {
        TwistPolynomial p1 = twist_polynomial_naive(d1);
        for_each_matrix_system(n2, [&](const DeltaMatroid& d2) {
          DeltaMatroid s = direct_sum(d1, d2, LabelCollision::suffix);
          CHECK(twist_polynomial_naive(s) == p1 * twist_polynomial_naive(d2));
        });
      });
    }
  }
}

TEST_CASE("loop-vertex times triangle: 2z * 8z^2 = 16z^3") {
  DeltaMatroid loop1 = dmat({"1"}, {{}, {0}});
  DeltaMatroid k3 = dmat({"a", "b", "c"}, {{}, {0, 1}, {0, 2}, {1, 2}});
  TwistPolynomial left = twist_polynomial_naive(loop1) * twist_polynomial_naive(k3);
  TwistPolynomial right = twist_polynomial_naive(direct_sum(loop1, k3));
  CHECK(left == right);
  CHECK(left == poly({{3, 16}}));
  CHECK(left.str() == "16*z^3");
}

TEST_CASE("coefficient mass is 2^n, n <= 4") {
  for (int n = 0; n <= 4; ++n) {
    for_each_matrix_system(n, [&](const DeltaMatroid& d) {
      TwistPolynomial p = twist_polynomial_naive(d);
      CHECK(p.coefficient_sum() == std::uint64_t{1} << n);
      for (const auto& [exp, coef] : p.terms()) {
        CHECK(coef > 0);
        CHECK(exp <= n);
        CHECK(exp >= 0);
      }
    });
  }
}

TEST_CASE("subset-lattice size caps") {
  DeltaMatroid tall = DeltaMatroid::validated(
      SetSystem(GroundSet::numbered(21), {Subset::empty(21)}));
  CHECK_THROWS_AS(twist_polynomial_naive(tall), std::invalid_argument);
  CHECK_THROWS_AS(twist_polynomial_fast(tall), std::invalid_argument);
  CHECK_THROWS_AS(restriction_width_table(tall), std::invalid_argument);
  CHECK_THROWS_AS(is_normal_binary(tall), std::invalid_argument);
  CHECK_THROWS_AS(delta_matroid_of_matrix(Gf2SymMatrix::zero(GroundSet::numbered(21))),
                  std::invalid_argument);
}

TEST_CASE("normalize: worked examples") {
  auto [norm, witness] = normalize(dmat({"1", "2"}, {{0}, {1}}));
  CHECK(witness == sub({0}, 2));
  CHECK(norm == dmat({"1", "2"}, {{}, {0, 1}}));

  DeltaMatroid already = dmat({"1"}, {{}, {0}});
  auto [same, empty_witness] = normalize(already);
  CHECK(same == already);
  CHECK(empty_witness == Subset::empty(1));

  auto [flipped, full_witness] = normalize(dmat({"1"}, {{0}}));
  CHECK(flipped == dmat({"1"}, {{}}));
  CHECK(full_witness == sub({0}, 1));

  // polynomial preserved
  DeltaMatroid odd = dmat({"1", "2", "3"}, {{0}, {1}, {0, 1, 2}});
  CHECK(twist_polynomial_naive(normalize(odd).first) == twist_polynomial_naive(odd));
}
