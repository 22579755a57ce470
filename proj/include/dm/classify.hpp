#pragma once

// The monomial classifier over intersection graphs, its cross-check against
// the polynomial itself, per-matrix structural property suites, and the
// exhaustive census runner over all symmetric GF(2) matrices of a given
// order.
//
// The classifier predicts a one-term twist polynomial exactly when every
// connected component of the intersection graph is a complete loopless graph
// of odd order or a single looped vertex. A lone loopless vertex counts as a
// complete graph of odd order (its system ({e},{{}}) has the monomial 2);
// complete components with any loop classify as "other".

#include <cstdint>
#include <string>
#include <vector>

#include "dm/gf2.hpp"
#include "dm/ops.hpp"
#include "dm/twist_poly.hpp"

namespace dm {

enum class ShapeKind { complete_odd_loopless, single_vertex_loop, other };

struct ComponentShape {
  ShapeKind kind = ShapeKind::other;
  int order = 0;
};

std::string shape_name(const ComponentShape& s);  // "complete-odd order 3", ...

/// Component decomposition; loops stay with their vertex, vertex names are
/// preserved and indices are remapped per component.
std::vector<LoopyGraph> connected_components(const LoopyGraph& g);

/// Shape of one connected graph; throws on disconnected input.
ComponentShape component_shape(const LoopyGraph& g);

/// Graph-side prediction: true iff no component of the intersection graph
/// of c classifies as "other".
bool predicts_monomial(const Gf2SymMatrix& c);

struct CrossCheck {
  bool predicted = false;  // graph side
  bool actual = false;     // polynomial side
  TwistPolynomial polynomial;
};

/// Computes both sides for one matrix: the graph prediction and whether the
/// twist polynomial of D(C) is in fact a monomial. Requires n <= 20.
CrossCheck cross_check(const Gf2SymMatrix& c);

struct PropertyFailure {
  std::string rule;    // which structural property broke
  std::string detail;  // instantiation that broke it
};

/// Instantiates the structural properties of D(C) by brute force and
/// reports every violated conclusion (never throws on violations):
///  - "ribbon-extension": for a non-orientable ribbon loop e, the subsets f
///    of the ground set minus e that are minimum-cardinality feasible sets
///    are exactly those with f+e feasible of cardinality r_min+1;
///  - "contraction-nonribbon": contracting a non-orientable ribbon loop
///    keeps every non-ribbon-loop a non-ribbon-loop;
///  - "dual-ribbon-transfer": when twisting by e preserves width, an
///    orientable ribbon loop e is a non-ribbon-loop of the dual and a
///    non-orientable one stays non-orientable in the dual;
///  - "odd-connected-monomial": a connected odd D(C) with a one-term
///    polynomial is ({1},{{},{1}}).
/// Requires n <= 12.
std::vector<PropertyFailure> verify_properties(const Gf2SymMatrix& c);

struct Counterexample {
  Gf2SymMatrix matrix;
  TwistPolynomial poly_fast;   // fast route
  TwistPolynomial poly_naive;  // definitional route, for self-validation
  bool predicted = false;
  bool actual = false;
};

struct ReportedPropertyFailure {
  Gf2SymMatrix matrix;
  PropertyFailure failure;
};

struct VerificationReport {
  int n = 0;
  std::uint64_t matrices_checked = 0;
  std::uint64_t monomial_count = 0;
  std::vector<Counterexample> counterexamples;
  std::vector<ReportedPropertyFailure> property_failures;

  bool ok() const { return counterexamples.empty() && property_failures.empty(); }
};

/// Runs cross_check and verify_properties over every symmetric n x n matrix
/// (upper-triangle counter order). The range is split across `jobs` workers;
/// partial reports merge in range order, so the result is identical for any
/// job count. Requires 1 <= n <= 6 and jobs >= 1.
VerificationReport run_verify_order(int n, int jobs);

/// run_verify_order for n = 1..n_max.
std::vector<VerificationReport> run_verify(int n_max, int jobs);

}  // namespace dm
