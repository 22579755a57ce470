#include "dm/classify.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <thread>

namespace dm {

namespace {

// Vertex partition of g into connected components, as sorted index lists.
std::vector<std::vector<int>> component_index_sets(const LoopyGraph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (auto [u, v] : g.edges) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<int> stack{s};
    std::vector<int> comp;
    seen[static_cast<std::size_t>(s)] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

LoopyGraph induced_subgraph(const LoopyGraph& g, const std::vector<int>& verts) {
  LoopyGraph sub;
  std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    local[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);
    sub.vertices.push_back(g.vertices[static_cast<std::size_t>(verts[i])]);
    if (g.has_loop(verts[i])) sub.loops |= bit(static_cast<int>(i));
  }
  for (auto [u, v] : g.edges) {
    int lu = local[static_cast<std::size_t>(u)];
    int lv = local[static_cast<std::size_t>(v)];
    if (lu >= 0 && lv >= 0) sub.edges.emplace_back(std::min(lu, lv), std::max(lu, lv));
  }
  std::sort(sub.edges.begin(), sub.edges.end());
  return sub;
}

}  // namespace

std::string shape_name(const ComponentShape& s) {
  switch (s.kind) {
    case ShapeKind::complete_odd_loopless:
      return "complete-odd order " + std::to_string(s.order);
    case ShapeKind::single_vertex_loop:
      return "loop-vertex";
    case ShapeKind::other:
      return "other order " + std::to_string(s.order);
  }
  return "?";
}

std::vector<LoopyGraph> connected_components(const LoopyGraph& g) {
  std::vector<LoopyGraph> out;
  for (const auto& comp : component_index_sets(g)) out.push_back(induced_subgraph(g, comp));
  return out;
}

ComponentShape component_shape(const LoopyGraph& g) {
  if (component_index_sets(g).size() != 1) {
    throw std::invalid_argument("component shape of a disconnected graph");
  }
  const int n = g.order();
  ComponentShape s{ShapeKind::other, n};
  if (n == 1) {
    s.kind = g.loops ? ShapeKind::single_vertex_loop : ShapeKind::complete_odd_loopless;
    return s;
  }
  if (g.loops == 0 && n % 2 == 1 &&
      g.edges.size() == static_cast<std::size_t>(n) * (n - 1) / 2) {
    s.kind = ShapeKind::complete_odd_loopless;
  }
  return s;
}

bool predicts_monomial(const Gf2SymMatrix& c) {
  for (const LoopyGraph& comp : connected_components(intersection_graph(c))) {
    if (component_shape(comp).kind == ShapeKind::other) return false;
  }
  return true;
}

CrossCheck cross_check(const Gf2SymMatrix& c) {
  CrossCheck out;
  out.predicted = predicts_monomial(c);
  out.polynomial = twist_polynomial_fast(delta_matroid_of_matrix(c));
  out.actual = out.polynomial.monomial().has_value();
  return out;
}

namespace {

bool ribbon_loop_of(const DeltaMatroid& d, int e) { return element_kind(d, e).is_ribbon_loop; }

void check_ribbon_extension(const Gf2SymMatrix& c, const DeltaMatroid& d,
                            std::vector<PropertyFailure>& out) {
  const int n = d.size();
  const int r = rank_bounds(d).r_min;
  for (int e = 0; e < n; ++e) {
    ElementKind k = element_kind(d, e);
    if (!k.is_ribbon_loop || k.orientable.value_or(true)) continue;
    for (Mask f = 0; f < (Mask{1} << n); ++f) {
      if (f & bit(e)) continue;
      const bool min_basis = d.is_feasible(f) && card(f) == r;
      const bool extended = d.is_feasible(f | bit(e)) && card(f) == r;  // |F+e| = r+1
      if (min_basis != extended) {
        out.push_back({"ribbon-extension",
                       "e=" + c.labels().label(e) + " F=" +
                           format_subset(Subset(f, n), d.ground()) +
                           (min_basis ? " is a minimum feasible set but F+e fails"
                                      : " is not, yet F+e is feasible at rank r_min+1")});
      }
    }
  }
}

void check_contraction_nonribbon(const Gf2SymMatrix& c, const DeltaMatroid& d,
                                 std::vector<PropertyFailure>& out) {
  const int n = d.size();
  for (int e = 0; e < n; ++e) {
    ElementKind ke = element_kind(d, e);
    if (!ke.is_ribbon_loop || ke.orientable.value_or(true)) continue;
    DeltaMatroid contracted = contract_element(d, e);
    for (int f = 0; f < n; ++f) {
      if (f == e || ribbon_loop_of(d, f)) continue;
      const int f_after = f - (f > e ? 1 : 0);
      if (ribbon_loop_of(contracted, f_after)) {
        out.push_back({"contraction-nonribbon",
                       "contracting e=" + c.labels().label(e) + " turned f=" +
                           c.labels().label(f) + " into a ribbon loop"});
      }
    }
  }
}

void check_dual_ribbon_transfer(const Gf2SymMatrix& c, const DeltaMatroid& d,
                                std::vector<PropertyFailure>& out) {
  const int n = d.size();
  const int w = width(d);
  DeltaMatroid d_star = dual(d);
  for (int e = 0; e < n; ++e) {
    if (width(twist(d, Subset(bit(e), n))) != w) continue;
    ElementKind k = element_kind(d, e);
    if (!k.is_ribbon_loop) continue;
    ElementKind kd = element_kind(d_star, e);
    if (*k.orientable) {
      if (kd.is_ribbon_loop) {
        out.push_back({"dual-ribbon-transfer",
                       "orientable ribbon loop e=" + c.labels().label(e) +
                           " stayed a ribbon loop in the dual"});
      }
    } else {
      if (!kd.is_ribbon_loop || kd.orientable.value_or(true)) {
        out.push_back({"dual-ribbon-transfer",
                       "non-orientable ribbon loop e=" + c.labels().label(e) +
                           " is not a non-orientable ribbon loop of the dual"});
      }
    }
  }
}

void check_odd_connected_monomial(const DeltaMatroid& d, std::vector<PropertyFailure>& out) {
  DmFlags flags = d.flags();
  if (flags.trivial || flags.even) return;
  if (!twist_polynomial_fast(d).monomial()) return;
  if (!is_connected(d)) return;
  const bool minimal = d.size() == 1 && d.feasible().size() == 2 &&
                       d.feasible()[0].bits() == 0 && d.feasible()[1].bits() == 1;
  if (!minimal) {
    out.push_back({"odd-connected-monomial",
                   "connected odd system of order " + std::to_string(d.size()) +
                       " has a one-term polynomial"});
  }
}

}  // namespace

std::vector<PropertyFailure> verify_properties(const Gf2SymMatrix& c) {
  if (c.size() > 12) {
    throw std::invalid_argument("property verification capped at 12 elements");
  }
  DeltaMatroid d = delta_matroid_of_matrix(c);
  std::vector<PropertyFailure> out;
  check_ribbon_extension(c, d, out);
  check_contraction_nonribbon(c, d, out);
  check_dual_ribbon_transfer(c, d, out);
  check_odd_connected_monomial(d, out);
  return out;
}

VerificationReport run_verify_order(int n, int jobs) {
  if (n < 1 || n > 6) throw std::invalid_argument("verification order must be in 1..6");
  if (jobs < 1) throw std::invalid_argument("need at least one worker");

  const std::uint64_t total = std::uint64_t{1} << upper_bit_count(n);
  const int workers = static_cast<int>(std::min<std::uint64_t>(jobs, total));

  struct Partial {
    std::uint64_t monomials = 0;
    std::vector<Counterexample> counterexamples;
    std::vector<ReportedPropertyFailure> property_failures;
  };
  std::vector<Partial> partials(static_cast<std::size_t>(workers));

  auto work = [&](int w, std::uint64_t begin, std::uint64_t end) {
    Partial& p = partials[static_cast<std::size_t>(w)];
    for (std::uint64_t code = begin; code < end; ++code) {
      Gf2SymMatrix c = Gf2SymMatrix::from_upper_bits(n, code);
      CrossCheck cc = cross_check(c);
      if (cc.actual) ++p.monomials;
      if (cc.predicted != cc.actual) {
        p.counterexamples.push_back({c, cc.polynomial,
                                     twist_polynomial_naive(delta_matroid_of_matrix(c)),
                                     cc.predicted, cc.actual});
      }
      for (PropertyFailure& f : verify_properties(c)) {
        p.property_failures.push_back({c, std::move(f)});
      }
    }
  };

  if (workers == 1) {
    work(0, 0, total);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    const std::uint64_t chunk = total / static_cast<std::uint64_t>(workers);
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t begin = chunk * static_cast<std::uint64_t>(w);
      const std::uint64_t end = w + 1 == workers ? total : begin + chunk;
      threads.emplace_back(work, w, begin, end);
    }
    for (std::thread& t : threads) t.join();
  }

  VerificationReport report;
  report.n = n;
  report.matrices_checked = total;
  for (Partial& p : partials) {  // merge in range order: deterministic for any job count
    report.monomial_count += p.monomials;
    std::move(p.counterexamples.begin(), p.counterexamples.end(),
              std::back_inserter(report.counterexamples));
    std::move(p.property_failures.begin(), p.property_failures.end(),
              std::back_inserter(report.property_failures));
  }
  return report;
}

std::vector<VerificationReport> run_verify(int n_max, int jobs) {
  if (n_max < 1 || n_max > 6) throw std::invalid_argument("verification order must be in 1..6");
  std::vector<VerificationReport> reports;
  reports.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) reports.push_back(run_verify_order(n, jobs));
  return reports;
}

}  // namespace dm
