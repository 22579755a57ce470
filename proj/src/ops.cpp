#include "dm/ops.hpp"

#include <algorithm>
#include <cassert>
#include <string>
#include <unordered_set>

namespace dm {

namespace {

// Drops bit e and shifts everything above it down one position.
Mask remove_bit(Mask m, int e) {
  const Mask low = low_bits(e);
  return (m & low) | ((m >> 1) & ~low);
}

std::vector<Subset> to_subsets(const std::vector<Mask>& masks, int width) {
  std::vector<Subset> out;
  out.reserve(masks.size());
  for (Mask m : masks) out.emplace_back(m, width);
  return out;
}

GroundSet ground_without(const GroundSet& g, int e) {
  std::vector<std::string> labels = g.labels();
  labels.erase(labels.begin() + e);
  return GroundSet(std::move(labels));
}

void check_element(const DeltaMatroid& d, int e) {
  if (e < 0 || e >= d.size()) {
    throw std::invalid_argument("element index out of range");
  }
}

bool all_contain(const DeltaMatroid& d, int e) {
  for (const Subset& f : d.feasible()) {
    if (!f.contains(e)) return false;
  }
  return true;
}

bool none_contain(const DeltaMatroid& d, int e) {
  for (const Subset& f : d.feasible()) {
    if (f.contains(e)) return false;
  }
  return true;
}

}  // namespace

DeltaMatroid twist(const DeltaMatroid& d, const Subset& a) {
  if (a.width() != d.size()) {
    throw std::invalid_argument("twist mask does not live over the ground set");
  }
  std::vector<Subset> fam;
  fam.reserve(d.feasible().size());
  for (const Subset& x : d.feasible()) fam.push_back(a ^ x);
  return DeltaMatroid::trusted(SetSystem(d.ground(), std::move(fam)));
}

DeltaMatroid dual(const DeltaMatroid& d) { return twist(d, Subset::full(d.size())); }

DeltaMatroid direct_sum(const DeltaMatroid& d1, const DeltaMatroid& d2,
                        LabelCollision on_collision) {
  const int n1 = d1.size();
  const int n2 = d2.size();
  if (n1 + n2 > kMaxGroundSize) {
    throw std::invalid_argument("direct sum exceeds the ground-set cap");
  }

  std::vector<std::string> labels = d1.ground().labels();
  std::unordered_set<std::string> used(labels.begin(), labels.end());
  for (const std::string& l : d2.ground().labels()) {
    std::string name = l;
    if (used.contains(name)) {
      if (on_collision == LabelCollision::error) {
        throw std::invalid_argument("direct sum label collision on '" + l + "'");
      }
      for (int k = 2; used.contains(name); ++k) name = l + "_" + std::to_string(k);
    }
    used.insert(name);
    labels.push_back(std::move(name));
  }

  std::vector<Mask> fam;
  fam.reserve(d1.feasible().size() * d2.feasible().size());
  for (const Subset& f1 : d1.feasible()) {
    for (const Subset& f2 : d2.feasible()) {
      fam.push_back(f1.bits() | (f2.bits() << n1));
    }
  }
  return DeltaMatroid::trusted(
      SetSystem(GroundSet(std::move(labels)), to_subsets(fam, n1 + n2)));
}

DeltaMatroid delete_element(const DeltaMatroid& d, int e) {
  check_element(d, e);
  std::vector<Mask> fam;
  if (all_contain(d, e)) {  // coloop: strip e from every feasible set
    for (const Subset& f : d.feasible()) fam.push_back(remove_bit(f.bits(), e));
  } else {  // keep the feasible sets avoiding e
    for (const Subset& f : d.feasible()) {
      if (!f.contains(e)) fam.push_back(remove_bit(f.bits(), e));
    }
  }
  assert(!fam.empty() && "deletion kept the system proper");
  return DeltaMatroid::trusted(
      SetSystem(ground_without(d.ground(), e), to_subsets(fam, d.size() - 1)));
}

DeltaMatroid contract_element(const DeltaMatroid& d, int e) {
  check_element(d, e);
  std::vector<Mask> fam;
  if (none_contain(d, e)) {  // loop: family unchanged
    for (const Subset& f : d.feasible()) fam.push_back(remove_bit(f.bits(), e));
  } else {
    for (const Subset& f : d.feasible()) {
      if (f.contains(e)) fam.push_back(remove_bit(f.bits(), e));
    }
  }
  DeltaMatroid out = DeltaMatroid::trusted(
      SetSystem(ground_without(d.ground(), e), to_subsets(fam, d.size() - 1)));
  assert(out == dual(delete_element(dual(d), e)) && "contraction is the dual of deletion");
  return out;
}

DeltaMatroid restrict_to(const DeltaMatroid& d, const Subset& a) {
  if (a.width() != d.size()) {
    throw std::invalid_argument("restriction mask does not live over the ground set");
  }
  DeltaMatroid out = d;
  for (int e = d.size() - 1; e >= 0; --e) {  // descending keeps lower indices stable
    if (!a.contains(e)) out = delete_element(out, e);
  }
#ifndef NDEBUG
  if (d.flags().normal) {
    // No coloops exist at any stage for normal d, so restriction is the
    // plain subset filter onto a.
    std::vector<std::string> labels;
    for (int i = 0; i < d.size(); ++i) {
      if (a.contains(i)) labels.push_back(d.ground().label(i));
    }
    std::vector<Mask> fam;
    for (const Subset& f : d.feasible()) {
      if (f.subset_of(a)) fam.push_back(compress_bits(f.bits(), a.bits()));
    }
    assert(out == DeltaMatroid::trusted(SetSystem(GroundSet(std::move(labels)),
                                                  to_subsets(fam, a.card()))));
  }
#endif
  return out;
}

RankBounds rank_bounds(const DeltaMatroid& d) {
  RankBounds rb{d.size(), 0};
  for (const Subset& f : d.feasible()) {
    rb.r_min = std::min(rb.r_min, f.card());
    rb.r_max = std::max(rb.r_max, f.card());
  }
  return rb;
}

int width(const DeltaMatroid& d) { return rank_bounds(d).width(); }

ElementKind element_kind(const DeltaMatroid& d, int e) {
  check_element(d, e);
  ElementKind k;
  k.is_loop = none_contain(d, e);
  k.is_coloop = all_contain(d, e);

  const int r_min = rank_bounds(d).r_min;
  k.is_ribbon_loop = true;
  for (const Subset& f : d.feasible()) {
    if (f.card() == r_min && f.contains(e)) {
      k.is_ribbon_loop = false;
      break;
    }
  }
  if (k.is_ribbon_loop) {
    DeltaMatroid te = twist(d, Subset(bit(e), d.size()));
    const int tr_min = rank_bounds(te).r_min;
    bool ribbon_in_te = true;
    for (const Subset& f : te.feasible()) {
      if (f.card() == tr_min && f.contains(e)) {
        ribbon_in_te = false;
        break;
      }
    }
    k.orientable = !ribbon_in_te;
  }
  return k;
}

bool is_connected(const DeltaMatroid& d) {
  const int n = d.size();
  if (n == 0) throw std::invalid_argument("connectivity of the trivial delta-matroid");
  const Mask full = low_bits(n);
  const std::size_t fam_size = d.feasible().size();

  // One candidate split per proper bipartition (fix element 0 on the a-side).
  for (Mask a = 1; a < full; a += 2) {
    const Mask b = full & ~a;
    std::vector<Mask> proj_a, proj_b;
    proj_a.reserve(fam_size);
    proj_b.reserve(fam_size);
    for (const Subset& f : d.feasible()) {
      proj_a.push_back(f.bits() & a);
      proj_b.push_back(f.bits() & b);
    }
    std::sort(proj_a.begin(), proj_a.end());
    proj_a.erase(std::unique(proj_a.begin(), proj_a.end()), proj_a.end());
    std::sort(proj_b.begin(), proj_b.end());
    proj_b.erase(std::unique(proj_b.begin(), proj_b.end()), proj_b.end());

    // The family always embeds into the product of its projections; distinct
    // pairs give distinct unions, so sizes decide one inclusion and explicit
    // membership the other.
    if (proj_a.size() * proj_b.size() != fam_size) continue;
    bool product = true;
    for (Mask fa : proj_a) {
      for (Mask fb : proj_b) {
        if (!d.is_feasible(fa | fb)) {
          product = false;
          break;
        }
      }
      if (!product) break;
    }
    if (product) return false;
  }
  return true;
}

}  // namespace dm
