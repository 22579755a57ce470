#include "dm/set_system.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace dm {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

SetSystem::SetSystem(GroundSet ground, std::vector<Subset> feasible)
    : ground_(std::move(ground)), feasible_(std::move(feasible)) {
  const int n = ground_.size();
  for (const Subset& f : feasible_) {
    if (f.width() != n) {
      throw std::invalid_argument("feasible set does not live over the ground set");
    }
  }
  std::sort(feasible_.begin(), feasible_.end(), canonical_less);
  feasible_.erase(std::unique(feasible_.begin(), feasible_.end()), feasible_.end());

  if (n <= kMaxLatticeSize) {
    lattice_.assign((std::size_t{1} << n) / 64 + 1, 0);
    for (const Subset& f : feasible_) {
      lattice_[f.bits() >> 6] |= Mask{1} << (f.bits() & 63);
    }
  } else {
    members_.reserve(feasible_.size());
    for (const Subset& f : feasible_) members_.insert(f.bits());
  }
}

bool SetSystem::is_feasible(Mask bits) const {
  assert((bits & ~ground_.full_mask()) == 0);
  if (!lattice_.empty()) {
    return (lattice_[bits >> 6] >> (bits & 63)) & 1;
  }
  return members_.contains(bits);
}

bool SetSystem::is_feasible(const Subset& a) const {
  if (a.width() != size()) {
    throw std::invalid_argument("subset does not live over the ground set");
  }
  return is_feasible(a.bits());
}

DmFlags SetSystem::flags() const {
  DmFlags f;
  f.proper = !feasible_.empty();
  f.trivial = size() == 0;
  f.normal = f.proper && feasible_.front().is_empty();
  f.even = true;
  for (const Subset& s : feasible_) {
    if ((s.card() & 1) != (feasible_.front().card() & 1)) {
      f.even = false;
      break;
    }
  }
  return f;
}

DmFlags classify_flags(const SetSystem& s) { return s.flags(); }

std::string ExchangeWitness::describe(const GroundSet& g) const {
  if (empty_family) return "empty family";
  std::ostringstream os;
  os << "X=" << format_subset(x, g) << " Y=" << format_subset(y, g) << " u=" << g.label(u);
  return os.str();
}

std::optional<ExchangeWitness> exchange_violation(const SetSystem& s) {
  if (s.feasible().empty()) {
    ExchangeWitness w;
    w.empty_family = true;
    return w;
  }
  const auto& fam = s.feasible();
  for (const Subset& x : fam) {
    for (const Subset& y : fam) {
      Mask diff = x.bits() ^ y.bits();
      for (Mask du = diff; du != 0; du &= du - 1) {
        const Mask ubit = du & (~du + 1);
        bool exchanged = false;
        for (Mask dv = diff; dv != 0; dv &= dv - 1) {
          const Mask vbit = dv & (~dv + 1);
          // {u,v} as a set: v == u toggles u alone.
          if (s.is_feasible(x.bits() ^ (ubit | vbit))) {
            exchanged = true;
            break;
          }
        }
        if (!exchanged) {
          ExchangeWitness w;
          w.x = x;
          w.y = y;
          w.u = std::countr_zero(ubit);
          return w;
        }
      }
    }
  }
  return std::nullopt;
}

DeltaMatroid DeltaMatroid::validated(SetSystem s) {
  if (auto w = exchange_violation(s)) {
    throw std::invalid_argument("not a delta-matroid: " + w->describe(s.ground()));
  }
  return DeltaMatroid(std::move(s));
}

DeltaMatroid DeltaMatroid::trusted(SetSystem s) {
#ifndef NDEBUG
  assert(!exchange_violation(s).has_value() && "trusted construction violated the exchange axiom");
#endif
  return DeltaMatroid(std::move(s));
}

ParsedSetSystem parse_set_system(std::string_view text) {
  std::optional<GroundSet> ground;
  std::vector<Subset> feasible;
  std::vector<std::string> warnings;
  std::vector<Mask> seen;

  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                           : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++lineno;

    line = trim(line);
    if (line.empty() || line.front() == '#') continue;

    const std::string at = "line " + std::to_string(lineno) + ": ";
    if (line.starts_with("elements:")) {
      if (ground) throw ParseError(at + "second elements line");
      std::istringstream is{std::string(line.substr(9))};
      std::vector<std::string> labels;
      for (std::string tok; is >> tok;) labels.push_back(std::move(tok));
      try {
        ground.emplace(std::move(labels));
      } catch (const std::invalid_argument& e) {
        throw ParseError(at + e.what());
      }
    } else if (line.starts_with("feasible:")) {
      if (!ground) throw ParseError(at + "feasible line before elements line");
      Subset f = [&] {
        try {
          return parse_subset(line.substr(9), *ground);
        } catch (const ParseError& e) {
          throw ParseError(at + e.what());
        }
      }();
      if (std::find(seen.begin(), seen.end(), f.bits()) != seen.end()) {
        warnings.push_back(at + "duplicate feasible set " + format_subset(f, *ground) +
                           " ignored");
      } else {
        seen.push_back(f.bits());
        feasible.push_back(f);
      }
    } else {
      throw ParseError(at + "expected 'elements:', 'feasible:' or a '#' comment");
    }
  }
  if (!ground) throw ParseError("missing elements line");
  return ParsedSetSystem{SetSystem(std::move(*ground), std::move(feasible)),
                         std::move(warnings)};
}

std::string serialize(const SetSystem& s) {
  std::string out = "elements:";
  for (const std::string& l : s.ground().labels()) {
    out += ' ';
    out += l;
  }
  out += '\n';
  for (const Subset& f : s.feasible()) {
    out += "feasible: ";
    out += format_subset(f, s.ground());
    out += '\n';
  }
  return out;
}

}  // namespace dm
