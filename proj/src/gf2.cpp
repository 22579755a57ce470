#include "dm/gf2.hpp"

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

std::vector<std::string_view> content_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                           : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    line = trim(line);
    if (!line.empty() && line.front() != '#') lines.push_back(line);
  }
  return lines;
}

}  // namespace

Gf2SymMatrix::Gf2SymMatrix(GroundSet labels, std::vector<Mask> rows)
    : labels_(std::move(labels)), rows_(std::move(rows)) {
  const int n = labels_.size();
  if (rows_.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("matrix row count does not match its labels");
  }
  for (int i = 0; i < n; ++i) {
    if ((rows_[static_cast<std::size_t>(i)] & ~low_bits(n)) != 0) {
      throw std::invalid_argument("matrix row has entries outside the label range");
    }
    for (int j = i + 1; j < n; ++j) {
      if (at(i, j) != at(j, i)) {
        throw std::invalid_argument("matrix is not symmetric at (" + std::to_string(i + 1) +
                                    "," + std::to_string(j + 1) + ")");
      }
    }
  }
}

Gf2SymMatrix Gf2SymMatrix::zero(GroundSet labels) {
  std::vector<Mask> rows(static_cast<std::size_t>(labels.size()), 0);
  return Gf2SymMatrix(std::move(labels), std::move(rows));
}

Gf2SymMatrix Gf2SymMatrix::from_upper_bits(GroundSet labels, std::uint64_t code) {
  const int n = labels.size();
  std::vector<Mask> rows(static_cast<std::size_t>(n), 0);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j, ++k) {
      if ((code >> k) & 1) {
        rows[static_cast<std::size_t>(i)] |= bit(j);
        rows[static_cast<std::size_t>(j)] |= bit(i);
      }
    }
  }
  return Gf2SymMatrix(std::move(labels), std::move(rows));
}

Gf2SymMatrix Gf2SymMatrix::from_upper_bits(int n, std::uint64_t code) {
  return from_upper_bits(GroundSet::numbered(n), code);
}

Mask Gf2SymMatrix::diagonal() const {
  Mask d = 0;
  for (int i = 0; i < size(); ++i) {
    if (at(i, i)) d |= bit(i);
  }
  return d;
}

std::uint64_t Gf2SymMatrix::upper_bits() const {
  std::uint64_t code = 0;
  int k = 0;
  for (int i = 0; i < size(); ++i) {
    for (int j = i; j < size(); ++j, ++k) {
      if (at(i, j)) code |= std::uint64_t{1} << k;
    }
  }
  return code;
}

bool principal_nonsingular(const Gf2SymMatrix& c, const Subset& a) {
  if (a.width() != c.size()) {
    throw std::invalid_argument("subset does not index the matrix");
  }
  const Mask cols = a.bits();
  Mask pivots[kMaxGroundSize];
  int rank = 0;
  for (Mask rest = cols; rest != 0; rest &= rest - 1) {
    const int i = std::countr_zero(rest);
    Mask row = c.row(i) & cols;
    for (int p = 0; p < rank; ++p) {
      // Reduce by earlier pivot rows; each pivot is its row's lowest bit.
      if (row & pivots[p] & (~pivots[p] + 1)) row ^= pivots[p];
    }
    if (row == 0) return false;
    pivots[rank++] = row;
  }
  return true;
}

DeltaMatroid delta_matroid_of_matrix(const Gf2SymMatrix& c) {
  const int n = c.size();
  if (n > kMaxLatticeSize) {
    throw std::invalid_argument("matrix too large to enumerate all principal minors");
  }
  std::vector<Subset> fam;
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    Subset a(m, n);
    if (principal_nonsingular(c, a)) fam.push_back(a);
  }
  return DeltaMatroid::trusted(SetSystem(c.labels(), std::move(fam)));
}

Gf2SymMatrix reconstruct_matrix(const DeltaMatroid& d) {
  if (!d.flags().normal) {
    throw std::invalid_argument("matrix reconstruction requires a normal delta-matroid");
  }
  const int n = d.size();
  std::vector<Mask> rows(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    if (d.is_feasible(bit(v))) rows[static_cast<std::size_t>(v)] |= bit(v);
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const bool su = d.is_feasible(bit(u));
      const bool sv = d.is_feasible(bit(v));
      const bool pair = d.is_feasible(bit(u) | bit(v));
      if ((su && sv && !pair) || (pair && !(su && sv))) {
        rows[static_cast<std::size_t>(u)] |= bit(v);
        rows[static_cast<std::size_t>(v)] |= bit(u);
      }
    }
  }
  return Gf2SymMatrix(d.ground(), std::move(rows));
}

std::optional<Gf2SymMatrix> is_normal_binary(const DeltaMatroid& d) {
  if (!d.flags().normal) {
    throw std::invalid_argument("normal-binary test requires a normal delta-matroid");
  }
  if (d.size() > kMaxLatticeSize) {
    throw std::invalid_argument("normal-binary test capped at 20 elements");
  }
  Gf2SymMatrix c = reconstruct_matrix(d);
  if (delta_matroid_of_matrix(c).system() == d.system()) return c;
  return std::nullopt;
}

LoopyGraph intersection_graph(const Gf2SymMatrix& c) {
  LoopyGraph g;
  g.vertices = c.labels().labels();
  g.loops = c.diagonal();
  for (int i = 0; i < c.size(); ++i) {
    for (int j = i + 1; j < c.size(); ++j) {
      if (c.at(i, j)) g.edges.emplace_back(i, j);
    }
  }
  return g;
}

Gf2SymMatrix parse_matrix(std::string_view text) {
  auto lines = content_lines(text);
  std::size_t at = 0;

  std::optional<GroundSet> labels;
  if (at < lines.size() && lines[at].starts_with("labels:")) {
    std::istringstream is{std::string(lines[at].substr(7))};
    std::vector<std::string> names;
    for (std::string tok; is >> tok;) names.push_back(std::move(tok));
    try {
      labels.emplace(std::move(names));
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("labels line: ") + e.what());
    }
    ++at;
  }

  if (at >= lines.size()) throw ParseError("missing matrix size line");
  int n = 0;
  {
    std::istringstream is{std::string(lines[at])};
    if (!(is >> n) || n < 0 || n > kMaxGroundSize || !(is >> std::ws).eof()) {
      throw ParseError("bad matrix size line '" + std::string(lines[at]) + "'");
    }
    ++at;
  }
  if (labels && labels->size() != n) {
    throw ParseError("labels line names " + std::to_string(labels->size()) +
                     " elements but the size line says " + std::to_string(n));
  }

  std::vector<Mask> rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i, ++at) {
    if (at >= lines.size()) throw ParseError("missing matrix row " + std::to_string(i + 1));
    std::string_view row = lines[at];
    if (row.size() != static_cast<std::size_t>(n)) {
      throw ParseError("matrix row " + std::to_string(i + 1) + " has " +
                       std::to_string(row.size()) + " entries, expected " + std::to_string(n));
    }
    Mask bits = 0;
    for (int j = 0; j < n; ++j) {
      const char ch = row[static_cast<std::size_t>(j)];
      if (ch == '1') {
        bits |= bit(j);
      } else if (ch != '0') {
        throw ParseError("matrix entries must be 0 or 1, got '" + std::string(1, ch) + "'");
      }
    }
    rows.push_back(bits);
  }
  if (at != lines.size()) throw ParseError("unexpected content after the matrix rows");

  try {
    return Gf2SymMatrix(labels ? std::move(*labels) : GroundSet::numbered(n), std::move(rows));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string serialize(const Gf2SymMatrix& c) {
  const int n = c.size();
  std::string out;
  if (!(c.labels() == GroundSet::numbered(n))) {
    out += "labels:";
    for (const std::string& l : c.labels().labels()) {
      out += ' ';
      out += l;
    }
    out += '\n';
  }
  out += std::to_string(n);
  out += '\n';
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out += c.at(i, j) ? '1' : '0';
    out += '\n';
  }
  return out;
}

}  // namespace dm
