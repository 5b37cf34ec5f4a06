#pragma once

// Young diagrams, standard tableaux, content strings, hooks and the
// Frobenius dimension formula. The content of a node is column - row,
// so the eigenvalue of y_i on a seminormal vector is q^(2*content).

#include "hecke/rational.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <utility>
#include <vector>

namespace hecke {

class YoungDiagram {
 public:
  YoungDiagram() = default;  // empty diagram

  explicit YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
    for (size_t i = 0; i < rows_.size(); ++i) {
      if (rows_[i] < 1)
        throw std::invalid_argument("YoungDiagram: row lengths must be positive");
      if (i > 0 && rows_[i] > rows_[i - 1])
        throw std::invalid_argument("YoungDiagram: rows must weakly decrease");
    }
  }

  /// Parse "(3,2,1)"; "()" is the empty diagram.
  static YoungDiagram parse(const std::string& s) {
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
      throw std::invalid_argument("YoungDiagram: expected \"(a,b,...)\"");
    std::vector<int> rows;
    std::string body = s.substr(1, s.size() - 2);
    size_t pos = 0;
    while (pos < body.size()) {
      size_t comma = body.find(',', pos);
      std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos
                                                                    : comma - pos);
      size_t used = 0;
      int v;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("YoungDiagram: bad row length '" + tok + "'");
      }
      if (used != tok.size())
        throw std::invalid_argument("YoungDiagram: bad row length '" + tok + "'");
      rows.push_back(v);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return YoungDiagram(rows);
  }

  const std::vector<int>& rows() const { return rows_; }
  int row_count() const { return int(rows_.size()); }
  int row(int r) const { return rows_.at(size_t(r - 1)); }  // 1-based
  int size() const {
    int s = 0;
    for (int r : rows_) s += r;
    return s;
  }
  bool empty() const { return rows_.empty(); }

  bool contains(int r, int c) const {
    return r >= 1 && r <= row_count() && c >= 1 && c <= row(r);
  }

  YoungDiagram conjugate() const {
    if (rows_.empty()) return {};
    std::vector<int> cols(size_t(rows_[0]), 0);
    for (int r : rows_)
      for (int c = 0; c < r; ++c) ++cols[size_t(c)];
    return YoungDiagram(cols);
  }

  /// Cells (row, col), 1-based, whose addition keeps the diagram valid,
  /// listed top to bottom (content strictly decreasing).
  std::vector<std::pair<int, int>> addable_cells() const {
    std::vector<std::pair<int, int>> out;
    for (int r = 1; r <= row_count() + 1; ++r) {
      int len = r <= row_count() ? row(r) : 0;
      int above = r == 1 ? std::numeric_limits<int>::max() : row(r - 1);
      if (len < above) out.push_back({r, len + 1});
    }
    return out;
  }

  YoungDiagram with_cell(int r, int c) const {
    std::vector<int> rows = rows_;
    if (r == row_count() + 1) {
      if (c != 1) throw std::invalid_argument("with_cell: not addable");
      rows.push_back(1);
    } else {
      if (r < 1 || r > row_count() || c != row(r) + 1)
        throw std::invalid_argument("with_cell: not addable");
      ++rows[size_t(r - 1)];
    }
    return YoungDiagram(rows);
  }

  friend bool operator==(const YoungDiagram& a, const YoungDiagram& b) {
    return a.rows_ == b.rows_;
  }
  friend bool operator!=(const YoungDiagram& a, const YoungDiagram& b) {
    return !(a == b);
  }

  std::string str() const {
    std::string s = "(";
    for (size_t i = 0; i < rows_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(rows_[i]);
    }
    return s + ")";
  }

 private:
  std::vector<int> rows_;
};

/// All partitions of n, in descending lexicographic order: (n) first,
/// (1,...,1) last. partitions(0) is the single empty diagram.
inline std::vector<YoungDiagram> partitions(int n) {
  if (n < 0) throw std::invalid_argument("partitions: negative size");
  std::vector<YoungDiagram> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int maxpart) -> void {
    if (remaining == 0) {
      out.push_back(cur.empty() ? YoungDiagram() : YoungDiagram(cur));
      return;
    }
    for (int p = std::min(remaining, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n == 0 ? 1 : n);
  return out;
}

class StandardTableau {
 public:
  StandardTableau(YoungDiagram shape, std::vector<std::vector<int>> entries)
      : shape_(std::move(shape)), entries_(std::move(entries)) {
    const int n = shape_.size();
    if (int(entries_.size()) != shape_.row_count())
      throw std::invalid_argument("StandardTableau: row count mismatch");
    pos_.assign(size_t(n) + 1, {0, 0});
    std::vector<bool> seen(size_t(n) + 1, false);
    for (int r = 1; r <= shape_.row_count(); ++r) {
      if (int(entries_[size_t(r - 1)].size()) != shape_.row(r))
        throw std::invalid_argument("StandardTableau: row length mismatch");
      for (int c = 1; c <= shape_.row(r); ++c) {
        int v = entries_[size_t(r - 1)][size_t(c - 1)];
        if (v < 1 || v > n || seen[size_t(v)])
          throw std::invalid_argument("StandardTableau: entries must be 1..n once each");
        seen[size_t(v)] = true;
        pos_[size_t(v)] = {r, c};
        if (c > 1 && entry(r, c - 1) >= v)
          throw std::invalid_argument("StandardTableau: rows must increase");
        if (r > 1 && entry(r - 1, c) >= v)
          throw std::invalid_argument("StandardTableau: columns must increase");
      }
    }
  }

  const YoungDiagram& shape() const { return shape_; }
  int size() const { return shape_.size(); }
  int entry(int r, int c) const { return entries_.at(size_t(r - 1)).at(size_t(c - 1)); }
  std::pair<int, int> position(int k) const { return pos_.at(size_t(k)); }
  int content_exponent(int k) const {
    auto [r, c] = position(k);
    return c - r;
  }
  const std::vector<std::vector<int>>& rows() const { return entries_; }

  friend bool operator==(const StandardTableau& a, const StandardTableau& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator!=(const StandardTableau& a, const StandardTableau& b) {
    return !(a == b);
  }

  std::string str() const {
    std::string s = "[";
    for (size_t r = 0; r < entries_.size(); ++r) {
      if (r) s += ',';
      s += '[';
      for (size_t c = 0; c < entries_[r].size(); ++c) {
        if (c) s += ',';
        s += std::to_string(entries_[r][c]);
      }
      s += ']';
    }
    return s + "]";
  }

 private:
  YoungDiagram shape_;
  std::vector<std::vector<int>> entries_;
  std::vector<std::pair<int, int>> pos_;
};

using ContentString = std::vector<int>;

inline ContentString content_string(const StandardTableau& t) {
  ContentString m(size_t(t.size()));
  for (int k = 1; k <= t.size(); ++k) m[size_t(k - 1)] = t.content_exponent(k);
  return m;
}

/// All standard tableaux of the given shape, ordered by ascending
/// lexicographic content string. Tableaux are grown cell by cell, taking
/// candidate cells in ascending content order at every step.
inline std::vector<StandardTableau> enumerate_standard(const YoungDiagram& shape) {
  std::vector<StandardTableau> out;
  const int n = shape.size();
  std::vector<std::vector<int>> partial(size_t(shape.row_count()));
  YoungDiagram cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (next > n) {
      out.emplace_back(shape, partial);
      return;
    }
    auto cells = cur.addable_cells();
    // ascending content  =  bottom row upward
    for (auto it = cells.rbegin(); it != cells.rend(); ++it) {
      auto [r, c] = *it;
      if (!shape.contains(r, c)) continue;
      partial[size_t(r - 1)].push_back(next);
      YoungDiagram saved = cur;
      cur = cur.with_cell(r, c);
      self(self, next + 1);
      cur = saved;
      partial[size_t(r - 1)].pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

struct StringValidation {
  bool valid = true;
  int condition = 0;  // 1, 2 or 3 when invalid
  int position = 0;   // 1-based index of the offending entry
  std::string detail;
};

/// A sequence (m_1..m_n) is the content string of a standard tableau iff
///   (1) m_1 = 0;
///   (2) every m_j = z != 0 is preceded by z-1 or z+1;
///   (3) strictly between two equal entries z both z-1 and z+1 occur.
inline StringValidation validate_string(const ContentString& m) {
  StringValidation res;
  auto fail = [&](int cond, int pos, std::string detail) {
    res.valid = false;
    res.condition = cond;
    res.position = pos;
    res.detail = std::move(detail);
    return res;
  };
  if (m.empty()) return fail(1, 1, "empty string");
  if (m[0] != 0) return fail(1, 1, "first entry must be 0");
  for (size_t j = 1; j < m.size(); ++j) {
    int z = m[j];
    if (z == 0) continue;
    bool neighbour = false;
    for (size_t i = 0; i < j; ++i)
      if (m[i] == z - 1 || m[i] == z + 1) {
        neighbour = true;
        break;
      }
    if (!neighbour)
      return fail(2, int(j + 1),
                  "entry " + std::to_string(z) + " has no earlier neighbour value");
  }
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = i + 1; j < m.size(); ++j) {
      if (m[i] != m[j]) continue;
      int z = m[i];
      bool below = false, above = false;
      for (size_t k = i + 1; k < j; ++k) {
        if (m[k] == z - 1) below = true;
        if (m[k] == z + 1) above = true;
      }
      if (!below || !above)
        return fail(3, int(j + 1),
                    "between repeated " + std::to_string(z) + " the value " +
                        std::to_string(!below ? z - 1 : z + 1) + " is missing");
    }
  return res;
}

/// Rebuild the tableau whose content string is m. Independent of
/// validate_string: grows the diagram greedily, looking for an addable cell
/// of the right content at each step. Throws std::invalid_argument if no
/// tableau exists.
inline StandardTableau tableau_from_string(const ContentString& m) {
  YoungDiagram cur;
  std::vector<std::vector<int>> rows;
  for (size_t i = 0; i < m.size(); ++i) {
    bool placed = false;
    for (auto [r, c] : cur.addable_cells()) {
      if (c - r != m[i]) continue;
      cur = cur.with_cell(r, c);
      if (r > int(rows.size())) rows.emplace_back();
      rows[size_t(r - 1)].push_back(int(i + 1));
      placed = true;
      break;
    }
    if (!placed)
      throw std::invalid_argument("tableau_from_string: no cell of content " +
                                  std::to_string(m[i]) + " at step " +
                                  std::to_string(i + 1));
  }
  return StandardTableau(cur, rows);
}

/// h(r,c) = arm + leg + 1, as a ragged array congruent to the shape.
inline std::vector<std::vector<int>> hook_lengths(const YoungDiagram& shape) {
  YoungDiagram conj = shape.conjugate();
  std::vector<std::vector<int>> h(size_t(shape.row_count()));
  for (int r = 1; r <= shape.row_count(); ++r) {
    h[size_t(r - 1)].resize(size_t(shape.row(r)));
    for (int c = 1; c <= shape.row(r); ++c)
      h[size_t(r - 1)][size_t(c - 1)] = (shape.row(r) - c) + (conj.row(c) - r) + 1;
  }
  return h;
}

/// Number of standard tableaux, via first-column hook lengths:
/// d = n! * prod_{i<j}(h_i - h_j) / prod_i h_i!  with  h_i = lambda_i + k - i.
inline BigInt frobenius_dim(const YoungDiagram& shape) {
  const int k = shape.row_count();
  if (k == 0) return 1;
  auto h = std::vector<long>(size_t(k));
  for (int i = 1; i <= k; ++i) h[size_t(i - 1)] = shape.row(i) + k - i;
  BigInt num = factorial(unsigned(shape.size()));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) num *= BigInt(h[size_t(i)] - h[size_t(j)]);
  BigInt den = 1;
  for (int i = 0; i < k; ++i) den *= factorial(unsigned(h[size_t(i)]));
  BigInt d = num / den;
  return d;
}

}  // namespace hecke
