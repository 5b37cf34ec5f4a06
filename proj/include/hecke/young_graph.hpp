#pragma once

// The coloured Young graph: vertices are diagrams with at most n cells,
// an edge joins two diagrams differing by one cell and carries the content
// exponent of that cell (the eigenvalue colour q^(2c)). Root-to-diagram
// paths correspond bijectively to standard tableaux; the colour sequence
// along a path is the content string of its tableau.

#include "hecke/tableaux.hpp"

#include <optional>

namespace hecke {

struct YoungGraphEdge {
  int from = 0;
  int to = 0;
  int colour = 0;  // content exponent of the added cell
};

class ColouredYoungGraph {
 public:
  explicit ColouredYoungGraph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("ColouredYoungGraph: negative size");
    for (int k = 0; k <= n; ++k) {
      levels_.emplace_back();
      for (const YoungDiagram& d : partitions(k)) {
        int id = int(vertices_.size());
        levels_.back().push_back(id);
        index_.emplace(d.rows(), id);
        vertices_.push_back(d);
      }
    }
    for (int id = 0; id < int(vertices_.size()); ++id) {
      const YoungDiagram& d = vertices_[size_t(id)];
      if (d.size() == n) continue;
      for (auto [r, c] : d.addable_cells())
        edges_.push_back({id, vertex_id(d.with_cell(r, c)), c - r});
    }
  }

  int n() const { return n_; }
  const std::vector<YoungDiagram>& vertices() const { return vertices_; }
  const std::vector<std::vector<int>>& levels() const { return levels_; }
  const std::vector<YoungGraphEdge>& edges() const { return edges_; }

  int vertex_id(const YoungDiagram& d) const {
    auto it = index_.find(d.rows());
    if (it == index_.end())
      throw std::invalid_argument("ColouredYoungGraph: unknown vertex " + d.str());
    return it->second;
  }

  std::optional<YoungGraphEdge> edge(int from, int to) const {
    for (const auto& e : edges_)
      if (e.from == from && e.to == to) return e;
    return std::nullopt;
  }

  /// All root-to-target paths as vertex id sequences, ordered by ascending
  /// lexicographic colour string.
  std::vector<std::vector<int>> paths_to(const YoungDiagram& target) const {
    std::vector<std::vector<int>> out;
    std::vector<int> cur{vertex_id(YoungDiagram())};
    auto rec = [&](auto&& self, const YoungDiagram& d) -> void {
      if (d == target) {
        out.push_back(cur);
        return;
      }
      if (d.size() >= target.size()) return;
      auto cells = d.addable_cells();
      for (auto it = cells.rbegin(); it != cells.rend(); ++it) {
        auto [r, c] = *it;
        YoungDiagram next = d.with_cell(r, c);
        if (!shape_fits(next, target)) continue;
        cur.push_back(vertex_id(next));
        self(self, next);
        cur.pop_back();
      }
    };
    rec(rec, YoungDiagram());
    return out;
  }

  std::vector<int> path_colours(const std::vector<int>& path) const {
    std::vector<int> colours;
    for (size_t i = 0; i + 1 < path.size(); ++i) {
      auto e = edge(path[i], path[i + 1]);
      if (!e) throw std::invalid_argument("path_colours: not an edge");
      colours.push_back(e->colour);
    }
    return colours;
  }

 private:
  static bool shape_fits(const YoungDiagram& a, const YoungDiagram& b) {
    if (a.row_count() > b.row_count()) return false;
    for (int r = 1; r <= a.row_count(); ++r)
      if (a.row(r) > b.row(r)) return false;
    return true;
  }

  int n_;
  std::vector<YoungDiagram> vertices_;
  std::vector<std::vector<int>> levels_;
  std::vector<YoungGraphEdge> edges_;
  std::map<std::vector<int>, int> index_;
};

/// One row of the tableau / content string / graph path correspondence.
struct Correspondence {
  StandardTableau tableau;
  ContentString string;
  std::vector<int> path;  // vertex ids, root first
};

/// The full correspondence for all standard tableaux with exactly n cells,
/// grouped by shape in partitions(n) order, each shape's tableaux in
/// ascending content-string order.
inline std::vector<Correspondence> bijections(int n, const ColouredYoungGraph& graph) {
  if (graph.n() < n)
    throw std::invalid_argument("bijections: graph too small");
  std::vector<Correspondence> out;
  for (const YoungDiagram& shape : partitions(n)) {
    std::vector<StandardTableau> tabs = enumerate_standard(shape);
    std::vector<std::vector<int>> paths = graph.paths_to(shape);
    if (tabs.size() != paths.size())
      throw std::logic_error("bijections: path and tableau counts differ");
    for (size_t i = 0; i < tabs.size(); ++i)
      out.push_back({tabs[i], content_string(tabs[i]), paths[i]});
  }
  return out;
}

inline std::vector<Correspondence> bijections(int n) {
  return bijections(n, ColouredYoungGraph(n));
}

}  // namespace hecke
