#include <catch2/catch_amalgamated.hpp>

#include "hecke/young_graph.hpp"

#include <algorithm>
#include <set>

using namespace hecke;

namespace {

// Brute force: place 1..n row-major in every order, keep the fillings whose
// rows and columns increase.
std::vector<std::vector<std::vector<int>>> brute_force_fillings(const YoungDiagram& shape) {
  const int n = shape.size();
  auto perm = std::vector<int>(size_t(n));
  for (int i = 0; i < n; ++i) perm[size_t(i)] = i + 1;
  std::vector<std::vector<std::vector<int>>> good;
  do {
    std::vector<std::vector<int>> rows(size_t(shape.row_count()));
    size_t idx = 0;
    for (int r = 1; r <= shape.row_count(); ++r)
      for (int c = 1; c <= shape.row(r); ++c) rows[size_t(r - 1)].push_back(perm[idx++]);
    bool ok = true;
    for (int r = 1; r <= shape.row_count() && ok; ++r)
      for (int c = 1; c <= shape.row(r) && ok; ++c) {
        int v = rows[size_t(r - 1)][size_t(c - 1)];
        if (c > 1 && rows[size_t(r - 1)][size_t(c - 2)] >= v) ok = false;
        if (r > 1 && rows[size_t(r - 2)][size_t(c - 1)] >= v) ok = false;
      }
    if (ok) good.push_back(rows);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return good;
}

void all_strings(int n, std::vector<int>& cur, std::vector<ContentString>& out) {
  if (int(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  int i = int(cur.size()) + 1;  // next position, bound |m_i| <= i-1
  for (int m = 1 - i; m <= i - 1; ++m) {
    cur.push_back(m);
    all_strings(n, cur, out);
    cur.pop_back();
  }
}

}  // namespace

TEST_CASE("diagram basics") {
  YoungDiagram d({3, 2, 1});
  REQUIRE(d.str() == "(3,2,1)");
  REQUIRE(YoungDiagram::parse("(3,2,1)") == d);
  REQUIRE(YoungDiagram::parse("()") == YoungDiagram());
  REQUIRE(d.size() == 6);
  REQUIRE(d.conjugate() == d);
  REQUIRE(YoungDiagram({4, 2}).conjugate() == YoungDiagram({2, 2, 1, 1}));

  REQUIRE_THROWS_AS(YoungDiagram({2, 3}), std::invalid_argument);
  REQUIRE_THROWS_AS(YoungDiagram({1, 0}), std::invalid_argument);
  REQUIRE_THROWS_AS(YoungDiagram::parse("3,2"), std::invalid_argument);
  REQUIRE_THROWS_AS(YoungDiagram::parse("(a)"), std::invalid_argument);

  auto cells = YoungDiagram({2, 2, 1}).addable_cells();
  REQUIRE(cells == std::vector<std::pair<int, int>>{{1, 3}, {3, 2}, {4, 1}});
  REQUIRE(YoungDiagram().addable_cells() ==
          std::vector<std::pair<int, int>>{{1, 1}});
  REQUIRE(YoungDiagram({1}).with_cell(2, 1) == YoungDiagram({1, 1}));
  REQUIRE_THROWS_AS(YoungDiagram({1}).with_cell(3, 1), std::invalid_argument);
}

TEST_CASE("partitions") {
  const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 0; n <= 8; ++n) REQUIRE(partitions(n).size() == size_t(counts[n]));
  auto p4 = partitions(4);
  REQUIRE(p4[0] == YoungDiagram({4}));
  REQUIRE(p4[1] == YoungDiagram({3, 1}));
  REQUIRE(p4[2] == YoungDiagram({2, 2}));
  REQUIRE(p4[3] == YoungDiagram({2, 1, 1}));
  REQUIRE(p4[4] == YoungDiagram({1, 1, 1, 1}));
}

TEST_CASE("standard tableau enumeration") {
  REQUIRE(enumerate_standard(YoungDiagram({4})).size() == 1);
  REQUIRE(enumerate_standard(YoungDiagram({2, 1})).size() == 2);
  REQUIRE(enumerate_standard(YoungDiagram({2, 2})).size() == 2);

  for (int n = 1; n <= 5; ++n)
    for (const YoungDiagram& shape : partitions(n)) {
      auto tabs = enumerate_standard(shape);
      auto brute = brute_force_fillings(shape);
      REQUIRE(tabs.size() == brute.size());
      std::set<std::string> a, b;
      for (const auto& t : tabs) a.insert(t.str());
      for (const auto& rows : brute) b.insert(StandardTableau(shape, rows).str());
      REQUIRE(a == b);

      // documented order: ascending lexicographic content strings, all distinct
      std::vector<ContentString> strings;
      for (const auto& t : tabs) strings.push_back(content_string(t));
      REQUIRE(std::is_sorted(strings.begin(), strings.end()));
      REQUIRE(std::adjacent_find(strings.begin(), strings.end()) == strings.end());
    }
}

TEST_CASE("tableau validation") {
  REQUIRE_THROWS_AS(StandardTableau(YoungDiagram({2, 1}), {{2, 1}, {3}}),
                    std::invalid_argument);  // row not increasing
  REQUIRE_THROWS_AS(StandardTableau(YoungDiagram({2, 1}), {{1, 2}, {4}}),
                    std::invalid_argument);  // entry out of range
  REQUIRE_THROWS_AS(StandardTableau(YoungDiagram({1, 1}), {{2}, {1}}),
                    std::invalid_argument);  // column not increasing
  StandardTableau ok(YoungDiagram({2, 1}), {{1, 3}, {2}});
  REQUIRE(ok.entry(2, 1) == 2);
  REQUIRE(ok.position(3) == std::pair<int, int>{1, 2});
  REQUIRE(ok.str() == "[[1,3],[2]]");
}

TEST_CASE("content strings") {
  StandardTableau big(YoungDiagram({4, 3, 1}), {{1, 2, 4, 6}, {3, 5, 8}, {7}});
  REQUIRE(content_string(big) == ContentString{0, 1, -1, 2, 0, 3, -2, 1});

  StandardTableau square(YoungDiagram({2, 2}), {{1, 2}, {3, 4}});
  REQUIRE(content_string(square) == ContentString{0, 1, -1, 0});

  StandardTableau box(YoungDiagram({1}), {{1}});
  REQUIRE(content_string(box) == ContentString{0});
}

TEST_CASE("content string validation") {
  REQUIRE(validate_string({0, 1, -1, 2, 0, 3, -2, 1}).valid);

  auto v = validate_string({0, 1, 0});
  REQUIRE(!v.valid);
  REQUIRE(v.condition == 3);
  REQUIRE(v.position == 3);

  v = validate_string({1, 0});
  REQUIRE(!v.valid);
  REQUIRE(v.condition == 1);

  v = validate_string({0, 2});
  REQUIRE(!v.valid);
  REQUIRE(v.condition == 2);
  REQUIRE(v.position == 2);

  REQUIRE(!validate_string({}).valid);

  SECTION("exhaustive agreement with tableau reconstruction") {
    for (int n = 1; n <= 6; ++n) {
      std::set<ContentString> from_tableaux;
      for (const YoungDiagram& shape : partitions(n))
        for (const auto& t : enumerate_standard(shape))
          from_tableaux.insert(content_string(t));

      std::vector<ContentString> candidates;
      std::vector<int> cur;
      all_strings(n, cur, candidates);
      size_t accepted = 0;
      for (const auto& m : candidates) {
        bool ok = validate_string(m).valid;
        bool buildable = true;
        try {
          StandardTableau t = tableau_from_string(m);
          REQUIRE(content_string(t) == m);
        } catch (const std::invalid_argument&) {
          buildable = false;
        }
        REQUIRE(ok == buildable);
        REQUIRE(ok == (from_tableaux.count(m) > 0));
        if (ok) {
          ++accepted;
          // the pattern z, z+-1, z never appears in consecutive positions
          for (size_t i = 0; i + 2 < m.size(); ++i) {
            bool forbidden = m[i + 2] == m[i] &&
                             (m[i + 1] == m[i] - 1 || m[i + 1] == m[i] + 1);
            REQUIRE(!forbidden);
          }
        }
      }
      REQUIRE(accepted == from_tableaux.size());
    }
  }
}

TEST_CASE("hooks and dimensions") {
  REQUIRE(hook_lengths(YoungDiagram({1})) == std::vector<std::vector<int>>{{1}});
  REQUIRE(hook_lengths(YoungDiagram({2})) == std::vector<std::vector<int>>{{2, 1}});
  REQUIRE(hook_lengths(YoungDiagram({2, 2})) ==
          std::vector<std::vector<int>>{{3, 2}, {2, 1}});
  REQUIRE(hook_lengths(YoungDiagram({4, 3, 1})) ==
          std::vector<std::vector<int>>{{6, 4, 3, 1}, {4, 2, 1}, {1}});

  REQUIRE(frobenius_dim(YoungDiagram({5})) == 1);
  REQUIRE(frobenius_dim(YoungDiagram({2, 1})) == 2);
  REQUIRE(frobenius_dim(YoungDiagram({3, 2})) == 5);
  REQUIRE(frobenius_dim(YoungDiagram({4, 3, 1})) == 70);
  REQUIRE(frobenius_dim(YoungDiagram()) == 1);

  for (int n = 1; n <= 6; ++n)
    for (const YoungDiagram& shape : partitions(n)) {
      BigInt d = frobenius_dim(shape);
      REQUIRE(d == BigInt(enumerate_standard(shape).size()));
      // product formula over all hooks as an independent check
      BigInt hooks = 1;
      for (const auto& row : hook_lengths(shape))
        for (int h : row) hooks *= h;
      REQUIRE(d * hooks == factorial(unsigned(n)));
    }

  for (int n = 1; n <= 8; ++n) {
    BigInt sum = 0;
    for (const YoungDiagram& shape : partitions(n)) {
      BigInt d = frobenius_dim(shape);
      sum += d * d;
    }
    REQUIRE(sum == factorial(unsigned(n)));
  }
}

TEST_CASE("coloured Young graph") {
  ColouredYoungGraph g2(2);
  REQUIRE(g2.vertices().size() == 4);  // {}, (1), (2), (1,1)
  REQUIRE(g2.edges().size() == 3);
  auto paths2 = g2.paths_to(YoungDiagram({2}));
  REQUIRE(paths2.size() == 1);
  REQUIRE(g2.path_colours(paths2[0]) == std::vector<int>{0, 1});
  auto paths11 = g2.paths_to(YoungDiagram({1, 1}));
  REQUIRE(paths11.size() == 1);
  REQUIRE(g2.path_colours(paths11[0]) == std::vector<int>{0, -1});

  ColouredYoungGraph g4(4);
  for (int k = 0; k <= 4; ++k)
    REQUIRE(g4.levels()[size_t(k)].size() == partitions(k).size());

  std::vector<int> walk{
      g4.vertex_id(YoungDiagram()), g4.vertex_id(YoungDiagram({1})),
      g4.vertex_id(YoungDiagram({2})), g4.vertex_id(YoungDiagram({2, 1})),
      g4.vertex_id(YoungDiagram({2, 2}))};
  REQUIRE(g4.path_colours(walk) == std::vector<int>{0, 1, -1, 0});

  auto e = g4.edge(g4.vertex_id(YoungDiagram({2, 1})), g4.vertex_id(YoungDiagram({3, 1})));
  REQUIRE(e.has_value());
  REQUIRE(e->colour == 2);

  std::set<int> colours;
  for (const auto& edge : g4.edges()) colours.insert(edge.colour);
  REQUIRE(colours == std::set<int>{-3, -2, -1, 0, 1, 2, 3});
}

TEST_CASE("tableau, string and path correspondence") {
  REQUIRE(bijections(1).size() == 1);
  REQUIRE(bijections(3).size() == 4);
  REQUIRE(bijections(4).size() == 10);

  for (int n = 1; n <= 5; ++n) {
    ColouredYoungGraph g(n);
    auto rows = bijections(n, g);
    BigInt total = 0;
    for (const YoungDiagram& shape : partitions(n)) total += frobenius_dim(shape);
    REQUIRE(BigInt(rows.size()) == total);

    std::set<ContentString> strings;
    for (const auto& row : rows) {
      REQUIRE(row.string == content_string(row.tableau));
      REQUIRE(g.path_colours(row.path) == row.string);
      REQUIRE(g.vertices()[size_t(row.path.back())] == row.tableau.shape());
      REQUIRE(validate_string(row.string).valid);
      REQUIRE(tableau_from_string(row.string) == row.tableau);
      strings.insert(row.string);
    }
    REQUIRE(strings.size() == rows.size());
  }
}
