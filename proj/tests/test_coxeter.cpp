#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <set>

#include "cellmod/coxeter.hpp"

using namespace cellmod;

namespace {

std::set<std::string> element_labels(const CoxeterSystem& sys, const CellDatum& cell) {
  std::set<std::string> out;
  for (const auto& w : cell.elements) out.insert(word_label(sys, w));
  return out;
}

std::set<std::string> hcell_labels(const CoxeterSystem& sys, const CellDatum& cell, int first,
                                   int last) {
  std::set<std::string> out;
  auto it = cell.h_cells.find({first, last});
  if (it == cell.h_cells.end()) return out;
  for (int i : it->second) out.insert(word_label(sys, cell.elements[i]));
  return out;
}

// independent oracle: every alternating s/t word of length < n
std::set<std::string> dihedral_middle_oracle(int n) {
  std::set<std::string> out;
  for (int first = 0; first < 2; ++first)
    for (int len = 1; len < n; ++len) {
      std::string w;
      for (int i = 0; i < len; ++i) w += (first + i) % 2 == 0 ? 's' : 't';
      out.insert(w);
    }
  return out;
}

// closed-form H-cell size: floor(m/2) when the walk can bounce on the large
// bond without crossing it, floor((m-1)/2) when it must cross
size_t hcell_size_oracle(const CoxeterSystem& sys, int r, int s) {
  int m = 3, bu = -1, bv = -1;
  for (int i = 0; i < sys.rank(); ++i)
    for (int j = i + 1; j < sys.rank(); ++j)
      if (sys.bonds[i][j] > m) {
        m = sys.bonds[i][j];
        bu = i;
        bv = j;
      }
  if (bu < 0) return 1;  // all bonds 3: only the simple path
  auto side = [&](int v) {
    std::vector<int> dist(sys.rank(), -1);
    std::vector<int> q{v};
    dist[v] = 0;
    for (size_t h = 0; h < q.size(); ++h)
      for (int t = 0; t < sys.rank(); ++t)
        if (t != q[h] && sys.connected(q[h], t) && dist[t] < 0) {
          dist[t] = dist[q[h]] + 1;
          q.push_back(t);
        }
    return dist[bu] < dist[bv];
  };
  return side(r) == side(s) ? static_cast<size_t>(m / 2) : static_cast<size_t>((m - 1) / 2);
}

}  // namespace

TEST_CASE("coxeter system validation and parsing") {
  CHECK_THROWS_AS(CoxeterSystem({{1, 2}, {3, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(CoxeterSystem(std::vector<std::vector<int>>{{2}}), std::invalid_argument);
  CoxeterSystem sys = CoxeterSystem::parse("3\n1 3 2\n3 1 7\n2 7 1\n");
  CHECK(sys.rank() == 3);
  CHECK(sys.bonds[1][2] == 7);
  CoxeterSystem back = CoxeterSystem::parse(sys.format());
  CHECK(back.bonds == sys.bonds);
  CoxeterSystem inf = CoxeterSystem::parse("2\n1 inf\ninf 1\n");
  CHECK(inf.bonds[0][1] == kInfiniteBond);
}

TEST_CASE("dihedral cells") {
  for (int n = 3; n <= 12; ++n) {
    CoxeterSystem sys = CoxeterSystem::dihedral(n);
    auto cells = dihedral_cells(n);
    REQUIRE(cells.size() == 3);
    CHECK(cells[0].a_value == 0);
    CHECK(cells[0].elements.size() == 1);
    CHECK(cells[2].a_value == n);
    const CellDatum& mid = cells[1];
    CHECK(mid.a_value == 1);
    CHECK(mid.elements.size() == 2 * static_cast<size_t>(n) - 2);
    CHECK(element_labels(sys, mid) == dihedral_middle_oracle(n));
    CHECK(mid.left_cells.size() == 2);
    CHECK(mid.right_cells.size() == 2);
    // Duflo elements are the generators, one per diagonal H-cell
    CHECK(mid.duflo.size() == 2);
    CHECK(hcell_labels(sys, mid, 0, 0).count("s") == 1);
    CHECK(hcell_labels(sys, mid, 1, 1).count("t") == 1);
    // diagonal H-cells collect the odd-length words, the off-diagonal the even
    CHECK(mid.h_cells.at({0, 0}).size() == static_cast<size_t>(n / 2));
    CHECK(mid.h_cells.at({0, 1}).size() == static_cast<size_t>((n - 1) / 2));
  }
  CHECK_THROWS_AS(dihedral_cells(2), std::invalid_argument);
}

TEST_CASE("dihedral cells n=5 explicit membership") {
  CoxeterSystem sys = CoxeterSystem::dihedral(5);
  CellDatum mid = dihedral_cells(5)[1];
  CHECK(element_labels(sys, mid) ==
        std::set<std::string>{"s", "st", "sts", "stst", "t", "ts", "tst", "tsts"});
  CHECK(hcell_labels(sys, mid, 0, 0) == std::set<std::string>{"s", "sts"});
}

TEST_CASE("dihedral cells n=3") {
  CoxeterSystem sys = CoxeterSystem::dihedral(3);
  CellDatum mid = dihedral_cells(3)[1];
  CHECK(element_labels(sys, mid) == std::set<std::string>{"s", "t", "st", "ts"});
}

TEST_CASE("a1 finiteness") {
  CoxeterSystem w237({{1, 3, 2}, {3, 1, 7}, {2, 7, 1}});
  CHECK(a1_finite(w237).finite);
  CoxeterSystem cyc({{1, 3, 3}, {3, 1, 3}, {3, 3, 1}});
  A1Verdict v = a1_finite(cyc);
  CHECK_FALSE(v.finite);
  CHECK(v.reason == "diagram contains a cycle");
  CoxeterSystem two({{1, 4, 2}, {4, 1, 5}, {2, 5, 1}});
  CHECK_FALSE(a1_finite(two).finite);
  CoxeterSystem inf({{1, kInfiniteBond}, {kInfiniteBond, 1}});
  CHECK_FALSE(a1_finite(inf).finite);
  // reducible: the conditions apply per component
  CoxeterSystem red({{1, 4, 2}, {4, 1, 2}, {2, 2, 1}});
  CHECK(a1_finite(red).finite);
}

TEST_CASE("enumerate_a1 for W_237") {
  CoxeterSystem sys({{1, 3, 2}, {3, 1, 7}, {2, 7, 1}});
  CellDatum cell = enumerate_a1(sys);
  CHECK(cell.elements.size() == 27);
  CHECK(cell.h_cells.size() == 9);
  for (const auto& [key, members] : cell.h_cells) CHECK(members.size() == 3);
  CHECK(hcell_labels(sys, cell, 0, 0) == std::set<std::string>{"1", "12321", "1232321"});
  CHECK(hcell_labels(sys, cell, 1, 1) == std::set<std::string>{"2", "232", "23232"});
  CHECK(hcell_labels(sys, cell, 2, 0) == std::set<std::string>{"321", "32321", "3232321"});
  for (const Word& w : cell.elements) CHECK(reduced_unique(sys, w));
}

TEST_CASE("enumerate_a1 exhaustive cross-check at bounded length") {
  CoxeterSystem sys({{1, 3, 2}, {3, 1, 7}, {2, 7, 1}});
  CellDatum cell = enumerate_a1(sys);
  std::set<Word> present(cell.elements.begin(), cell.elements.end());
  std::vector<Word> frontier{{}};
  for (int len = 1; len <= 8; ++len) {
    std::vector<Word> next;
    for (const Word& w : frontier)
      for (int g = 0; g < 3; ++g) {
        Word e = w;
        e.push_back(g);
        next.push_back(e);
        CHECK(reduced_unique(sys, e) == (present.count(e) > 0));
      }
    frontier = std::move(next);
  }
}

TEST_CASE("enumerate_a1 on type A3") {
  CoxeterSystem a3({{1, 3, 2}, {3, 1, 3}, {2, 3, 1}});
  CellDatum cell = enumerate_a1(a3);
  std::set<std::string> expected{"1", "2", "3", "12", "21", "23", "32", "123", "321"};
  CHECK(element_labels(a3, cell) == expected);
  for (int g = 0; g < 3; ++g) CHECK(cell.h_cells.at({g, g}).size() == 1);
}

TEST_CASE("enumerate_a1 dihedral consistency") {
  CoxeterSystem i7 = CoxeterSystem::dihedral(7);
  CellDatum cell = enumerate_a1(i7);
  CHECK(element_labels(i7, cell) == dihedral_middle_oracle(7));
}

TEST_CASE("enumerate_a1 sizes match the closed form") {
  // includes even-bond cases where the two count branches differ
  std::vector<CoxeterSystem> systems = {
      CoxeterSystem({{1, 3, 2}, {3, 1, 7}, {2, 7, 1}}),
      coxeter_from_token("B4"),
      coxeter_from_token("A4"),
      coxeter_from_token("H3"),
      CoxeterSystem::dihedral(6),
  };
  for (const auto& sys : systems) {
    CellDatum cell = enumerate_a1(sys);
    size_t total = 0;
    for (int r = 0; r < sys.rank(); ++r)
      for (int s = 0; s < sys.rank(); ++s) {
        size_t expected = hcell_size_oracle(sys, r, s);
        auto it = cell.h_cells.find({r, s});
        size_t got = it == cell.h_cells.end() ? 0 : it->second.size();
        CHECK(got == expected);
        total += got;
      }
    CHECK(total == cell.elements.size());
  }
}

TEST_CASE("enumerate_a1 rejects non-finite input") {
  CoxeterSystem inf({{1, kInfiniteBond}, {kInfiniteBond, 1}});
  CHECK_THROWS_AS(enumerate_a1(inf), std::invalid_argument);
}

TEST_CASE("a1 hcell ring for W_237") {
  CoxeterSystem sys({{1, 3, 2}, {3, 1, 7}, {2, 7, 1}});
  BasedRing ring = a1_hcell_ring(sys);
  REQUIRE(ring.rank() == 3);
  CHECK(ring.basis() == std::vector<std::string>{"2", "232", "23232"});
  int i232 = ring.index_of("232");
  // j_{232}^2 = j_2 + j_{232} + j_{23232}
  CHECK(ring.coeff(i232, i232, ring.index_of("2")) == 1);
  CHECK(ring.coeff(i232, i232, i232) == 1);
  CHECK(ring.coeff(i232, i232, ring.index_of("23232")) == 1);
}

TEST_CASE("a2 classification catalog") {
  A2Classification f5 = a2_classify(coxeter_from_token("F5"));
  CHECK(f5.type_tag == "F5");
  CHECK(f5.a2_finite);
  CHECK(f5.hcell_words == std::vector<std::string>{"24", "243524"});
  REQUIRE(f5.hcell_ring.has_value());
  CHECK(f5.hcell_ring->rank() == 2);
  // Fibonacci: x^2 = 1 + x
  CHECK(f5.hcell_ring->coeff(1, 1, 0) == 1);
  CHECK(f5.hcell_ring->coeff(1, 1, 1) == 1);

  A2Classification ct4 = a2_classify(coxeter_from_token("C~4"));
  CHECK(ct4.type_tag == "C~4");
  CHECK(ct4.hcell_words == std::vector<std::string>{"24", "2124", "2454", "212454"});
  REQUIRE(ct4.hcell_ring.has_value());
  CHECK(ct4.hcell_ring->rank() == 4);

  A2Classification h3 = a2_classify(coxeter_from_token("H3"));
  CHECK(h3.type_tag == "H3");
  CHECK(h3.hcell_words == std::vector<std::string>{"13"});

  A2Classification h4 = a2_classify(coxeter_from_token("H4"));
  CHECK(h4.hcell_words == std::vector<std::string>{"24", "2124"});
  REQUIRE(h4.hcell_ring.has_value());
  CHECK(h4.hcell_ring->coeff(1, 1, 1) == 1);  // Fibonacci

  A2Classification b6 = a2_classify(coxeter_from_token("B6"));
  CHECK(b6.hcell_words == std::vector<std::string>{"24", "2124"});
  CHECK(b6.hcell_ring->coeff(1, 1, 1) == 0);  // pointed, not Fibonacci

  A2Classification e23 = a2_classify(coxeter_from_token("E2,3"));
  CHECK(e23.type_tag == "E2,3");
  CHECK(e23.hcell_words == std::vector<std::string>{"1v"});

  A2Classification a5 = a2_classify(coxeter_from_token("A5"));
  CHECK(a5.hcell_words == std::vector<std::string>{"13"});

  A2Classification i7 = a2_classify(coxeter_from_token("I7"));
  CHECK(i7.w2_empty);
}

TEST_CASE("a2 classification rejections and verdicts") {
  CoxeterSystem cyc({{1, 3, 3}, {3, 1, 3}, {3, 3, 1}});
  A2Classification c = a2_classify(cyc);
  CHECK_FALSE(c.a2_finite);
  CHECK(c.type_tag == "cycle");
  // a chain with a 6-bond is outside the catalog
  CoxeterSystem g({{1, 6, 2}, {6, 1, 3}, {2, 3, 1}});
  CHECK_THROWS_AS(a2_classify(g), std::invalid_argument);
  // reducible systems are not classified
  CoxeterSystem red({{1, 2}, {2, 1}});
  CHECK_THROWS_AS(a2_classify(red), std::invalid_argument);
}

TEST_CASE("a1 hcell ring degenerate cases") {
  // single generator: the H-cell is the generator itself
  CoxeterSystem a1(std::vector<std::vector<int>>{{1}});
  BasedRing r = a1_hcell_ring(a1);
  CHECK(r.rank() == 1);
  // all-3 tree: the maximal-bond H-cell is a singleton
  CoxeterSystem a3({{1, 3, 2}, {3, 1, 3}, {2, 3, 1}});
  CHECK(a1_hcell_ring(a3).rank() == 1);
}
