#include "cellmod/coxeter.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cellmod {

CoxeterSystem::CoxeterSystem(std::vector<std::vector<int>> bonds_, std::vector<std::string> labels_)
    : bonds(std::move(bonds_)), labels(std::move(labels_)) {
  const int r = rank();
  if (r == 0) throw std::invalid_argument("CoxeterSystem: empty generator set");
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(bonds[i].size()) != r)
      throw std::invalid_argument("CoxeterSystem: bond table is not square");
    if (bonds[i][i] != 1) throw std::invalid_argument("CoxeterSystem: diagonal must be 1");
    for (int j = 0; j < r; ++j) {
      if (bonds[i][j] != bonds[j][i])
        throw std::invalid_argument("CoxeterSystem: bond table must be symmetric");
      if (i != j && bonds[i][j] != kInfiniteBond && bonds[i][j] < 2)
        throw std::invalid_argument("CoxeterSystem: off-diagonal bonds must be at least 2");
    }
  }
  if (labels.empty())
    for (int i = 0; i < r; ++i) labels.push_back(std::to_string(i + 1));
  if (static_cast<int>(labels.size()) != r)
    throw std::invalid_argument("CoxeterSystem: label count mismatch");
}

std::vector<std::vector<int>> CoxeterSystem::components() const {
  const int r = rank();
  std::vector<int> comp(r, -1);
  std::vector<std::vector<int>> out;
  for (int i = 0; i < r; ++i) {
    if (comp[i] >= 0) continue;
    std::vector<int> stack{i}, members;
    comp[i] = static_cast<int>(out.size());
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (int j = 0; j < r; ++j)
        if (j != v && connected(v, j) && comp[j] < 0) {
          comp[j] = comp[i];
          stack.push_back(j);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

CoxeterSystem CoxeterSystem::dihedral(int n) {
  if (n < 3 && n != kInfiniteBond) throw std::invalid_argument("dihedral: order must be >= 3");
  return CoxeterSystem({{1, n}, {n, 1}}, {"s", "t"});
}

CoxeterSystem CoxeterSystem::parse(const std::string& text) {
  std::istringstream in(text);
  int r = 0;
  if (!(in >> r) || r <= 0) throw std::invalid_argument("coxeter matrix: bad generator count");
  std::vector<std::vector<int>> bonds(r, std::vector<int>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      std::string tok;
      if (!(in >> tok)) throw std::invalid_argument("coxeter matrix: truncated table");
      if (tok == "inf" || tok == "Inf" || tok == "INF")
        bonds[i][j] = kInfiniteBond;
      else
        bonds[i][j] = std::stoi(tok);
    }
  return CoxeterSystem(std::move(bonds));
}

std::string CoxeterSystem::format() const {
  std::ostringstream os;
  os << rank() << "\n";
  for (int i = 0; i < rank(); ++i) {
    for (int j = 0; j < rank(); ++j) {
      if (j) os << " ";
      if (bonds[i][j] == kInfiniteBond)
        os << "inf";
      else
        os << bonds[i][j];
    }
    os << "\n";
  }
  return os.str();
}

std::string word_label(const CoxeterSystem& sys, const Word& w) {
  std::string s;
  for (int g : w) s += sys.labels[g];
  return s;
}

bool reduced_unique(const CoxeterSystem& sys, const Word& w) {
  if (w.empty()) return false;
  for (size_t i = 0; i + 1 < w.size(); ++i) {
    int a = w[i], b = w[i + 1];
    if (a == b) return false;
    int m = sys.bonds[a][b];
    if (m == 2) return false;  // commuting letters can be swapped
    if (m == kInfiniteBond) continue;
    // length of the alternating run through position i+1
    size_t run = 2, j = i + 1;
    while (j + 1 < w.size() && w[j + 1] == w[j - 1]) {
      ++run;
      ++j;
    }
    size_t back = i;
    while (back > 0 && w[back - 1] == w[back + 1]) {
      ++run;
      --back;
    }
    if (run >= static_cast<size_t>(m)) return false;
  }
  return true;
}

namespace {

CellDatum make_cell(const CoxeterSystem&, std::vector<Word> words, int a_value) {
  CellDatum cell;
  std::sort(words.begin(), words.end(), [&](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  cell.elements = std::move(words);
  cell.a_value = a_value;
  std::map<int, std::vector<int>> by_last, by_first;
  for (size_t i = 0; i < cell.elements.size(); ++i) {
    const Word& w = cell.elements[i];
    if (w.empty()) continue;
    by_first[w.front()].push_back(static_cast<int>(i));
    by_last[w.back()].push_back(static_cast<int>(i));
    cell.h_cells[{w.front(), w.back()}].push_back(static_cast<int>(i));
    if (w.size() == 1) cell.duflo.push_back(static_cast<int>(i));
  }
  for (auto& [g, v] : by_last) cell.left_cells.push_back(v);
  for (auto& [g, v] : by_first) cell.right_cells.push_back(v);
  return cell;
}

}  // namespace

std::vector<CellDatum> dihedral_cells(int n) {
  if (n < 3) throw std::invalid_argument("dihedral_cells: n must be at least 3");
  CoxeterSystem sys = CoxeterSystem::dihedral(n);
  CellDatum trivial;
  trivial.elements = {Word{}};
  trivial.a_value = 0;
  trivial.left_cells = {{0}};
  trivial.right_cells = {{0}};
  trivial.duflo = {0};

  std::vector<Word> middle;
  for (int first = 0; first < 2; ++first)
    for (int len = 1; len <= n - 1; ++len) {
      Word w;
      for (int i = 0; i < len; ++i) w.push_back((first + i) % 2);
      middle.push_back(std::move(w));
    }
  CellDatum mid = make_cell(sys, std::move(middle), 1);

  CellDatum top;
  Word w0;
  for (int i = 0; i < n; ++i) w0.push_back(i % 2);
  top.elements = {w0};
  top.a_value = n;
  top.left_cells = {{0}};
  top.right_cells = {{0}};
  top.h_cells[{w0.front(), w0.back()}] = {0};
  top.duflo = {0};
  return {trivial, mid, top};
}

A1Verdict a1_finite(const CoxeterSystem& sys) {
  for (const auto& comp : sys.components()) {
    int edges = 0, large = 0;
    for (size_t a = 0; a < comp.size(); ++a)
      for (size_t b = a + 1; b < comp.size(); ++b) {
        int m = sys.bonds[comp[a]][comp[b]];
        if (m == kInfiniteBond) return {false, "infinite bond"};
        if (m >= 3) ++edges;
        if (m > 3) ++large;
      }
    if (edges != static_cast<int>(comp.size()) - 1) return {false, "diagram contains a cycle"};
    if (large > 1) return {false, "more than one bond exceeding 3 in a component"};
  }
  return {true, "ok"};
}

CellDatum enumerate_a1(const CoxeterSystem& sys) {
  A1Verdict v = a1_finite(sys);
  if (!v.finite) throw std::invalid_argument("enumerate_a1: not a(1)-finite: " + v.reason);
  int max_bond = 3;
  for (int i = 0; i < sys.rank(); ++i)
    for (int j = i + 1; j < sys.rank(); ++j) max_bond = std::max(max_bond, sys.bonds[i][j]);
  const size_t length_bound = 2 * static_cast<size_t>(sys.rank()) + static_cast<size_t>(max_bond);
  std::vector<Word> words;
  Word w;
  std::function<void()> dfs = [&] {
    words.push_back(w);
    if (words.size() > 200000) throw std::logic_error("enumerate_a1: search exploded");
    if (w.size() >= length_bound) throw std::logic_error("enumerate_a1: length bound exceeded");
    int last = w.back();
    for (int g = 0; g < sys.rank(); ++g) {
      if (g == last || sys.bonds[last][g] < 3) continue;
      w.push_back(g);
      if (reduced_unique(sys, w)) dfs();
      w.pop_back();
    }
  };
  for (int s = 0; s < sys.rank(); ++s) {
    w = {s};
    dfs();
  }
  return make_cell(sys, std::move(words), 1);
}

BasedRing a1_hcell_ring(const CoxeterSystem& sys) {
  A1Verdict v = a1_finite(sys);
  if (!v.finite) throw std::invalid_argument("a1_hcell_ring: not a(1)-finite: " + v.reason);
  int s = 0, t = 1, m = 0;
  for (int i = 0; i < sys.rank(); ++i)
    for (int j = i + 1; j < sys.rank(); ++j)
      if (sys.bonds[i][j] >= 3 && sys.bonds[i][j] > m) {
        m = sys.bonds[i][j];
        s = i;
        t = j;
      }
  if (m == 0) {
    // no edge at all: the H-cell of any generator is just that generator
    BasedRing::Sparse table;
    table[{0, 0}] = {{0, 1}};
    return BasedRing({sys.labels[0]}, std::move(table), {0}, {0});
  }
  BasedRing h = hcell_restrict(dihedral_jring(m), "s");
  // relabel "s","sts",... with the actual generator labels of the bond
  std::vector<std::string> labels;
  for (const auto& word : h.basis()) {
    std::string lab;
    for (size_t i = 0; i < word.size(); ++i) lab += sys.labels[i % 2 == 0 ? s : t];
    labels.push_back(lab);
  }
  BasedRing::Sparse table;
  for (int i = 0; i < h.rank(); ++i)
    for (int j = 0; j < h.rank(); ++j) {
      auto terms = h.product(i, j);
      if (!terms.empty()) table[{i, j}] = terms;
    }
  return BasedRing(std::move(labels), std::move(table), h.unit_support(), h.involution());
}

namespace {

BasedRing trivial_ring(const std::string& label) {
  BasedRing::Sparse table;
  table[{0, 0}] = {{0, 1}};
  return BasedRing({label}, std::move(table), {0}, {0});
}

BasedRing rank2_ring(const std::string& unit, const std::string& x, bool fibonacci) {
  BasedRing::Sparse table;
  table[{0, 0}] = {{0, 1}};
  table[{0, 1}] = {{1, 1}};
  table[{1, 0}] = {{1, 1}};
  if (fibonacci)
    table[{1, 1}] = {{0, 1}, {1, 1}};
  else
    table[{1, 1}] = {{0, 1}};
  return BasedRing({unit, x}, std::move(table), {0}, {0, 1});
}

BasedRing fib_square_ring(const std::vector<std::string>& labels) {
  BasedRing fib = rank2_ring("a", "b", true);
  BasedRing sq = tensor_product(fib, fib);
  BasedRing::Sparse table;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      auto terms = sq.product(i, j);
      if (!terms.empty()) table[{i, j}] = terms;
    }
  return BasedRing(labels, std::move(table), sq.unit_support(), sq.involution());
}

// orders the generators of a path graph from one endpoint to the other
std::optional<std::vector<int>> path_order(const CoxeterSystem& sys) {
  const int r = sys.rank();
  std::vector<std::vector<int>> adj(r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (i != j && sys.connected(i, j)) adj[i].push_back(j);
  int endpoint = -1;
  for (int i = 0; i < r; ++i) {
    if (adj[i].size() > 2) return std::nullopt;
    if (adj[i].size() <= 1 && endpoint < 0) endpoint = i;
  }
  if (r == 1) return std::vector<int>{0};
  if (endpoint < 0) return std::nullopt;  // cycle
  std::vector<int> order{endpoint};
  int prev = -1, cur = endpoint;
  while (static_cast<int>(order.size()) < r) {
    int next = -1;
    for (int j : adj[cur])
      if (j != prev) next = j;
    if (next < 0) return std::nullopt;  // disconnected
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  return order;
}

bool has_cycle(const CoxeterSystem& sys) {
  for (const auto& comp : sys.components()) {
    int edges = 0;
    for (size_t a = 0; a < comp.size(); ++a)
      for (size_t b = a + 1; b < comp.size(); ++b)
        if (sys.connected(comp[a], comp[b])) ++edges;
    if (edges >= static_cast<int>(comp.size())) return true;
  }
  return false;
}

std::string ctilde_z_word(int rank) {
  // 4 5 ... (rank-1) rank (rank-1) ... 5 4
  std::string z;
  for (int i = 4; i <= rank; ++i) z += std::to_string(i);
  for (int i = rank - 1; i >= 4; --i) z += std::to_string(i);
  return z;
}

}  // namespace

A2Classification a2_classify(const CoxeterSystem& sys) {
  if (sys.components().size() != 1)
    throw std::invalid_argument("a2_classify: not classified (reducible system)");
  A2Classification out;
  if (has_cycle(sys)) {
    out.type_tag = "cycle";
    out.a2_finite = false;
    out.note = "diagram contains a cycle: the a-value-2 stratum is empty or infinite";
    return out;
  }
  const int r = sys.rank();
  if (r == 1) {
    out = {"A1", true, true, {}, std::nullopt, "no elements of a-value 2"};
    return out;
  }
  if (r == 2) {
    int m = sys.bonds[0][1];
    out.type_tag = m == kInfiniteBond ? "Iinf" : (m == 3 ? "A2" : "I" + std::to_string(m));
    out.a2_finite = true;
    out.w2_empty = true;
    out.note = "dihedral: a-values are 0, 1 and the Coxeter number";
    return out;
  }

  // T-shaped diagram with all bonds 3: E_{q,r}
  std::vector<int> degree(r, 0);
  int max_bond = 0;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (i != j && sys.connected(i, j)) {
        ++degree[i];
        if (sys.bonds[i][j] == kInfiniteBond)
          throw std::invalid_argument("a2_classify: not classified (infinite bond)");
        max_bond = std::max(max_bond, sys.bonds[i][j]);
      }
  int branch = -1;
  for (int i = 0; i < r; ++i) {
    if (degree[i] == 3 && branch < 0)
      branch = i;
    else if (degree[i] > 2)
      throw std::invalid_argument("a2_classify: not classified (branch degree too high)");
  }
  if (branch >= 0) {
    if (max_bond != 3)
      throw std::invalid_argument("a2_classify: not classified (branched diagram with large bond)");
    // arm lengths from the branch node
    std::vector<int> arms;
    for (int j = 0; j < r; ++j) {
      if (j == branch || !sys.connected(branch, j)) continue;
      int len = 1, prev = branch, cur = j;
      while (true) {
        int next = -1;
        for (int t = 0; t < r; ++t)
          if (t != prev && t != cur && sys.connected(cur, t)) next = t;
        if (next < 0) break;
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms.size() != 3 || arms[0] != 1)
      throw std::invalid_argument("a2_classify: not classified (branched shape)");
    int q = arms[1], rr = arms[2];
    out.type_tag = "E" + std::to_string(q) + "," + std::to_string(rr);
    out.a2_finite = true;
    if (q >= 2) {
      out.hcell_words = {"1v"};
      out.hcell_ring = trivial_ring("1v");
    } else {
      out.note = "type D_{r+3}; the catalog lists no representative H-cell";
    }
    return out;
  }

  auto order_opt = path_order(sys);
  if (!order_opt) throw std::invalid_argument("a2_classify: not classified (shape)");
  std::vector<int> order = *order_opt;
  auto bond_at = [&](int i) { return sys.bonds[order[i]][order[i + 1]]; };
  std::vector<int> big_positions;
  for (int i = 0; i + 1 < r; ++i)
    if (bond_at(i) != 3) big_positions.push_back(i);

  if (big_positions.empty()) {
    out.type_tag = "A" + std::to_string(r);
    out.a2_finite = true;
    out.hcell_words = {"13"};
    out.hcell_ring = trivial_ring("13");
    return out;
  }
  if (big_positions.size() == 1) {
    int pos = big_positions[0];
    int m = bond_at(pos);
    bool at_end = pos == 0 || pos == r - 2;
    bool second = pos == 1 || pos == r - 3;
    if (m == 4 && at_end) {
      out.type_tag = "B" + std::to_string(r);
      out.a2_finite = true;
      if (r == 3) {
        out.hcell_words = {"13"};
        out.hcell_ring = trivial_ring("13");
      } else {
        out.hcell_words = {"24", "2124"};
        out.hcell_ring = rank2_ring("24", "2124", false);
      }
      return out;
    }
    if (m == 4 && second && r >= 4) {
      out.type_tag = "F" + std::to_string(r);
      out.a2_finite = true;
      if (r == 4) {
        out.hcell_words = {"24"};
        out.hcell_ring = trivial_ring("24");
      } else {
        out.hcell_words = {"24", "243524"};
        out.hcell_ring = rank2_ring("24", "243524", true);
      }
      return out;
    }
    if (m == 5 && at_end) {
      out.type_tag = "H" + std::to_string(r);
      out.a2_finite = true;
      if (r == 3) {
        out.hcell_words = {"13"};
        out.hcell_ring = trivial_ring("13");
      } else {
        out.hcell_words = {"24", "2124"};
        out.hcell_ring = rank2_ring("24", "2124", true);
      }
      return out;
    }
    throw std::invalid_argument("a2_classify: not classified (bond pattern)");
  }
  if (big_positions.size() == 2 && big_positions[0] == 0 && big_positions[1] == r - 2 &&
      bond_at(0) == 4 && bond_at(r - 2) == 4 && r >= 5) {
    out.type_tag = "C~" + std::to_string(r - 1);
    out.a2_finite = true;
    std::string z = ctilde_z_word(r);
    out.hcell_words = {"24", "2124", "2" + z, "212" + z};
    out.hcell_ring = fib_square_ring({"24", "2" + z, "2124", "212" + z});
    out.note = "H-cell ring per the a(2) catalog (Fibonacci square)";
    return out;
  }
  throw std::invalid_argument("a2_classify: not classified (bond pattern)");
}

CoxeterSystem coxeter_from_token(const std::string& token) {
  if (token.empty()) throw std::invalid_argument("empty type token");
  auto chain = [](int r, const std::map<int, int>& special) {
    std::vector<std::vector<int>> b(r, std::vector<int>(r, 2));
    for (int i = 0; i < r; ++i) b[i][i] = 1;
    for (int i = 0; i + 1 < r; ++i) {
      auto it = special.find(i);
      int m = it == special.end() ? 3 : it->second;
      b[i][i + 1] = b[i + 1][i] = m;
    }
    return CoxeterSystem(std::move(b));
  };
  char family = token[0];
  std::string rest = token.substr(1);
  if (family == 'C' && !rest.empty() && rest[0] == '~') {
    int m = std::stoi(rest.substr(1));
    if (m < 3) throw std::invalid_argument("C~ rank must be at least 3");
    return chain(m + 1, {{0, 4}, {m - 1, 4}});
  }
  if (family == 'E') {
    auto comma = rest.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("E token needs q,r");
    int q = std::stoi(rest.substr(0, comma));
    int rr = std::stoi(rest.substr(comma + 1));
    if (q < 1 || rr < q) throw std::invalid_argument("E token needs r >= q >= 1");
    // nodes: -q..-1, 0, 1..r, then v attached to node 0
    int n = q + rr + 2;
    std::vector<std::vector<int>> b(n, std::vector<int>(n, 2));
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) b[i][i] = 1;
    for (int i = -q; i <= rr; ++i) labels.push_back(std::to_string(i));
    labels.push_back("v");
    for (int i = 0; i + 1 < q + rr + 1; ++i) b[i][i + 1] = b[i + 1][i] = 3;
    b[q][n - 1] = b[n - 1][q] = 3;  // v - 0
    return CoxeterSystem(std::move(b), std::move(labels));
  }
  if (family == 'I') {
    if (rest == "inf") return CoxeterSystem::dihedral(kInfiniteBond);
    return CoxeterSystem::dihedral(std::stoi(rest));
  }
  int r = std::stoi(rest);
  switch (family) {
    case 'A':
      if (r < 1) throw std::invalid_argument("A rank must be at least 1");
      return chain(r, {});
    case 'B':
      if (r < 2) throw std::invalid_argument("B rank must be at least 2");
      return chain(r, {{0, 4}});
    case 'F':
      if (r < 4) throw std::invalid_argument("F rank must be at least 4");
      return chain(r, {{1, 4}});
    case 'H':
      if (r < 2) throw std::invalid_argument("H rank must be at least 2");
      return chain(r, {{0, 5}});
    default:
      throw std::invalid_argument("unknown type token: " + token);
  }
}

}  // namespace cellmod
