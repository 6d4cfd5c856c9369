#include "cellmod/basedring.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cellmod {

const std::map<int, long long> BasedRing::kEmpty = {};

BasedRing::BasedRing(std::vector<std::string> basis, Sparse structure,
                     std::vector<int> unit_support, std::vector<int> involution)
    : basis_(std::move(basis)),
      structure_(std::move(structure)),
      unit_support_(std::move(unit_support)),
      involution_(std::move(involution)) {
  validate();
}

long long BasedRing::coeff(int i, int j, int k) const {
  auto it = structure_.find({i, j});
  if (it == structure_.end()) return 0;
  auto kt = it->second.find(k);
  return kt == it->second.end() ? 0 : kt->second;
}

const std::map<int, long long>& BasedRing::product(int i, int j) const {
  auto it = structure_.find({i, j});
  return it == structure_.end() ? kEmpty : it->second;
}

int BasedRing::index_of(const std::string& label) const {
  for (size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i] == label) return static_cast<int>(i);
  return -1;
}

bool operator==(const BasedRing& a, const BasedRing& b) {
  return a.basis_ == b.basis_ && a.structure_ == b.structure_ &&
         a.unit_support_ == b.unit_support_ && a.involution_ == b.involution_;
}

void BasedRing::validate() const {
  const int r = rank();
  if (r == 0) throw std::invalid_argument("BasedRing: empty basis");
  if (static_cast<int>(involution_.size()) != r)
    throw std::invalid_argument("BasedRing: involution size mismatch");
  for (int i = 0; i < r; ++i) {
    if (involution_[i] < 0 || involution_[i] >= r || involution_[involution_[i]] != i)
      throw std::invalid_argument("BasedRing: involution is not an involution");
  }
  if (unit_support_.empty()) throw std::invalid_argument("BasedRing: empty unit support");
  std::set<int> unit(unit_support_.begin(), unit_support_.end());
  for (const auto& [key, terms] : structure_) {
    if (key.first < 0 || key.first >= r || key.second < 0 || key.second >= r)
      throw std::invalid_argument("BasedRing: index out of range");
    for (const auto& [k, c] : terms) {
      if (k < 0 || k >= r) throw std::invalid_argument("BasedRing: index out of range");
      if (c <= 0) throw std::invalid_argument("BasedRing: nonpositive structure constant");
    }
  }
  // unit: sum_{u in I0} c_{u,j}^k = delta_{jk} = sum_{u in I0} c_{j,u}^k
  for (int j = 0; j < r; ++j) {
    std::map<int, long long> left, right;
    for (int u : unit) {
      for (const auto& [k, c] : product(u, j)) left[k] += c;
      for (const auto& [k, c] : product(j, u)) right[k] += c;
    }
    if (left != std::map<int, long long>{{j, 1}} || right != std::map<int, long long>{{j, 1}})
      throw std::invalid_argument("BasedRing: unit condition fails at " + basis_[j]);
  }
  // tau: sum_{u in I0} c_{i,j}^u = [j == i*]
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      long long tau = 0;
      for (int u : unit) tau += coeff(i, j, u);
      if (tau != (involution_[i] == j ? 1 : 0))
        throw std::invalid_argument("BasedRing: tau condition fails at (" + basis_[i] + "," +
                                    basis_[j] + ")");
    }
  // associativity
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) {
        std::map<int, long long> lhs, rhs;
        for (const auto& [m, c] : product(i, j))
          for (const auto& [l, d] : product(m, k)) lhs[l] += c * d;
        for (const auto& [m, c] : product(j, k))
          for (const auto& [l, d] : product(i, m)) rhs[l] += c * d;
        if (lhs != rhs)
          throw std::invalid_argument("BasedRing: associativity fails at (" + basis_[i] + "," +
                                      basis_[j] + "," + basis_[k] + ")");
      }
}

namespace {

// words of the middle cell of I2(n): index 0..n-2 the words of length 1..n-1
// starting with s, then the same starting with t
std::string dihedral_word(int first, int len) {
  static const char* gen = "st";
  std::string w;
  for (int i = 0; i < len; ++i) w += gen[(first + i) % 2];
  return w;
}

int middle_index(int first, int len, int n) { return first * (n - 1) + (len - 1); }

std::vector<std::string> middle_basis(int n) {
  std::vector<std::string> basis;
  for (int first = 0; first < 2; ++first)
    for (int len = 1; len <= n - 1; ++len) basis.push_back(dihedral_word(first, len));
  return basis;
}

int middle_involution(int first, int len, int n) {
  // word reversal: fixes odd-length words, swaps s<->t for even lengths
  int rev_first = (first + len - 1) % 2;
  return middle_index(rev_first, len, n);
}

void check_dihedral_order(int n) {
  if (n < 3) throw std::invalid_argument("dihedral order must be at least 3");
}

}  // namespace

BasedRing dihedral_jring(int n) {
  check_dihedral_order(n);
  BasedRing::Sparse table;
  for (int a = 0; a < 2; ++a)
    for (int k = 1; k <= n - 1; ++k)
      for (int b = 0; b < 2; ++b)
        for (int l = 1; l <= n - 1; ++l) {
          int last = (a + k - 1) % 2;
          if (last != b) continue;  // descent mismatch
          auto& terms = table[{middle_index(a, k, n), middle_index(b, l, n)}];
          for (int u = std::max(0, k + l - n); u <= std::min(k, l) - 1; ++u)
            terms[middle_index(a, k + l - 1 - 2 * u, n)] = 1;
        }
  std::vector<int> involution(2 * (n - 1));
  for (int a = 0; a < 2; ++a)
    for (int k = 1; k <= n - 1; ++k)
      involution[middle_index(a, k, n)] = middle_involution(a, k, n);
  std::vector<int> unit = {middle_index(0, 1, n), middle_index(1, 1, n)};
  return BasedRing(middle_basis(n), std::move(table), std::move(unit), std::move(involution));
}

namespace {

// ---- dihedral Hecke algebra over Z[v,v^-1] --------------------------------

struct Laurent {
  std::map<int, long long> c;  // exponent -> coefficient

  bool zero() const { return c.empty(); }
  long long coeff(int e) const {
    auto it = c.find(e);
    return it == c.end() ? 0 : it->second;
  }
  void add(int e, long long v) {
    if (v == 0) return;
    auto it = c.emplace(e, 0).first;
    it->second += v;
    if (it->second == 0) c.erase(it);
  }
  void add_scaled(const Laurent& o, const Laurent& f) {
    for (const auto& [e1, c1] : o.c)
      for (const auto& [e2, c2] : f.c) add(e1 + e2, c1 * c2);
  }
};

Laurent monomial(int e, long long v = 1) {
  Laurent l;
  l.add(e, v);
  return l;
}

// group element of I2(n): alternating word (first,len), 0<=len<=n;
// canonical form: len==0 or len==n forces first=0
struct DElem {
  int len = 0;
  int first = 0;
};

DElem canon(int len, int first, int n) {
  if (len == 0 || len == n) return {len, 0};
  return {len, first};
}

int elem_index(const DElem& e) { return e.len == 0 ? 0 : 2 * e.len - 1 + e.first; }

DElem elem_append(const DElem& e, int g, int n, bool& longer) {
  if (e.len == 0) {
    longer = true;
    return canon(1, g, n);
  }
  int first = e.first;
  if (e.len == n) {
    // use the reduced expression of w0 that ends in g
    first = ((g - (n - 1)) % 2 + 2) % 2;
  }
  int last = (first + e.len - 1) % 2;
  if (last == g) {
    longer = false;
    return canon(e.len - 1, first, n);
  }
  longer = true;
  return canon(e.len + 1, first, n);
}

using HeckeVec = std::map<int, Laurent>;  // elem_index -> coefficient

std::vector<DElem> all_elements(int n) {
  std::vector<DElem> v;
  v.push_back({0, 0});
  for (int len = 1; len < n; ++len)
    for (int first = 0; first < 2; ++first) v.push_back({len, first});
  v.push_back({n, 0});
  return v;
}

HeckeVec right_mult_gen(const HeckeVec& p, int g, int n) {
  HeckeVec q;
  const Laurent quad = [] {
    Laurent l;
    l.add(-1, 1);
    l.add(1, -1);
    return l;
  }();
  for (const auto& [idx, f] : p) {
    // recover element from index
    DElem e = idx == 0 ? DElem{0, 0} : DElem{(idx + 1) / 2, (idx - 1) % 2};
    if (e.len == n) e.first = 0;
    bool longer = false;
    DElem eg = elem_append(e, g, n, longer);
    for (const auto& [exp, c] : f.c) q[elem_index(eg)].add(exp, c);
    if (!longer) {
      Laurent extra;
      extra.add_scaled(f, quad);
      for (const auto& [exp, c] : extra.c) q[idx].add(exp, c);
    }
  }
  for (auto it = q.begin(); it != q.end();)
    it = it->second.zero() ? q.erase(it) : std::next(it);
  return q;
}

// Kazhdan-Lusztig basis element b_x as a delta-basis vector: all dihedral
// KL polynomials are v^{l(x)-l(y)}.
HeckeVec kl_basis(const DElem& x, int n) {
  HeckeVec v;
  v[elem_index(x)] = monomial(0);
  if (x.len > 0) v[0] = monomial(x.len);
  for (int len = 1; len < x.len; ++len)
    for (int first = 0; first < 2; ++first)
      v[elem_index(canon(len, first, n))] = monomial(x.len - len);
  return v;
}

HeckeVec hecke_product(const DElem& x, const DElem& y, int n) {
  HeckeVec bx = kl_basis(x, n);
  HeckeVec result;
  // b_x * b_y = sum over delta-terms of b_y of b_x * (coef * delta_z)
  HeckeVec by = kl_basis(y, n);
  for (const auto& [zidx, coef] : by) {
    DElem z = zidx == 0 ? DElem{0, 0} : DElem{(zidx + 1) / 2, (zidx - 1) % 2};
    if (z.len == n) z.first = 0;
    HeckeVec cur = bx;
    for (int i = 0; i < z.len; ++i) cur = right_mult_gen(cur, (z.first + i) % 2, n);
    for (const auto& [idx, f] : cur) {
      Laurent scaled;
      scaled.add_scaled(f, coef);
      for (const auto& [exp, c] : scaled.c) result[idx].add(exp, c);
    }
  }
  for (auto it = result.begin(); it != result.end();)
    it = it->second.zero() ? result.erase(it) : std::next(it);
  return result;
}

}  // namespace

BasedRing dihedral_gamma_oracle(int n) {
  check_dihedral_order(n);
  auto elements = all_elements(n);
  BasedRing::Sparse table;
  for (int a = 0; a < 2; ++a)
    for (int k = 1; k <= n - 1; ++k)
      for (int b = 0; b < 2; ++b)
        for (int l = 1; l <= n - 1; ++l) {
          DElem x{k, a}, y{l, b};
          HeckeVec prod = hecke_product(x, y, n);
          // peel off KL basis elements from the longest down; the delta_z
          // coefficient at each stage is h_{x,y,z}
          std::map<int, Laurent> h;
          for (auto it = elements.rbegin(); it != elements.rend(); ++it) {
            int idx = elem_index(*it);
            auto pit = prod.find(idx);
            if (pit == prod.end() || pit->second.zero()) continue;
            Laurent hz = pit->second;
            h[idx] = hz;
            HeckeVec bz = kl_basis(*it, n);
            for (const auto& [widx, f] : bz) {
              Laurent scaled;
              scaled.add_scaled(f, hz);
              auto& slot = prod[widx];
              for (const auto& [exp, c] : scaled.c) slot.add(exp, -c);
            }
            for (auto jt = prod.begin(); jt != prod.end();)
              jt = jt->second.zero() ? prod.erase(jt) : std::next(jt);
          }
          // gamma for middle-cell z (a-value 1): coefficient of v^{-1}
          auto& terms = table[{middle_index(a, k, n), middle_index(b, l, n)}];
          for (int zf = 0; zf < 2; ++zf)
            for (int zl = 1; zl <= n - 1; ++zl) {
              auto it = h.find(elem_index(DElem{zl, zf}));
              if (it == h.end()) continue;
              for (const auto& [exp, c] : it->second.c)
                if (exp < -1)
                  throw std::logic_error("gamma oracle: middle-cell h below v^-1");
              long long g = it->second.coeff(-1);
              if (g < 0) throw std::logic_error("gamma oracle: negative coefficient");
              if (g > 0) terms[middle_index(zf, zl, n)] = g;
            }
          if (terms.empty()) table.erase({middle_index(a, k, n), middle_index(b, l, n)});
        }
  std::vector<int> involution(2 * (n - 1));
  for (int a = 0; a < 2; ++a)
    for (int k = 1; k <= n - 1; ++k)
      involution[middle_index(a, k, n)] = middle_involution(a, k, n);
  std::vector<int> unit = {middle_index(0, 1, n), middle_index(1, 1, n)};
  return BasedRing(middle_basis(n), std::move(table), std::move(unit), std::move(involution));
}

BasedRing hcell_restrict(const BasedRing& ring, const std::string& duflo_label) {
  int d = ring.index_of(duflo_label);
  bool in_unit = d >= 0 && std::find(ring.unit_support().begin(), ring.unit_support().end(), d) !=
                               ring.unit_support().end();
  if (!in_unit)
    throw std::invalid_argument("hcell_restrict: label not in the unit support: " + duflo_label);
  std::vector<int> keep;
  for (int i = 0; i < ring.rank(); ++i)
    if (ring.coeff(d, i, i) == 1 && ring.coeff(i, d, i) == 1) keep.push_back(i);
  std::map<int, int> re;
  std::vector<std::string> basis;
  for (size_t i = 0; i < keep.size(); ++i) {
    re[keep[i]] = static_cast<int>(i);
    basis.push_back(ring.basis()[keep[i]]);
  }
  BasedRing::Sparse table;
  for (int i : keep)
    for (int j : keep) {
      std::map<int, long long> terms;
      for (const auto& [k, c] : ring.product(i, j)) {
        auto it = re.find(k);
        if (it == re.end())
          throw std::logic_error("hcell_restrict: product leaves the component");
        terms[it->second] = c;
      }
      if (!terms.empty()) table[{re[i], re[j]}] = std::move(terms);
    }
  std::vector<int> involution(keep.size());
  for (int i : keep) {
    auto it = re.find(ring.involution()[i]);
    if (it == re.end()) throw std::logic_error("hcell_restrict: involution leaves the component");
    involution[re[i]] = it->second;
  }
  return BasedRing(std::move(basis), std::move(table), {re[d]}, std::move(involution));
}

BasedRing tensor_product(const BasedRing& r1, const BasedRing& r2) {
  const int n1 = r1.rank(), n2 = r2.rank();
  auto id = [n2](int i, int j) { return i * n2 + j; };
  std::vector<std::string> basis;
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) basis.push_back("(" + r1.basis()[i] + "," + r2.basis()[j] + ")");
  BasedRing::Sparse table;
  for (int i = 0; i < n1; ++i)
    for (int p = 0; p < n2; ++p)
      for (int j = 0; j < n1; ++j)
        for (int q = 0; q < n2; ++q) {
          std::map<int, long long> terms;
          for (const auto& [k, c] : r1.product(i, j))
            for (const auto& [l, d] : r2.product(p, q)) terms[id(k, l)] = c * d;
          if (!terms.empty()) table[{id(i, p), id(j, q)}] = std::move(terms);
        }
  std::vector<int> unit;
  for (int u : r1.unit_support())
    for (int v : r2.unit_support()) unit.push_back(id(u, v));
  std::sort(unit.begin(), unit.end());
  std::vector<int> involution(n1 * n2);
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j)
      involution[id(i, j)] = id(r1.involution()[i], r2.involution()[j]);
  return BasedRing(std::move(basis), std::move(table), std::move(unit), std::move(involution));
}

namespace {

std::string element_signature(const BasedRing& r, int i) {
  bool in_unit = std::find(r.unit_support().begin(), r.unit_support().end(), i) !=
                 r.unit_support().end();
  std::ostringstream os;
  os << in_unit << "|" << (r.involution()[i] == i) << "|";
  std::vector<std::string> rows, cols;
  for (int j = 0; j < r.rank(); ++j) {
    std::vector<long long> rv, cv;
    for (const auto& [k, c] : r.product(i, j)) rv.push_back(c);
    for (const auto& [k, c] : r.product(j, i)) cv.push_back(c);
    std::sort(rv.begin(), rv.end());
    std::sort(cv.begin(), cv.end());
    std::ostringstream t;
    for (long long v : rv) t << v << ",";
    rows.push_back(t.str());
    std::ostringstream u;
    for (long long v : cv) u << v << ",";
    cols.push_back(u.str());
  }
  std::sort(rows.begin(), rows.end());
  std::sort(cols.begin(), cols.end());
  for (const auto& s : rows) os << s << ";";
  os << "|";
  for (const auto& s : cols) os << s << ";";
  os << "|" << r.coeff(i, i, i);
  return os.str();
}

bool iso_consistent(const BasedRing& r1, const BasedRing& r2, const std::vector<int>& map,
                    const std::vector<int>& assigned) {
  for (int p : assigned)
    for (int q : assigned) {
      // full product rows must agree on assigned targets
      for (int k : assigned)
        if (r1.coeff(p, q, k) != r2.coeff(map[p], map[q], map[k])) return false;
      // totals must match so unassigned mass can still be distributed
      long long t1 = 0, t2 = 0;
      for (const auto& [k, c] : r1.product(p, q)) t1 += c;
      for (const auto& [k, c] : r2.product(map[p], map[q])) t2 += c;
      if (t1 != t2) return false;
    }
  return true;
}

bool iso_search(const BasedRing& r1, const BasedRing& r2,
                const std::vector<std::vector<int>>& cand, std::vector<int>& map,
                std::vector<bool>& used, std::vector<int>& assigned, size_t i) {
  if (i == cand.size()) return true;
  for (int j : cand[i]) {
    if (used[j]) continue;
    int inv_i = r1.involution()[static_cast<int>(i)];
    if (static_cast<size_t>(inv_i) < i && map[inv_i] != r2.involution()[j]) continue;
    map[i] = j;
    used[j] = true;
    assigned.push_back(static_cast<int>(i));
    if (iso_consistent(r1, r2, map, assigned) &&
        iso_search(r1, r2, cand, map, used, assigned, i + 1))
      return true;
    assigned.pop_back();
    used[j] = false;
    map[i] = -1;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> is_isomorphic(const BasedRing& r1, const BasedRing& r2) {
  if (r1.rank() != r2.rank() || r1.unit_support().size() != r2.unit_support().size())
    return std::nullopt;
  std::vector<std::vector<int>> cand(r1.rank());
  std::vector<std::string> sig2(r2.rank());
  for (int j = 0; j < r2.rank(); ++j) sig2[j] = element_signature(r2, j);
  for (int i = 0; i < r1.rank(); ++i) {
    std::string s = element_signature(r1, i);
    for (int j = 0; j < r2.rank(); ++j)
      if (s == sig2[j]) cand[i].push_back(j);
    if (cand[i].empty()) return std::nullopt;
  }
  std::vector<int> map(r1.rank(), -1), assigned;
  std::vector<bool> used(r2.rank(), false);
  if (!iso_search(r1, r2, cand, map, used, assigned, 0)) return std::nullopt;
  return map;
}

namespace {

bool cg_admissible(int k, int a, int b, int c) {
  if ((a + b + c) % 2 != 0) return false;
  if (c < std::abs(a - b) || c > a + b) return false;
  return a + b + c <= 2 * k - 2;
}

}  // namespace

BasedRing verlinde_grothendieck(int k) {
  if (k < 1) throw std::invalid_argument("verlinde_grothendieck: k must be at least 1");
  std::vector<std::string> basis;
  for (int i = 0; i < k; ++i) basis.push_back("X" + std::to_string(i));
  BasedRing::Sparse table;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      std::map<int, long long> terms;
      for (int c = 0; c < k; ++c)
        if (cg_admissible(k, a, b, c)) terms[c] = 1;
      if (!terms.empty()) table[{a, b}] = std::move(terms);
    }
  std::vector<int> involution(k);
  for (int i = 0; i < k; ++i) involution[i] = i;
  return BasedRing(std::move(basis), std::move(table), {0}, std::move(involution));
}

BasedRing adjoint_grothendieck(int k) {
  if (k < 1) throw std::invalid_argument("adjoint_grothendieck: k must be at least 1");
  std::vector<int> labels;
  for (int i = 0; i < k; i += 2) labels.push_back(i);
  std::vector<std::string> basis;
  for (int i : labels) basis.push_back("X" + std::to_string(i));
  const int m = static_cast<int>(labels.size());
  BasedRing::Sparse table;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      std::map<int, long long> terms;
      for (int c = 0; c < m; ++c)
        if (cg_admissible(k, labels[a], labels[b], labels[c])) terms[c] = 1;
      if (!terms.empty()) table[{a, b}] = std::move(terms);
    }
  std::vector<int> involution(m);
  for (int i = 0; i < m; ++i) involution[i] = i;
  return BasedRing(std::move(basis), std::move(table), {0}, std::move(involution));
}

}  // namespace cellmod
