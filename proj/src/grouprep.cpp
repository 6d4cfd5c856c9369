#include "cellmod/grouprep.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "chartables_gen.inc"

namespace cellmod {

namespace {

Perm compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

Perm inverse_perm(const Perm& a) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<int>(i);
  return r;
}

Perm identity_perm(int degree) {
  Perm p(degree);
  for (int i = 0; i < degree; ++i) p[i] = i;
  return p;
}

int perm_order(const Perm& p) {
  Perm cur = p;
  Perm id = identity_perm(static_cast<int>(p.size()));
  int o = 1;
  while (cur != id) {
    cur = compose(cur, p);
    ++o;
    if (o > 1000000) throw std::logic_error("perm_order: runaway");
  }
  return o;
}

}  // namespace

FiniteGroup FiniteGroup::generated(int degree, const std::vector<Perm>& gens) {
  if (degree < 1) throw std::invalid_argument("FiniteGroup: degree must be positive");
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != degree)
      throw std::invalid_argument("FiniteGroup: generator degree mismatch");
    std::vector<bool> seen(degree, false);
    for (int v : g) {
      if (v < 0 || v >= degree || seen[v])
        throw std::invalid_argument("FiniteGroup: generator is not a permutation");
      seen[v] = true;
    }
  }
  std::set<Perm> closure{identity_perm(degree)};
  std::vector<Perm> frontier{identity_perm(degree)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& e : frontier)
      for (const auto& g : gens) {
        Perm p = compose(e, g);
        if (closure.insert(p).second) next.push_back(std::move(p));
        if (closure.size() > 20000) throw std::invalid_argument("FiniteGroup: order guard exceeded");
      }
    frontier = std::move(next);
  }
  FiniteGroup out;
  out.degree_ = degree;
  out.elements_.assign(closure.begin(), closure.end());
  return out;
}

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1) throw std::invalid_argument("symmetric: n must be positive");
  if (n == 1) return generated(1, {});
  std::vector<Perm> gens;
  Perm t = identity_perm(n);
  std::swap(t[0], t[1]);
  gens.push_back(t);
  if (n > 2) {
    Perm c(n);
    for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
    gens.push_back(c);
  }
  return generated(n, gens);
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic: n must be positive");
  if (n == 1) return generated(1, {});
  Perm c(n);
  for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
  return generated(n, {c});
}

FiniteGroup FiniteGroup::elementary_two(int k) {
  if (k < 1) throw std::invalid_argument("elementary_two: k must be positive");
  std::vector<Perm> gens;
  for (int i = 0; i < k; ++i) {
    Perm p = identity_perm(2 * k);
    std::swap(p[2 * i], p[2 * i + 1]);
    gens.push_back(p);
  }
  return generated(2 * k, gens);
}

FiniteGroup FiniteGroup::dihedral8() {
  Perm r{1, 2, 3, 0};
  Perm s{0, 3, 2, 1};  // reflection fixing 0 and 2
  return generated(4, {r, s});
}

FiniteGroup FiniteGroup::product(const FiniteGroup& a, const FiniteGroup& b) {
  int degree = a.degree() + b.degree();
  std::vector<Perm> gens;
  auto lift_a = [&](const Perm& p) {
    Perm q = identity_perm(degree);
    for (int i = 0; i < a.degree(); ++i) q[i] = p[i];
    return q;
  };
  auto lift_b = [&](const Perm& p) {
    Perm q = identity_perm(degree);
    for (int i = 0; i < b.degree(); ++i) q[a.degree() + i] = a.degree() + p[i];
    return q;
  };
  for (const auto& e : a.elements()) gens.push_back(lift_a(e));
  for (const auto& e : b.elements()) gens.push_back(lift_b(e));
  return generated(degree, gens);
}

FiniteGroup FiniteGroup::from_token(const std::string& token) {
  if (token == "S1" || token == "Z1") return symmetric(1);
  if (token == "S2" || token == "Z2") return cyclic(2);
  if (token == "S3") return symmetric(3);
  if (token == "S4") return symmetric(4);
  if (token == "S5") return symmetric(5);
  if (token == "D4") return dihedral8();
  if (token == "S2xS2" || token == "Z2^2") return elementary_two(2);
  if (token == "Z2^3") return elementary_two(3);
  if (token == "Z2^4") return elementary_two(4);
  if (token == "S2xS3") return product(symmetric(2), symmetric(3));
  if (token.size() >= 2 && token[0] == 'Z') {
    int n = std::stoi(token.substr(1));
    if (n >= 1 && n <= 8) return cyclic(n);
  }
  throw std::domain_error("unsupported group token: " + token);
}

int FiniteGroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return -1;
  return static_cast<int>(it - elements_.begin());
}

int FiniteGroup::mult(int a, int b) const {
  int r = index_of(compose(elements_[a], elements_[b]));
  if (r < 0) throw std::logic_error("FiniteGroup: closure violated");
  return r;
}

int FiniteGroup::inverse(int a) const {
  int r = index_of(inverse_perm(elements_[a]));
  if (r < 0) throw std::logic_error("FiniteGroup: inverse missing");
  return r;
}

bool FiniteGroup::is_abelian() const {
  for (size_t a = 0; a < elements_.size(); ++a)
    for (size_t b = a + 1; b < elements_.size(); ++b)
      if (compose(elements_[a], elements_[b]) != compose(elements_[b], elements_[a])) return false;
  return true;
}

std::vector<ConjClass> conjugacy_classes(const FiniteGroup& g) {
  if (g.order() > 10000) throw std::invalid_argument("conjugacy_classes: size guard exceeded");
  const int n = static_cast<int>(g.order());
  std::vector<int> cls(n, -1);
  std::vector<ConjClass> out;
  for (int x = 0; x < n; ++x) {
    if (cls[x] >= 0) continue;
    ConjClass c;
    std::vector<int> orbit{x};
    cls[x] = 1;
    for (size_t i = 0; i < orbit.size(); ++i)
      for (int t = 0; t < n; ++t) {
        int y = g.mult(g.mult(t, orbit[i]), g.inverse(t));
        if (cls[y] < 0) {
          cls[y] = 1;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    c.members = orbit;
    c.rep = orbit[0];
    c.element_order = perm_order(g.element(orbit[0]));
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [&](const ConjClass& a, const ConjClass& b) {
    if (a.element_order != b.element_order) return a.element_order < b.element_order;
    if (a.size() != b.size()) return a.size() < b.size();
    return g.element(a.rep) < g.element(b.rep);
  });
  return out;
}

FiniteGroup centralizer(const FiniteGroup& g, int element_index) {
  std::vector<Perm> members;
  const Perm& x = g.element(element_index);
  for (const auto& e : g.elements())
    if (compose(e, x) == compose(x, e)) members.push_back(e);
  FiniteGroup out = FiniteGroup::generated(g.degree(), members);
  if (out.order() != members.size()) throw std::logic_error("centralizer: closure mismatch");
  return out;
}

size_t CharacterTable::degree(size_t irrep) const {
  // the identity class is first in canonical order
  return static_cast<size_t>(values[irrep][0].rational_value().convert_to<long long>());
}

// ---------------------------------------------------------------------------
// bundled character tables

namespace {

using nlohmann::json;

// parses sums of terms like "1", "-2", "1/2", "z5", "-z8^3", "2*z7^4"
Cyclotomic parse_cyclo_expr(const std::string& expr) {
  Cyclotomic total;
  size_t i = 0;
  const size_t n = expr.size();
  auto skip_ws = [&] {
    while (i < n && expr[i] == ' ') ++i;
  };
  skip_ws();
  while (i < n) {
    long long sign = 1;
    if (expr[i] == '+' || expr[i] == '-') {
      if (expr[i] == '-') sign = -1;
      ++i;
      skip_ws();
    }
    long long num = 1, den = 1;
    bool saw_number = false;
    if (i < n && std::isdigit(static_cast<unsigned char>(expr[i]))) {
      saw_number = true;
      num = 0;
      while (i < n && std::isdigit(static_cast<unsigned char>(expr[i])))
        num = num * 10 + (expr[i++] - '0');
      if (i < n && expr[i] == '/') {
        ++i;
        den = 0;
        while (i < n && std::isdigit(static_cast<unsigned char>(expr[i])))
          den = den * 10 + (expr[i++] - '0');
      }
      if (i < n && expr[i] == '*') ++i;
    }
    Cyclotomic term = Cyclotomic::from_rational(Rational(sign * num, den));
    if (i < n && expr[i] == 'z') {
      ++i;
      unsigned order = 0;
      while (i < n && std::isdigit(static_cast<unsigned char>(expr[i])))
        order = order * 10 + static_cast<unsigned>(expr[i++] - '0');
      long long exp = 1;
      if (i < n && expr[i] == '^') {
        ++i;
        exp = 0;
        while (i < n && std::isdigit(static_cast<unsigned char>(expr[i])))
          exp = exp * 10 + (expr[i++] - '0');
      }
      term *= Cyclotomic::root_of_unity(order, exp);
    } else if (!saw_number) {
      throw std::invalid_argument("bad cyclotomic expression: " + expr);
    }
    total += term;
    skip_ws();
  }
  return total;
}

struct CatalogTable {
  std::string group;
  size_t order = 0;
  std::string structure;  // "generic", "cyclic", "elem2"
  struct ClassInfo {
    std::string label;
    int element_order = 1;
    size_t size = 1;
    int power = -1;       // cyclic structure
    std::string bits;     // elem2 structure
  };
  std::vector<ClassInfo> classes;
  std::vector<std::string> irrep_names;
  std::vector<std::vector<Cyclotomic>> values;  // rows x file classes
  std::vector<int> irrep_power;                 // cyclic: dual exponent
  std::vector<std::string> irrep_bits;          // elem2: dual vector
};

const std::vector<CatalogTable>& catalog() {
  static const std::vector<CatalogTable> tables = [] {
    std::vector<CatalogTable> out;
    for (const auto& entry : kCharTableData) {
      json j = json::parse(entry.json);
      CatalogTable t;
      t.group = j.at("group").get<std::string>();
      t.order = j.at("order").get<size_t>();
      t.structure = j.value("structure", "generic");
      for (const auto& c : j.at("classes")) {
        CatalogTable::ClassInfo ci;
        ci.label = c.at("label").get<std::string>();
        ci.element_order = c.at("order").get<int>();
        ci.size = c.at("size").get<size_t>();
        if (c.contains("power")) ci.power = c.at("power").get<int>();
        if (c.contains("bits")) ci.bits = c.at("bits").get<std::string>();
        t.classes.push_back(std::move(ci));
      }
      for (const auto& r : j.at("irreps")) {
        t.irrep_names.push_back(r.at("name").get<std::string>());
        std::vector<Cyclotomic> row;
        for (const auto& v : r.at("values")) row.push_back(parse_cyclo_expr(v.get<std::string>()));
        t.values.push_back(std::move(row));
        t.irrep_power.push_back(r.contains("power") ? r.at("power").get<int>() : -1);
        t.irrep_bits.push_back(r.contains("bits") ? r.at("bits").get<std::string>() : "");
      }
      out.push_back(std::move(t));
    }
    return out;
  }();
  return tables;
}

std::multiset<std::pair<int, size_t>> signature(const std::vector<ConjClass>& classes) {
  std::multiset<std::pair<int, size_t>> s;
  for (const auto& c : classes) s.insert({c.element_order, c.size()});
  return s;
}

std::multiset<std::pair<int, size_t>> signature(const CatalogTable& t) {
  std::multiset<std::pair<int, size_t>> s;
  for (const auto& c : t.classes) s.insert({c.element_order, c.size});
  return s;
}

// exact validation of an assignment: assign[file class] = computed class
bool validate_assignment(const FiniteGroup& g, const std::vector<ConjClass>& classes,
                         const CatalogTable& t, const std::vector<int>& assign,
                         std::string* why) {
  const size_t nc = classes.size(), ni = t.values.size();
  std::vector<int> inv_assign(nc);
  for (size_t f = 0; f < nc; ++f) inv_assign[assign[f]] = static_cast<int>(f);
  auto chi = [&](size_t irrep, size_t computed_class) -> const Cyclotomic& {
    return t.values[irrep][inv_assign[computed_class]];
  };
  size_t id_class = 0;  // canonical order puts the identity first
  // degrees and degree-sum
  Integer degsum = 0;
  for (size_t r = 0; r < ni; ++r) {
    const Cyclotomic& d = chi(r, id_class);
    if (!d.is_rational() || boost::multiprecision::denominator(d.rational_value()) != 1 ||
        d.rational_value() <= 0) {
      if (why) *why = "irrational or nonpositive degree";
      return false;
    }
    Integer deg = boost::multiprecision::numerator(d.rational_value());
    degsum += deg * deg;
  }
  if (degsum != Integer(g.order())) {
    if (why) *why = "degree squares do not sum to the group order";
    return false;
  }
  // row orthogonality
  for (size_t r = 0; r < ni; ++r)
    for (size_t s = r; s < ni; ++s) {
      Cyclotomic acc;
      for (size_t c = 0; c < nc; ++c)
        acc += Cyclotomic::from_integer(Integer(classes[c].size())) * chi(r, c) * chi(s, c).conj();
      Cyclotomic expect = r == s ? Cyclotomic::from_integer(Integer(g.order())) : Cyclotomic();
      if (acc != expect) {
        if (why) *why = "row orthogonality fails";
        return false;
      }
    }
  // column orthogonality against centralizer orders
  for (size_t c1 = 0; c1 < nc; ++c1)
    for (size_t c2 = c1; c2 < nc; ++c2) {
      Cyclotomic acc;
      for (size_t r = 0; r < ni; ++r) acc += chi(r, c1) * chi(r, c2).conj();
      Cyclotomic expect = c1 == c2 ? Cyclotomic::from_integer(Integer(g.order() / classes[c1].size()))
                                   : Cyclotomic();
      if (acc != expect) {
        if (why) *why = "column orthogonality fails";
        return false;
      }
    }
  // central characters against the class algebra: with w_i = |C_i| chi(C_i)/chi(1),
  // w_i w_j = sum_k a_{ij}^k w_k where a counts products landing on a fixed rep
  std::vector<int> element_class(g.order());
  for (size_t c = 0; c < nc; ++c)
    for (int e : classes[c].members) element_class[e] = static_cast<int>(c);
  for (size_t i = 0; i < nc; ++i)
    for (size_t j = i; j < nc; ++j) {
      std::vector<long long> a(nc, 0);
      for (int x : classes[i].members)
        for (int y : classes[j].members) ++a[element_class[g.mult(x, y)]];
      // the count is constant on the target class; per-representative value
      for (size_t k = 0; k < nc; ++k) a[k] /= static_cast<long long>(classes[k].size());
      for (size_t r = 0; r < ni; ++r) {
        Cyclotomic dinv = chi(r, id_class).inverse();
        auto omega = [&](size_t c) {
          return Cyclotomic::from_integer(Integer(classes[c].size())) * chi(r, c) * dinv;
        };
        Cyclotomic lhs = omega(i) * omega(j);
        Cyclotomic rhs;
        for (size_t k = 0; k < nc; ++k)
          if (a[k] != 0) rhs += Cyclotomic::from_integer(Integer(a[k])) * omega(k);
        if (lhs != rhs) {
          if (why) *why = "central character identity fails";
          return false;
        }
      }
    }
  return true;
}

// structural matching for cyclic groups: map file class "power p" to the
// class of gen^p for a canonical generator
std::vector<int> match_cyclic(const FiniteGroup& g, const std::vector<ConjClass>& classes,
                              const CatalogTable& t) {
  const int n = static_cast<int>(g.order());
  int gen = -1;
  for (int e = 0; e < n; ++e)
    if (perm_order(g.element(e)) == n) {
      gen = e;
      break;  // elements are sorted, the first hit is lex-minimal
    }
  if (gen < 0) throw std::logic_error("match_cyclic: no generator found");
  std::vector<int> element_class(g.order());
  for (size_t c = 0; c < classes.size(); ++c)
    for (int e : classes[c].members) element_class[e] = static_cast<int>(c);
  std::vector<int> assign(t.classes.size(), -1);
  int cur = g.identity();
  std::vector<int> power_class(n);
  for (int p = 0; p < n; ++p) {
    power_class[p] = element_class[cur];
    cur = g.mult(cur, gen);
  }
  for (size_t f = 0; f < t.classes.size(); ++f) {
    if (t.classes[f].power < 0) throw std::logic_error("cyclic table lacks power labels");
    assign[f] = power_class[t.classes[f].power % n];
  }
  return assign;
}

// structural matching for elementary abelian 2-groups via a greedy F2 basis
std::vector<int> match_elem2(const FiniteGroup& g, const std::vector<ConjClass>& classes,
                             const CatalogTable& t) {
  const size_t n = g.order();
  size_t k = 0;
  while ((size_t(1) << k) < n) ++k;
  std::vector<int> basis;
  std::set<int> span{g.identity()};
  for (int e = 0; e < static_cast<int>(n) && basis.size() < k; ++e) {
    if (span.count(e)) continue;
    basis.push_back(e);
    std::set<int> next = span;
    for (int s : span) next.insert(g.mult(s, e));
    span = std::move(next);
  }
  if (basis.size() != k) throw std::logic_error("match_elem2: basis construction failed");
  std::vector<int> element_class(n);
  for (size_t c = 0; c < classes.size(); ++c)
    for (int e : classes[c].members) element_class[e] = static_cast<int>(c);
  std::vector<int> assign(t.classes.size(), -1);
  for (size_t f = 0; f < t.classes.size(); ++f) {
    const std::string& bits = t.classes[f].bits;
    if (bits.size() != k) throw std::logic_error("elem2 table lacks bit labels");
    int cur = g.identity();
    for (size_t i = 0; i < k; ++i)
      if (bits[i] == '1') cur = g.mult(cur, basis[i]);
    assign[f] = element_class[cur];
  }
  return assign;
}

bool match_generic(const FiniteGroup& g, const std::vector<ConjClass>& classes,
                   const CatalogTable& t, std::vector<int>& assign, std::vector<bool>& used,
                   size_t f) {
  if (f == t.classes.size()) {
    std::string why;
    return validate_assignment(g, classes, t, assign, &why);
  }
  for (size_t c = 0; c < classes.size(); ++c) {
    if (used[c]) continue;
    if (classes[c].element_order != t.classes[f].element_order ||
        classes[c].size() != t.classes[f].size)
      continue;
    assign[f] = static_cast<int>(c);
    used[c] = true;
    if (match_generic(g, classes, t, assign, used, f + 1)) return true;
    used[c] = false;
    assign[f] = -1;
  }
  return false;
}

}  // namespace

CharacterTable character_table(const FiniteGroup& g) {
  auto classes = conjugacy_classes(g);
  auto sig = signature(classes);
  const CatalogTable* match = nullptr;
  for (const auto& t : catalog()) {
    if (t.order != g.order() || signature(t) != sig) continue;
    if (match != nullptr)
      throw std::logic_error("character_table: ambiguous catalog signature for order " +
                             std::to_string(g.order()));
    match = &t;
  }
  if (match == nullptr)
    throw std::domain_error("character_table: group outside the bundled catalog (order " +
                            std::to_string(g.order()) + ")");
  std::vector<int> assign;
  if (match->structure == "cyclic")
    assign = match_cyclic(g, classes, *match);
  else if (match->structure == "elem2")
    assign = match_elem2(g, classes, *match);
  else {
    assign.assign(match->classes.size(), -1);
    std::vector<bool> used(classes.size(), false);
    if (!match_generic(g, classes, *match, assign, used, 0))
      throw std::logic_error("character_table: no valid class matching for " + match->group);
  }
  std::string why;
  if (!validate_assignment(g, classes, *match, assign, &why))
    throw std::logic_error("character_table: bundled data contradicts computed classes (" +
                           match->group + ": " + why + ")");
  CharacterTable out;
  out.classes = classes;
  out.class_labels.resize(classes.size());
  std::vector<int> inv_assign(classes.size());
  for (size_t f = 0; f < assign.size(); ++f) {
    inv_assign[assign[f]] = static_cast<int>(f);
    out.class_labels[assign[f]] = match->classes[f].label;
  }
  out.irrep_names = match->irrep_names;
  out.values.assign(match->values.size(), std::vector<Cyclotomic>(classes.size()));
  for (size_t r = 0; r < match->values.size(); ++r)
    for (size_t c = 0; c < classes.size(); ++c) out.values[r][c] = match->values[r][inv_assign[c]];
  out.element_class.assign(g.order(), -1);
  for (size_t c = 0; c < classes.size(); ++c)
    for (int e : classes[c].members) out.element_class[e] = static_cast<int>(c);
  return out;
}

MSet m_set(const FiniteGroup& g) {
  MSet ms;
  ms.group = g;
  ms.classes = conjugacy_classes(g);
  CharacterTable table = character_table(g);
  for (size_t c = 0; c < ms.classes.size(); ++c) {
    FiniteGroup cent = centralizer(g, ms.classes[c].rep);
    CharacterTable ct = character_table(cent);
    for (size_t r = 0; r < ct.values.size(); ++r) {
      MGPair p;
      p.class_index = static_cast<int>(c);
      p.irrep_index = static_cast<int>(r);
      p.label = "(" + table.class_labels[c] + "," + ct.irrep_names[r] + ")";
      ms.entries.push_back(std::move(p));
    }
    ms.centralizers.push_back(std::move(cent));
    ms.cent_tables.push_back(std::move(ct));
  }
  return ms;
}

namespace {

// For classes (cx, cy) of reps x, y: counts over admissible g of the pair of
// centralizer classes of (g y g^{-1} in C(x), g^{-1} x g in C(y)) as well as
// the variant with x^{-1} used by the pairing.
struct ClassPairSums {
  std::vector<std::vector<long long>> smatrix_counts;  // [class in C(x)][class in C(y)]
  std::vector<std::vector<long long>> pairing_counts;
};

ClassPairSums class_pair_sums(const MSet& ms, int cx, int cy) {
  const FiniteGroup& g = ms.group;
  const FiniteGroup& centx = ms.centralizers[cx];
  const FiniteGroup& centy = ms.centralizers[cy];
  const CharacterTable& tx = ms.cent_tables[cx];
  const CharacterTable& ty = ms.cent_tables[cy];
  int x = ms.classes[cx].rep, y = ms.classes[cy].rep;
  int xinv = g.inverse(x);
  ClassPairSums out;
  out.smatrix_counts.assign(tx.classes.size(), std::vector<long long>(ty.classes.size(), 0));
  out.pairing_counts = out.smatrix_counts;
  for (size_t t = 0; t < g.order(); ++t) {
    int ti = static_cast<int>(t);
    int conj_y = g.mult(g.mult(ti, y), g.inverse(ti));
    // g y g^{-1} must commute with x
    if (g.mult(x, conj_y) != g.mult(conj_y, x)) continue;
    int conj_x = g.mult(g.mult(g.inverse(ti), x), ti);
    int conj_xinv = g.mult(g.mult(g.inverse(ti), xinv), ti);
    int c1 = tx.element_class[centx.index_of(g.element(conj_y))];
    int c2 = ty.element_class[centy.index_of(g.element(conj_x))];
    int c2inv = ty.element_class[centy.index_of(g.element(conj_xinv))];
    ++out.smatrix_counts[c1][c2];
    ++out.pairing_counts[c1][c2inv];
  }
  return out;
}

Cyclotomic weighted_sum(const std::vector<std::vector<long long>>& counts,
                        const std::vector<Cyclotomic>& sigma_row,
                        const std::vector<Cyclotomic>& tau_row) {
  Cyclotomic acc;
  for (size_t i = 0; i < counts.size(); ++i)
    for (size_t j = 0; j < counts[i].size(); ++j) {
      if (counts[i][j] == 0) continue;
      acc += Cyclotomic::from_integer(Integer(counts[i][j])) * sigma_row[i] * tau_row[j];
    }
  return acc;
}

CenterData twisted_z2_center() {
  CenterData cd;
  cd.kind = "group_twisted";
  cd.simples = {{"(e,1)", {0, 0}, {"(e,1)"}, 0},
                {"(e,-1)", {0, 1}, {"(e,-1)"}, 0},
                {"(x,i)", {1, 0}, {"(x,i)"}, 0},
                {"(x,-i)", {1, 1}, {"(x,-i)"}, 0}};
  cd.smatrix = int_matrix({{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, -1, 1}, {1, -1, 1, -1}});
  cd.global_dim = Cyclotomic::from_integer(4);
  cd.dim_sqrt = Cyclotomic::from_integer(2);
  return cd;
}

}  // namespace

Cyclotomic lusztig_pairing(const MSet& ms, size_t p1, size_t p2) {
  const MGPair& a = ms.entries.at(p1);
  const MGPair& b = ms.entries.at(p2);
  ClassPairSums sums = class_pair_sums(ms, a.class_index, b.class_index);
  Cyclotomic acc = weighted_sum(sums.pairing_counts,
                                ms.cent_tables[a.class_index].values[a.irrep_index],
                                ms.cent_tables[b.class_index].values[b.irrep_index]);
  size_t cx_order = ms.centralizers[a.class_index].order();
  size_t cy_order = ms.centralizers[b.class_index].order();
  return acc / Cyclotomic::from_integer(Integer(cx_order) * Integer(cy_order));
}

CycMatrix lusztig_pairing_matrix(const MSet& ms) {
  const size_t n = ms.entries.size();
  CycMatrix m(n, std::vector<Cyclotomic>(n));
  for (size_t cx = 0; cx < ms.classes.size(); ++cx)
    for (size_t cy = 0; cy < ms.classes.size(); ++cy) {
      ClassPairSums sums = class_pair_sums(ms, static_cast<int>(cx), static_cast<int>(cy));
      Cyclotomic denom = Cyclotomic::from_integer(
          Integer(ms.centralizers[cx].order()) * Integer(ms.centralizers[cy].order()));
      Cyclotomic dinv = denom.inverse();
      for (size_t i = 0; i < n; ++i) {
        if (ms.entries[i].class_index != static_cast<int>(cx)) continue;
        for (size_t j = 0; j < n; ++j) {
          if (ms.entries[j].class_index != static_cast<int>(cy)) continue;
          m[i][j] = weighted_sum(sums.pairing_counts,
                                 ms.cent_tables[cx].values[ms.entries[i].irrep_index],
                                 ms.cent_tables[cy].values[ms.entries[j].irrep_index]) *
                    dinv;
        }
      }
    }
  return m;
}

std::vector<size_t> conjugation_involution(const MSet& ms) {
  std::vector<size_t> out(ms.entries.size());
  for (size_t i = 0; i < ms.entries.size(); ++i) {
    int c = ms.entries[i].class_index;
    const CharacterTable& t = ms.cent_tables[c];
    const auto& row = t.values[ms.entries[i].irrep_index];
    int target = -1;
    for (size_t r = 0; r < t.values.size() && target < 0; ++r) {
      bool all = true;
      for (size_t col = 0; col < row.size() && all; ++col)
        all = t.values[r][col] == row[col].conj();
      if (all) target = static_cast<int>(r);
    }
    if (target < 0) throw std::logic_error("conjugation_involution: conjugate row missing");
    for (size_t j = 0; j < ms.entries.size(); ++j)
      if (ms.entries[j].class_index == c && ms.entries[j].irrep_index == target) out[i] = j;
  }
  return out;
}

CenterData center_vec_smatrix(const FiniteGroup& g, GroupTwist twist) {
  if (twist == GroupTwist::kNontrivialZ2) {
    if (g.order() != 2)
      throw std::domain_error("center_vec_smatrix: nontrivial twist only supported for Z/2");
    return twisted_z2_center();
  }
  MSet ms = m_set(g);
  const size_t n = ms.entries.size();
  CenterData cd;
  cd.kind = "group";
  for (const auto& e : ms.entries) {
    CenterSimple s;
    s.label = e.label;
    s.grid = {e.class_index, e.irrep_index};
    s.underlying = {e.label};
    cd.simples.push_back(std::move(s));
  }
  cd.smatrix.assign(n, std::vector<Cyclotomic>(n));
  Cyclotomic order = Cyclotomic::from_integer(Integer(g.order()));
  for (size_t cx = 0; cx < ms.classes.size(); ++cx)
    for (size_t cy = 0; cy < ms.classes.size(); ++cy) {
      ClassPairSums sums = class_pair_sums(ms, static_cast<int>(cx), static_cast<int>(cy));
      Cyclotomic scale =
          order / Cyclotomic::from_integer(Integer(ms.centralizers[cx].order()) *
                                           Integer(ms.centralizers[cy].order()));
      for (size_t i = 0; i < n; ++i) {
        if (ms.entries[i].class_index != static_cast<int>(cx)) continue;
        for (size_t j = 0; j < n; ++j) {
          if (ms.entries[j].class_index != static_cast<int>(cy)) continue;
          cd.smatrix[i][j] = weighted_sum(sums.smatrix_counts,
                                          ms.cent_tables[cx].values[ms.entries[i].irrep_index],
                                          ms.cent_tables[cy].values[ms.entries[j].irrep_index]) *
                             scale;
        }
      }
    }
  cd.dim_sqrt = order;
  cd.global_dim = order * order;
  Cyclotomic sum;
  for (const auto& v : cd.smatrix[0]) sum += v * v;
  if (sum != cd.global_dim)
    throw std::logic_error("center_vec_smatrix: unit row inconsistent with |G|^2");
  return cd;
}

}  // namespace cellmod
