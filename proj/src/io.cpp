#include "cellmod/io.hpp"

#include <iomanip>
#include <sstream>

namespace cellmod::io {

namespace {

std::string rational_string(const Integer& num, const Integer& den) {
  Rational r(num, den);
  std::ostringstream os;
  os << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1)
    os << "/" << boost::multiprecision::denominator(r);
  return os.str();
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(Integer(s));
  return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
}

}  // namespace

Json to_json(const Cyclotomic& c) {
  Json j;
  j["conductor"] = c.conductor();
  Json coeffs = Json::array();
  for (const auto& n : c.numerators()) coeffs.push_back(rational_string(n, c.denominator()));
  j["coeffs"] = coeffs;
  return j;
}

Cyclotomic cyclotomic_from_json(const Json& j) {
  unsigned n = j.at("conductor").get<unsigned>();
  Cyclotomic acc;
  size_t i = 0;
  for (const auto& s : j.at("coeffs")) {
    Rational r = parse_rational(s.get<std::string>());
    if (r != 0)
      acc += Cyclotomic::from_rational(r) * Cyclotomic::root_of_unity(n, static_cast<long long>(i));
    ++i;
  }
  // pin the conductor even when the value lies in a subfield
  return acc + Cyclotomic::root_of_unity(n, 0) - Cyclotomic::one();
}

Json matrix_to_json(const CycMatrix& m, const std::vector<std::string>& labels) {
  Json j;
  j["rows"] = m.size();
  j["cols"] = m.empty() ? 0 : m[0].size();
  if (!labels.empty()) j["labels"] = labels;
  Json rows = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(to_json(v));
    rows.push_back(std::move(r));
  }
  j["entries"] = rows;
  return j;
}

CycMatrix matrix_from_json(const Json& j, std::vector<std::string>* labels) {
  CycMatrix m;
  for (const auto& row : j.at("entries")) {
    std::vector<Cyclotomic> r;
    for (const auto& v : row) r.push_back(cyclotomic_from_json(v));
    m.push_back(std::move(r));
  }
  if (labels && j.contains("labels")) *labels = j.at("labels").get<std::vector<std::string>>();
  return m;
}

Json to_json(const BasedRing& r) {
  Json j;
  j["basis"] = r.basis();
  Json products = Json::array();
  for (int a = 0; a < r.rank(); ++a)
    for (int b = 0; b < r.rank(); ++b) {
      const auto& terms = r.product(a, b);
      if (terms.empty()) continue;
      Json p;
      p["left"] = a;
      p["right"] = b;
      Json t = Json::array();
      for (const auto& [k, c] : terms) t.push_back(Json{{"index", k}, {"coeff", c}});
      p["terms"] = std::move(t);
      products.push_back(std::move(p));
    }
  j["products"] = std::move(products);
  j["unit_support"] = r.unit_support();
  j["involution"] = r.involution();
  return j;
}

BasedRing ring_from_json(const Json& j) {
  std::vector<std::string> basis = j.at("basis").get<std::vector<std::string>>();
  BasedRing::Sparse table;
  for (const auto& p : j.at("products")) {
    std::map<int, long long> terms;
    for (const auto& t : p.at("terms"))
      terms[t.at("index").get<int>()] = t.at("coeff").get<long long>();
    table[{p.at("left").get<int>(), p.at("right").get<int>()}] = std::move(terms);
  }
  return BasedRing(basis, std::move(table), j.at("unit_support").get<std::vector<int>>(),
                   j.at("involution").get<std::vector<int>>());
}

Json to_json(const CoxeterSystem& sys, const CellDatum& cell) {
  Json j;
  j["a_value"] = cell.a_value;
  Json elements = Json::array();
  for (const auto& w : cell.elements)
    elements.push_back(w.empty() ? std::string("1") : word_label(sys, w));
  j["elements"] = std::move(elements);
  j["left_cells"] = cell.left_cells;
  j["right_cells"] = cell.right_cells;
  Json h = Json::array();
  for (const auto& [key, members] : cell.h_cells) {
    Json e;
    e["first"] = sys.labels[key.first];
    e["last"] = sys.labels[key.second];
    e["members"] = members;
    h.push_back(std::move(e));
  }
  j["h_cells"] = std::move(h);
  j["duflo"] = cell.duflo;
  return j;
}

CellDatum cell_from_json(const Json& j, std::vector<std::string>* labels) {
  CellDatum cell;
  cell.a_value = j.at("a_value").get<int>();
  std::vector<std::string> elem_labels = j.at("elements").get<std::vector<std::string>>();
  // rebuild generator indices from single-character generator labels when
  // possible; multi-character labels round-trip through the label list
  std::map<std::string, int> gen;
  for (const auto& s : elem_labels) {
    // "1" denotes the identity in the a-value-0 cell; elsewhere it can be a
    // generator label
    if (s == "1" && cell.a_value == 0) {
      cell.elements.push_back({});
      continue;
    }
    Word w;
    for (char ch : s) {
      std::string g(1, ch);
      auto it = gen.emplace(g, static_cast<int>(gen.size())).first;
      w.push_back(it->second);
    }
    cell.elements.push_back(std::move(w));
  }
  cell.left_cells = j.at("left_cells").get<std::vector<std::vector<int>>>();
  cell.right_cells = j.at("right_cells").get<std::vector<std::vector<int>>>();
  for (const auto& e : j.at("h_cells")) {
    auto first = gen.find(e.at("first").get<std::string>());
    auto last = gen.find(e.at("last").get<std::string>());
    if (first != gen.end() && last != gen.end())
      cell.h_cells[{first->second, last->second}] = e.at("members").get<std::vector<int>>();
  }
  cell.duflo = j.at("duflo").get<std::vector<int>>();
  if (labels) {
    labels->resize(gen.size());
    for (const auto& [s, i] : gen) (*labels)[i] = s;
  }
  return cell;
}

Json to_json(const CenterData& cd) {
  Json j;
  j["kind"] = cd.kind;
  Json simples = Json::array();
  for (const auto& s : cd.simples) {
    Json e;
    e["label"] = s.label;
    e["grid"] = s.grid;
    e["underlying"] = s.underlying;
    e["split"] = s.split;
    simples.push_back(std::move(e));
  }
  j["simples"] = std::move(simples);
  j["smatrix"] = matrix_to_json(cd.smatrix).at("entries");
  j["global_dim"] = to_json(cd.global_dim);
  j["dim_sqrt"] = to_json(cd.dim_sqrt);
  return j;
}

CenterData center_from_json(const Json& j) {
  CenterData cd;
  cd.kind = j.at("kind").get<std::string>();
  for (const auto& e : j.at("simples")) {
    CenterSimple s;
    s.label = e.at("label").get<std::string>();
    auto grid = e.at("grid").get<std::vector<int>>();
    s.grid = {grid[0], grid[1]};
    s.underlying = e.at("underlying").get<std::vector<std::string>>();
    s.split = e.at("split").get<int>();
    cd.simples.push_back(std::move(s));
  }
  for (const auto& row : j.at("smatrix")) {
    std::vector<Cyclotomic> r;
    for (const auto& v : row) r.push_back(cyclotomic_from_json(v));
    cd.smatrix.push_back(std::move(r));
  }
  cd.global_dim = cyclotomic_from_json(j.at("global_dim"));
  cd.dim_sqrt = cyclotomic_from_json(j.at("dim_sqrt"));
  return cd;
}

Json to_json(const MatchReport& rep) {
  Json j;
  j["verdict"] = rep.matched ? "matched" : "mismatched";
  if (rep.bijection)
    j["bijection"] = *rep.bijection;
  else
    j["bijection"] = nullptr;
  j["normalization"] = to_json(rep.normalization);
  j["diagnostics"] = rep.diagnostics;
  return j;
}

MatchReport report_from_json(const Json& j) {
  MatchReport rep;
  rep.matched = j.at("verdict").get<std::string>() == "matched";
  if (!j.at("bijection").is_null()) rep.bijection = j.at("bijection").get<std::vector<int>>();
  rep.normalization = cyclotomic_from_json(j.at("normalization"));
  rep.diagnostics = j.at("diagnostics").get<std::string>();
  return rep;
}

std::string matrix_to_csv(const CycMatrix& m, const std::vector<std::string>& labels) {
  std::ostringstream os;
  os << "# decimal approximations (6 significant digits); the JSON format is exact\n";
  for (size_t i = 0; i < m.size(); ++i) {
    if (!labels.empty()) os << labels[i] << ",";
    for (size_t j = 0; j < m[i].size(); ++j) {
      if (j) os << ",";
      os << m[i][j].to_decimal_string(6);
    }
    os << "\n";
  }
  return os.str();
}

std::string matrix_to_text(const CycMatrix& m, const std::vector<std::string>& labels) {
  std::vector<std::vector<std::string>> cells(m.size());
  size_t width = 0;
  for (size_t i = 0; i < m.size(); ++i) {
    for (const auto& v : m[i]) {
      cells[i].push_back(v.to_string());
      width = std::max(width, cells[i].back().size());
    }
  }
  std::ostringstream os;
  for (size_t i = 0; i < cells.size(); ++i) {
    if (!labels.empty()) os << labels[i] << ": ";
    os << "[ ";
    for (size_t j = 0; j < cells[i].size(); ++j)
      os << std::setw(static_cast<int>(width)) << cells[i][j] << (j + 1 < cells[i].size() ? "  " : "");
    os << " ]\n";
  }
  return os.str();
}

}  // namespace cellmod::io
