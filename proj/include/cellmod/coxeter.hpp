#pragma once

// Coxeter systems, dihedral cell structure, and the classification of
// groups with finitely many elements of a-value 1 or 2, with explicit
// enumeration of the a-value-1 cell by path search.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cellmod/basedring.hpp"

namespace cellmod {

constexpr int kInfiniteBond = 0;  // m_{s,t} = infinity

struct CoxeterSystem {
  // bonds[i][j] = m_{s_i,s_j}; 1 on the diagonal, kInfiniteBond for infinity
  std::vector<std::vector<int>> bonds;
  std::vector<std::string> labels;  // defaults to "1","2",...

  CoxeterSystem() = default;
  explicit CoxeterSystem(std::vector<std::vector<int>> bonds_,
                         std::vector<std::string> labels_ = {});

  int rank() const { return static_cast<int>(bonds.size()); }
  bool connected(int i, int j) const { return bonds[i][j] >= 3 || bonds[i][j] == kInfiniteBond; }
  std::vector<std::vector<int>> components() const;

  static CoxeterSystem dihedral(int n);
  // plain-text format: first line the generator count, then the bond matrix
  // rows, "inf" marking infinite bonds
  static CoxeterSystem parse(const std::string& text);
  std::string format() const;
};

using Word = std::vector<int>;  // generator indices

std::string word_label(const CoxeterSystem& sys, const Word& w);

// true when the word is a reduced expression no other reduced word equals:
// consecutive letters never commute and no alternating run reaches m_{s,t}
bool reduced_unique(const CoxeterSystem& sys, const Word& w);

struct CellDatum {
  std::vector<Word> elements;
  int a_value = 0;
  // partitions of element indices: left cells share the final letter (right
  // descent), right cells share the initial letter (left descent)
  std::vector<std::vector<int>> left_cells;
  std::vector<std::vector<int>> right_cells;
  // h_cells[{first,last}]: elements starting with `first` and ending in `last`
  std::map<std::pair<int, int>, std::vector<int>> h_cells;
  std::vector<int> duflo;
};

// the three cells {1}, middle, {w0} of I2(n)
std::vector<CellDatum> dihedral_cells(int n);

struct A1Verdict {
  bool finite = false;
  std::string reason;  // "ok" or the violated condition
};

A1Verdict a1_finite(const CoxeterSystem& sys);

// enumerates the a-value-1 cell of an a(1)-finite system
CellDatum enumerate_a1(const CoxeterSystem& sys);

// J-ring of the diagonal H-cell on the maximal bond (the words bouncing on
// it), labelled by the actual words; reduces to the dihedral J-ring of the
// parabolic on that bond
BasedRing a1_hcell_ring(const CoxeterSystem& sys);

struct A2Classification {
  std::string type_tag;          // "A5", "B6", "C~4", "E{2,3}", "F5", "H3", "I7", ...
  bool a2_finite = false;
  bool w2_empty = false;         // no elements of a-value 2 at all
  std::vector<std::string> hcell_words;
  std::optional<BasedRing> hcell_ring;
  std::string note;
};

// matches an irreducible system against the catalog A_n, B_n, C~_n, E_{q,r},
// F_n, H_n, I_n; throws std::invalid_argument("not classified") otherwise
// (diagram cycles get an infinite-W2 verdict instead)
A2Classification a2_classify(const CoxeterSystem& sys);

// builds the systems of the catalog from a name token such as "A5", "B6",
// "C~4", "E2,3", "F5", "H3", "I7"
CoxeterSystem coxeter_from_token(const std::string& token);

}  // namespace cellmod
