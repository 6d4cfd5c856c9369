#pragma once

// Finite permutation groups, conjugacy data, validated character tables from
// the bundled catalog, the set M(G) of (class, centralizer-irrep) pairs,
// Lusztig's pairing, and S-matrices of Z(Vec(G)) including the nontrivial
// Z/2 twist.

#include <string>
#include <vector>

#include "cellmod/center.hpp"
#include "cellmod/cyclo.hpp"

namespace cellmod {

using Perm = std::vector<int>;

class FiniteGroup {
 public:
  // closure of the generators inside Sym(degree); checks group axioms
  static FiniteGroup generated(int degree, const std::vector<Perm>& gens);

  static FiniteGroup symmetric(int n);
  static FiniteGroup cyclic(int n);
  static FiniteGroup elementary_two(int k);
  static FiniteGroup dihedral8();
  static FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b);
  // tokens: S1..S5, Z1..Z8, Z2^2, Z2^3, Z2^4, D4, S2xS2, S2xS3
  static FiniteGroup from_token(const std::string& token);

  int degree() const { return degree_; }
  size_t order() const { return elements_.size(); }
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& element(int i) const { return elements_[i]; }
  int identity() const { return 0; }  // the identity is lex-minimal
  int index_of(const Perm& p) const;  // -1 when absent
  int mult(int a, int b) const;       // composition: apply b, then a
  int inverse(int a) const;
  bool is_abelian() const;

 private:
  int degree_ = 1;
  std::vector<Perm> elements_;  // sorted
};

struct ConjClass {
  int rep = 0;                // index of the lex-minimal member
  std::vector<int> members;   // element indices
  int element_order = 1;
  size_t size() const { return members.size(); }
};

// sorted by (element order, class size, lex-min representative)
std::vector<ConjClass> conjugacy_classes(const FiniteGroup& g);

FiniteGroup centralizer(const FiniteGroup& g, int element_index);

struct CharacterTable {
  std::vector<ConjClass> classes;            // canonical order
  std::vector<std::string> class_labels;     // catalog labels after matching
  std::vector<std::string> irrep_names;      // catalog row order
  std::vector<std::vector<Cyclotomic>> values;  // rows x classes
  std::vector<int> element_class;            // element index -> class index

  size_t degree(size_t irrep) const;
};

// bundled table matched to the group and revalidated: both orthogonality
// relations, the degree-sum, and the central-character identities against
// the group's class algebra.  Throws std::domain_error for groups outside
// the catalog and std::logic_error when validation fails.
CharacterTable character_table(const FiniteGroup& g);

struct MGPair {
  int class_index = 0;
  int irrep_index = 0;
  std::string label;
};

struct MSet {
  FiniteGroup group;
  std::vector<ConjClass> classes;
  std::vector<FiniteGroup> centralizers;      // one per class
  std::vector<CharacterTable> cent_tables;    // one per class
  std::vector<MGPair> entries;
};

MSet m_set(const FiniteGroup& g);

// {(x,sigma),(y,tau)} summed over g with x g y g^{-1} = g y g^{-1} x of
// tr(g^{-1} x^{-1} g, tau) tr(g y g^{-1}, sigma) / (|C(x)||C(y)|)
Cyclotomic lusztig_pairing(const MSet& ms, size_t p1, size_t p2);
CycMatrix lusztig_pairing_matrix(const MSet& ms);

// the involution (x, sigma) -> (x, conj(sigma)) on M(G).  The x^{-1} inside
// the pairing amounts to conjugating the second character, so |G| times the
// pairing equals the center S-entry after composing this map on one index;
// it is the identity exactly when all centralizer characters are real.
std::vector<size_t> conjugation_involution(const MSet& ms);

enum class GroupTwist { kTrivial, kNontrivialZ2 };

// S-matrix of Z(Vec(G)); the twisted variant only exists for G = Z/2
CenterData center_vec_smatrix(const FiniteGroup& g,
                              GroupTwist twist = GroupTwist::kTrivial);

}  // namespace cellmod
