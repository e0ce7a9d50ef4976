#pragma once

#include "ahrg/lattice.hpp"
#include "ahrg/matrix.hpp"

#include <complex>
#include <string>
#include <vector>

namespace ahrg {

/// A finite group given by its multiplication table; element 0 is the identity.
class FiniteGroup {
 public:
  FiniteGroup() : FiniteGroup(std::vector<std::vector<int>>{{0}}) {}
  /// table[a][b] = a * b. Throws std::invalid_argument unless it is a group
  /// table with identity 0.
  explicit FiniteGroup(std::vector<std::vector<int>> table);
  static FiniteGroup from_permutations(const std::vector<std::vector<int>>& gens);

  int order() const { return (int)table_.size(); }
  int mul(int a, int b) const { return table_[a][b]; }
  int inverse(int a) const { return inv_[a]; }
  int power(int a, long k) const;
  int element_order(int a) const { return ord_[a]; }
  int exponent() const { return exponent_; }
  bool is_abelian() const;

  int nclasses() const { return (int)classes_.size(); }
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  int class_of(int g) const { return cls_[g]; }
  int class_size(int c) const { return (int)classes_[c].size(); }
  int representative(int c) const { return classes_[c][0]; }

  /// Elements of the subgroup generated by gens, sorted, identity first.
  std::vector<int> generated(const std::vector<int>& gens) const;
  /// The subgroup on the given closed subset, relabeled in the given order.
  FiniteGroup subgroup(const std::vector<int>& elems) const;

 private:
  std::vector<std::vector<int>> table_;
  std::vector<int> inv_, ord_, cls_;
  std::vector<std::vector<int>> classes_;
  int exponent_ = 1;
};

/// A finite matrix group on Q^n with its abstract table; mats[g] is the matrix of g.
struct MatrixGroup {
  FiniteGroup group;
  std::vector<IntMat> mats;
  static MatrixGroup generate(const std::vector<IntMat>& gens, int dim, std::size_t bound = 100000);
};

/// Character table over cyclotomics: chi[i][c] is the value of the i-th
/// irreducible on class c. Rows are sorted by degree, the trivial character first.
struct CharacterTable {
  std::vector<std::vector<Cyclotomic>> chi;
  std::vector<int> degrees;
  long prime = 0;  // modulus used by the Dixon-Schneider pass
  int size() const { return (int)chi.size(); }
};

/// Dixon-Schneider over F_p with a lift to cyclotomics; orthogonality is
/// verified exactly and a failing prime is replaced by the next one.
CharacterTable character_table(const FiniteGroup& G);

/// Burnside's method in floating point; independent check for small groups.
std::vector<std::vector<std::complex<double>>> burnside_table_numeric(const FiniteGroup& G, unsigned seed = 1);

/// Whether the two tables agree up to row order within tol.
bool tables_agree(const CharacterTable& exact, const std::vector<std::vector<std::complex<double>>>& approx,
                  double tol = 1e-6);

/// Exact row and column orthogonality.
bool check_orthogonality(const FiniteGroup& G, const CharacterTable& T);

/// Row index of the complex conjugate of each character.
std::vector<int> dual_characters(const CharacterTable& T);

/// Groups of order at most 8 up to isomorphism, with names.
std::vector<std::pair<std::string, FiniteGroup>> small_groups();

/// All G-sets of size at most max_size up to isomorphism, as permutation
/// actions act[g][u].
std::vector<std::vector<std::vector<int>>> group_sets(const FiniteGroup& G, int max_size);

}  // namespace ahrg
