#pragma once

#include <optional>

#include "frobstar/algebra.hpp"

namespace frobstar {

/// Finite group as a validated Cayley table. Element 0-based indices; table
/// entry cayley[i][j] is the index of g_i * g_j.
struct FiniteGroup {
  int order = 0;
  std::vector<std::vector<int>> cayley;
  std::vector<std::string> labels;
  int identity = 0;
  std::vector<int> inverse;

  int mul(int i, int j) const { return cayley[i][j]; }
  int inv(int i) const { return inverse[i]; }
  bool is_abelian() const;
};

/// Builds and exhaustively validates a group from its Cayley table.
FiniteGroup group_from_cayley(std::vector<std::vector<int>> cayley,
                              std::vector<std::string> labels = {});

/// Closure of permutation generators under composition (BFS). Elements are
/// ordered by discovery, identity first.
FiniteGroup group_from_permutations(
    const std::vector<std::vector<int>>& generators, int max_order = 1024);

struct GroupAutomorphism {
  std::vector<int> perm;  // image of each element index
  int m = 1;              // grading modulus; sigma^m must be the identity
};

/// Checks hom + bijectivity + sigma^m = id against a specific group.
void validate_automorphism(const FiniteGroup& g, const GroupAutomorphism& sigma);

/// G x Z/mZ with (g,r)(h,s) = (g sigma^r(h), r+s). Element (g,r) has index
/// r*|G| + g, so grade blocks are contiguous.
FiniteGroup semidirect_product(const FiniteGroup& g,
                               const GroupAutomorphism& sigma);

/// Group algebra C[G] with lambda = indicator of the identity and g* = g^{-1}.
FrobeniusStarAlgebra group_algebra(const FiniteGroup& g, const Tolerance& tol);

/// Conjugacy classes in discovery order of their minimal element.
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g);

struct CharacterTable {
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;         // element -> class index
  std::vector<int> degrees;          // per irreducible row
  std::vector<Vector> values;        // per row, value on every element
  int degree_of(int row) const { return degrees[row]; }
};

/// Independent Burnside-style character oracle: simultaneous eigenvectors of
/// the class-sum multiplication matrices acting on the center. Shares only the
/// numerics module with the Wedderburn path.
CharacterTable class_sum_character_oracle(const FiniteGroup& g,
                                          const Tolerance& tol);

/// Matrix rep of G as a list of matrices indexed by element.
using GroupRep = std::vector<Matrix>;

/// Intertwiner phi with rho(g) phi = phi rho(sigma(g)), normalized so that
/// phi^m = I via the principal m-th root. nullopt when rho and rho∘sigma are
/// not isomorphic.
std::optional<Matrix> intertwiner(const FiniteGroup& g, const GroupRep& rep,
                                  const GroupAutomorphism& sigma,
                                  const Tolerance& tol);

/// g -> trace(rho(g) phi).
Vector twisted_character_direct(const GroupRep& rep, const Matrix& phi);

/// Principal m-th root with branch cut on the negative reals.
Complex principal_root(Complex c, int m);

}  // namespace frobstar
