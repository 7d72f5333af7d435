#pragma once

#include "frobstar/group.hpp"

namespace frobstar::corpus {

FiniteGroup cyclic(int n);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
/// Dihedral group of order 2n.
FiniteGroup dihedral(int n);
/// Dicyclic group of order 4n (n=2 gives Q8, n=4 gives Q16).
FiniteGroup dicyclic(int n);
/// C_n ⋊ C_m with the generator of C_m acting by x -> k*x (k^m = 1 mod n).
FiniteGroup semidirect_cyclic(int n, int k, int m);
FiniteGroup alternating4();
/// Pauli group of order 16: phases {1,i,-1,-i} times {I,X,Y,Z}.
FiniteGroup pauli16();

/// Inversion x -> -x as an automorphism of cyclic(n).
GroupAutomorphism cyclic_inversion(int n, int m = 2);
/// Conjugation by a fixed element t as an (inner) automorphism.
GroupAutomorphism inner_automorphism(const FiniteGroup& g, int t, int m);

struct NamedGroup {
  std::string name;
  FiniteGroup group;
};

/// One representative per isomorphism class of groups of order <= max_order
/// (supported up to 16).
std::vector<NamedGroup> all_groups_up_to(int max_order);

}  // namespace frobstar::corpus
