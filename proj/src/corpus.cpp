#include "frobstar/corpus.hpp"

namespace frobstar::corpus {

FiniteGroup cyclic(int n) {
  std::vector<std::vector<int>> cayley(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = "g^" + std::to_string(i);
    for (int j = 0; j < n; ++j) cayley[i][j] = (i + j) % n;
  }
  return group_from_cayley(std::move(cayley), std::move(labels));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int n = a.order * b.order;
  std::vector<std::vector<int>> cayley(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  auto idx = [&](int x, int y) { return x * b.order + y; };
  for (int x1 = 0; x1 < a.order; ++x1)
    for (int y1 = 0; y1 < b.order; ++y1) {
      labels[idx(x1, y1)] = "(" + a.labels[x1] + "," + b.labels[y1] + ")";
      for (int x2 = 0; x2 < a.order; ++x2)
        for (int y2 = 0; y2 < b.order; ++y2)
          cayley[idx(x1, y1)][idx(x2, y2)] =
              idx(a.mul(x1, x2), b.mul(y1, y2));
    }
  return group_from_cayley(std::move(cayley), std::move(labels));
}

FiniteGroup semidirect_cyclic(int n, int k, int m) {
  // elements (i, r), i mod n, r mod m; (i,r)(j,s) = (i + k^r j, r+s)
  std::vector<long> kpow(m, 1);
  for (int r = 1; r < m; ++r) kpow[r] = (kpow[r - 1] * k) % n;
  if ((kpow[m - 1] * k) % n != 1)
    throw InvalidInput("semidirect_cyclic: k^m != 1 mod n");
  const int big = n * m;
  auto idx = [&](int i, int r) { return r * n + i; };
  std::vector<std::vector<int>> cayley(big, std::vector<int>(big));
  for (int r = 0; r < m; ++r)
    for (int i = 0; i < n; ++i)
      for (int s = 0; s < m; ++s)
        for (int j = 0; j < n; ++j)
          cayley[idx(i, r)][idx(j, s)] =
              idx(static_cast<int>((i + kpow[r] * j) % n), (r + s) % m);
  return group_from_cayley(std::move(cayley));
}

FiniteGroup dihedral(int n) { return semidirect_cyclic(n, n - 1, 2); }

FiniteGroup dicyclic(int n) {
  // a^i b^j with a of order 2n, b^2 = a^n, b a b^{-1} = a^{-1}
  const int big = 4 * n;
  auto idx = [&](int i, int j) { return j * 2 * n + i; };
  std::vector<std::vector<int>> cayley(big, std::vector<int>(big));
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2 * n; ++k)
        for (int l = 0; l < 2; ++l) {
          // (a^i b^j)(a^k b^l): b a^k = a^{-k} b
          int shift = (j == 0) ? k : (2 * n - k) % (2 * n);
          int ai = (i + shift) % (2 * n);
          int bj = j + l;
          if (bj >= 2) {  // b^2 = a^n
            bj -= 2;
            ai = (ai + n) % (2 * n);
          }
          cayley[idx(i, j)][idx(k, l)] = idx(ai, bj);
        }
  return group_from_cayley(std::move(cayley));
}

FiniteGroup alternating4() {
  // generators (0 1 2) and (0 1)(2 3) on 4 points
  return group_from_permutations({{1, 2, 0, 3}, {1, 0, 3, 2}});
}

FiniteGroup pauli16() {
  // element = (phase k in Z/4, pauli p in {I,X,Y,Z}); phase is i^k
  // pauli products with phase exponents: X*Y = iZ etc.
  static const int prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  // phase exponent (power of i) picked up by p*q
  static const int ph[4][4] = {{0, 0, 0, 0},
                               {0, 0, 1, 3},
                               {0, 3, 0, 1},
                               {0, 1, 3, 0}};
  static const char* names[4] = {"I", "X", "Y", "Z"};
  auto idx = [](int k, int p) { return k * 4 + p; };
  std::vector<std::vector<int>> cayley(16, std::vector<int>(16));
  std::vector<std::string> labels(16);
  for (int k = 0; k < 4; ++k)
    for (int p = 0; p < 4; ++p) {
      labels[idx(k, p)] = "i^" + std::to_string(k) + names[p];
      for (int l = 0; l < 4; ++l)
        for (int q = 0; q < 4; ++q)
          cayley[idx(k, p)][idx(l, q)] =
              idx((k + l + ph[p][q]) % 4, prod[p][q]);
    }
  return group_from_cayley(std::move(cayley), std::move(labels));
}

GroupAutomorphism cyclic_inversion(int n, int m) {
  GroupAutomorphism sigma;
  sigma.m = m;
  sigma.perm.resize(n);
  for (int i = 0; i < n; ++i) sigma.perm[i] = (n - i) % n;
  return sigma;
}

GroupAutomorphism inner_automorphism(const FiniteGroup& g, int t, int m) {
  GroupAutomorphism sigma;
  sigma.m = m;
  sigma.perm.resize(g.order);
  for (int i = 0; i < g.order; ++i)
    sigma.perm[i] = g.mul(g.mul(t, i), g.inv(t));
  return sigma;
}

std::vector<NamedGroup> all_groups_up_to(int max_order) {
  if (max_order > 16)
    throw TooLarge("corpus: classification bundled only up to order 16");
  std::vector<NamedGroup> out;
  auto add = [&](const std::string& name, FiniteGroup g) {
    if (g.order <= max_order) out.push_back({name, std::move(g)});
  };
  const auto c2 = cyclic(2);
  const auto c4 = cyclic(4);

  add("C1", cyclic(1));
  add("C2", cyclic(2));
  add("C3", cyclic(3));
  add("C4", cyclic(4));
  add("C2xC2", direct_product(c2, c2));
  add("C5", cyclic(5));
  add("C6", cyclic(6));
  add("S3", dihedral(3));
  add("C7", cyclic(7));
  add("C8", cyclic(8));
  add("C4xC2", direct_product(c4, c2));
  add("C2xC2xC2", direct_product(direct_product(c2, c2), c2));
  add("D4", dihedral(4));
  add("Q8", dicyclic(2));
  add("C9", cyclic(9));
  add("C3xC3", direct_product(cyclic(3), cyclic(3)));
  add("C10", cyclic(10));
  add("D5", dihedral(5));
  add("C11", cyclic(11));
  add("C12", cyclic(12));
  add("C6xC2", direct_product(cyclic(6), c2));
  add("D6", dihedral(6));
  add("A4", alternating4());
  add("Dic3", dicyclic(3));
  add("C13", cyclic(13));
  add("C14", cyclic(14));
  add("D7", dihedral(7));
  add("C15", cyclic(15));
  if (max_order >= 16) {
    add("C16", cyclic(16));
    add("C8xC2", direct_product(cyclic(8), c2));
    add("C4xC4", direct_product(c4, c4));
    add("C4xC2xC2", direct_product(c4, direct_product(c2, c2)));
    add("C2^4", direct_product(direct_product(c2, c2), direct_product(c2, c2)));
    add("D8", dihedral(8));
    add("SD16", semidirect_cyclic(8, 3, 2));
    add("M4(2)", semidirect_cyclic(8, 5, 2));
    add("Q16", dicyclic(4));
    add("D4xC2", direct_product(dihedral(4), c2));
    add("Q8xC2", direct_product(dicyclic(2), c2));
    // C4 ⋊ C4: the order-4 generator acts on C4 by inversion
    add("C4:C4", semidirect_product(c4, cyclic_inversion(4, 4)));
    // (C2xC2) ⋊ C4: the order-4 generator swaps the two factors
    {
      FiniteGroup v4 = direct_product(c2, c2);
      GroupAutomorphism swap;
      swap.m = 4;
      swap.perm = {0, 2, 1, 3};
      add("(C2xC2):C4", semidirect_product(v4, swap));
    }
    add("Pauli16", pauli16());
  }
  return out;
}

}  // namespace frobstar::corpus
