#include <doctest.h>

#include <map>
#include <set>

#include "frobstar/corpus.hpp"
#include "frobstar/semisimple.hpp"

using namespace frobstar;

namespace {

const Tolerance tol{};

GroupRep representation(const FiniteGroup& g, int which) {
  auto alg = group_algebra(g, tol);
  auto simples = simple_modules(alg, tol);
  compute_representation(alg, simples[which], tol);
  return simples[which].rep;
}

}  // namespace

TEST_CASE("permutation closure: S3, trivial group, 4-cycle") {
  CHECK(group_from_permutations({{1, 0, 2}, {1, 2, 0}}).order == 6);
  CHECK(group_from_permutations({}).order == 1);
  auto c4 = group_from_permutations({{1, 2, 3, 0}});
  CHECK(c4.order == 4);
  CHECK(c4.is_abelian());
}

TEST_CASE("closure respects the max order bound") {
  CHECK_THROWS_AS(group_from_permutations({{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}}, 30),
                  TooLarge);
}

TEST_CASE("corrupted Cayley table is rejected") {
  auto g = corpus::cyclic(3);
  auto bad = g.cayley;
  bad[1][1] = 1;  // breaks associativity/latin-square structure
  CHECK_THROWS_AS(group_from_cayley(bad), InvalidInput);
}

TEST_CASE("Hermitian gram of a group algebra is the identity") {
  for (const auto& g : {corpus::dihedral(3), corpus::dicyclic(2), corpus::cyclic(7)}) {
    auto alg = group_algebra(g, tol);
    CHECK((alg.gram_hermitian() - Matrix::Identity(g.order, g.order)).norm() < 1e-12);
  }
}

TEST_CASE("semidirect product with trivial sigma and m=1 is the group itself") {
  auto g = corpus::dihedral(4);
  GroupAutomorphism id;
  id.m = 1;
  id.perm.resize(g.order);
  for (int i = 0; i < g.order; ++i) id.perm[i] = i;
  auto prod = semidirect_product(g, id);
  CHECK(prod.order == g.order);
  CHECK(prod.cayley == g.cayley);
}

TEST_CASE("semidirect product Z/3 x| Z/2 is S3") {
  auto gt = semidirect_product(corpus::cyclic(3), corpus::cyclic_inversion(3, 2));
  CHECK(gt.order == 6);
  CHECK_FALSE(gt.is_abelian());
  // 3 conjugacy classes, sizes 1, 2, 3
  auto classes = conjugacy_classes(gt);
  std::vector<std::size_t> sizes;
  for (const auto& c : classes) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 2, 3});
}

TEST_CASE("automorphism validation failures") {
  auto g = corpus::cyclic(3);
  GroupAutomorphism bad;
  bad.m = 2;
  bad.perm = {1, 0, 2};  // moves the identity
  CHECK_THROWS_AS(validate_automorphism(g, bad), InvalidInput);
  bad.perm = {0, 2, 1};
  bad.m = 3;  // sigma^3 = sigma != id
  CHECK_THROWS_AS(validate_automorphism(g, bad), InvalidInput);
  bad.m = 4;  // multiples of the order are fine
  CHECK_NOTHROW(validate_automorphism(g, bad));
}

TEST_CASE("class-sum oracle: Z/2, S3, Q8") {
  auto t2 = class_sum_character_oracle(corpus::cyclic(2), tol);
  REQUIRE(t2.degrees.size() == 2);
  Vector sign(2), trivial(2);
  sign << 1, -1;
  trivial << 1, 1;
  CHECK((t2.values[0] - sign).norm() < 1e-9);
  CHECK((t2.values[1] - trivial).norm() < 1e-9);

  FiniteGroup s3 = group_from_permutations({{1, 0, 2}, {1, 2, 0}});
  auto t6 = class_sum_character_oracle(s3, tol);
  CHECK(t6.degrees == std::vector<int>{1, 1, 2});
  // values on classes {id, transpositions, 3-cycles}: (1,1,1), (1,-1,1), (2,0,-1)
  for (int e = 0; e < 6; ++e) {
    int c = t6.class_of[e];
    double expected_sign = c == 1 ? -1.0 : 1.0;
    CHECK(std::abs(t6.values[0](e) - expected_sign) < 1e-9);
    CHECK(std::abs(t6.values[1](e) - 1.0) < 1e-9);
    double expected_two = c == 0 ? 2.0 : (c == 1 ? 0.0 : -1.0);
    CHECK(std::abs(t6.values[2](e) - expected_two) < 1e-9);
  }

  auto t8 = class_sum_character_oracle(corpus::dicyclic(2), tol);
  CHECK(t8.degrees == std::vector<int>{1, 1, 1, 1, 2});
}

TEST_CASE("principal root branch") {
  CHECK(std::abs(principal_root(Complex(4, 0), 2) - Complex(2, 0)) < 1e-12);
  CHECK(std::abs(principal_root(Complex(-1, 0), 2) - Complex(0, 1)) < 1e-12);
  CHECK(std::abs(principal_root(Complex(0, 8), 3) -
                 std::polar(2.0, M_PI / 6)) < 1e-12);
}

TEST_CASE("intertwiner of the trivial representation is [1]") {
  auto g = corpus::cyclic(3);
  GroupRep triv(3, Matrix::Identity(1, 1));
  auto phi = intertwiner(g, triv, corpus::cyclic_inversion(3, 2), tol);
  REQUIRE(phi.has_value());
  CHECK(std::abs((*phi)(0, 0) - 1.0) < 1e-9);
}

TEST_CASE("nontrivial Z/3 character has no intertwiner under inversion") {
  auto g = corpus::cyclic(3);
  Complex w = std::polar(1.0, 2 * M_PI / 3);
  GroupRep rep;
  for (int i = 0; i < 3; ++i) {
    Matrix m(1, 1);
    m(0, 0) = std::pow(w, i);
    rep.push_back(m);
  }
  CHECK_FALSE(intertwiner(g, rep, corpus::cyclic_inversion(3, 2), tol).has_value());
}

TEST_CASE("inner automorphism: phi is proportional to rho(t)") {
  FiniteGroup s3 = group_from_permutations({{1, 0, 2}, {1, 2, 0}});
  const int t = 1;  // the transposition (01)
  auto sigma = corpus::inner_automorphism(s3, t, 2);
  GroupRep rep = representation(s3, 2);  // the 2-dim simple
  auto phi = intertwiner(s3, rep, sigma, tol);
  REQUIRE(phi.has_value());
  // intertwiner relation and normalization
  for (int e = 0; e < 6; ++e)
    CHECK((rep[e] * *phi - *phi * rep[sigma.perm[e]]).norm() < 1e-7);
  CHECK((*phi * *phi - Matrix::Identity(2, 2)).norm() < 1e-7);
  // proportional to rho(t): phi * rho(t)^{-1} is scalar
  Matrix ratio = *phi * rep[t].inverse();
  CHECK((ratio - ratio(0, 0) * Matrix::Identity(2, 2)).norm() < 1e-7);
}

TEST_CASE("twisted character norms over the group") {
  // trivial rep of Z/3 under inversion: constantly 1, norm^2 sum = 3
  GroupRep triv(3, Matrix::Identity(1, 1));
  auto g3 = corpus::cyclic(3);
  auto phi3 = intertwiner(g3, triv, corpus::cyclic_inversion(3, 2), tol);
  Vector tc3 = twisted_character_direct(triv, *phi3);
  CHECK((tc3 - Vector::Ones(3)).norm() < 1e-9);

  // 2-dim rep of S3 under conjugation by a transposition: sum |chi~|^2 = 6
  FiniteGroup s3 = group_from_permutations({{1, 0, 2}, {1, 2, 0}});
  auto sigma = corpus::inner_automorphism(s3, 1, 2);
  GroupRep rep = representation(s3, 2);
  auto phi = intertwiner(s3, rep, sigma, tol);
  Vector tc = twisted_character_direct(rep, *phi);
  CHECK(std::abs(tc.squaredNorm() - 6.0) < 1e-7);
  // sigma-twisted class function: chi~(h g sigma(h)^{-1}) = chi~(g)
  for (int gg = 0; gg < 6; ++gg)
    for (int h = 0; h < 6; ++h) {
      int moved = s3.mul(s3.mul(h, gg), s3.inv(sigma.perm[h]));
      CHECK(std::abs(tc(moved) - tc(gg)) < 1e-7);
    }
}

TEST_CASE("bundled corpus covers every group of order up to 16") {
  auto corpus16 = corpus::all_groups_up_to(16);
  CHECK(corpus16.size() == 42);
  std::map<int, int> by_order;
  for (const auto& n : corpus16) ++by_order[n.group.order];
  CHECK(by_order[16] == 14);
  CHECK(by_order[8] == 5);
  CHECK(by_order[12] == 5);
  // pairwise non-isomorphic, checked by cheap invariants (order, abelianness,
  // element-order histogram, number of distinct squares)
  std::set<std::string> signatures;
  for (const auto& n : corpus16) {
    std::map<int, int> hist;
    std::set<int> squares;
    for (int e = 0; e < n.group.order; ++e) {
      squares.insert(n.group.mul(e, e));
      int k = 1, cur = e;
      while (cur != n.group.identity) {
        cur = n.group.mul(cur, e);
        ++k;
      }
      ++hist[k];
    }
    std::string sig = std::to_string(n.group.order) + "|" +
                      (n.group.is_abelian() ? "a" : "n") + "|sq" +
                      std::to_string(squares.size());
    for (auto [k, v] : hist) sig += "|" + std::to_string(k) + ":" + std::to_string(v);
    signatures.insert(sig);
  }
  CHECK(signatures.size() == 42);
}
