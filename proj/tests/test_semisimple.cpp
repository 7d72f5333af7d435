#include <doctest.h>

#include "frobstar/corpus.hpp"
#include "frobstar/semisimple.hpp"

using namespace frobstar;

namespace {
const Tolerance tol{};
}

TEST_CASE("central idempotents of C[Z/2]") {
  auto alg = group_algebra(corpus::cyclic(2), tol);
  auto idems = central_idempotents(alg, tol);
  REQUIRE(idems.size() == 2);
  Vector plus(2), minus(2);
  plus << 0.5, 0.5;
  minus << 0.5, -0.5;
  double d0 = std::min((idems[0] - plus).norm(), (idems[0] - minus).norm());
  double d1 = std::min((idems[1] - plus).norm(), (idems[1] - minus).norm());
  CHECK(d0 < 1e-9);
  CHECK(d1 < 1e-9);
  CHECK((idems[0] - idems[1]).norm() > 0.5);
}

TEST_CASE("idempotent identities: e^2 = e, orthogonal, sum 1, star-fixed") {
  auto alg = group_algebra(corpus::dihedral(3), tol);
  auto idems = central_idempotents(alg, tol);
  REQUIRE(idems.size() == 3);
  Vector sum = Vector::Zero(alg.dim());
  for (std::size_t i = 0; i < idems.size(); ++i) {
    sum += idems[i];
    CHECK((alg.multiply(idems[i], idems[i]) - idems[i]).norm() < 1e-9);
    CHECK((alg.star(idems[i]) - idems[i]).norm() < 1e-9);
    for (std::size_t j = i + 1; j < idems.size(); ++j)
      CHECK(alg.multiply(idems[i], idems[j]).norm() < 1e-9);
  }
  CHECK((sum - alg.spec().unit()).norm() < 1e-9);
}

TEST_CASE("one-dimensional algebra has the unit as its only idempotent") {
  auto alg = group_algebra(corpus::cyclic(1), tol);
  auto idems = central_idempotents(alg, tol);
  REQUIRE(idems.size() == 1);
  CHECK((idems[0] - alg.spec().unit()).norm() < 1e-12);
}

TEST_CASE("characters of C[Z/2]") {
  auto alg = group_algebra(corpus::cyclic(2), tol);
  auto simples = simple_modules(alg, tol);
  REQUIRE(simples.size() == 2);
  // canonical order: (1,-1) lexicographically precedes (1,1)
  Vector sign(2), trivial(2);
  sign << 1, -1;
  trivial << 1, 1;
  CHECK(simples[0].dim == 1);
  CHECK(simples[1].dim == 1);
  CHECK((simples[0].character - sign).norm() < 1e-9);
  CHECK((simples[1].character - trivial).norm() < 1e-9);
}

TEST_CASE("C[S3] has degrees 1,1,2 and the 2-dim character kills transpositions") {
  FiniteGroup s3 = group_from_permutations({{1, 0, 2}, {1, 2, 0}});
  auto alg = group_algebra(s3, tol);
  auto simples = simple_modules(alg, tol);
  REQUIRE(simples.size() == 3);
  CHECK(simples[0].dim == 1);
  CHECK(simples[1].dim == 1);
  CHECK(simples[2].dim == 2);
  // discovery order: id,(01),(012),(12),(02),(021); transpositions 1,3,4
  for (int t : {1, 3, 4}) CHECK(std::abs(simples[2].character(t)) < 1e-9);
  CHECK(std::abs(simples[2].character(0) - 2.0) < 1e-9);
}

TEST_CASE("chi(unit) = dim and sum of squares = |G|") {
  for (const auto& g : {corpus::dihedral(4), corpus::dicyclic(3)}) {
    auto alg = group_algebra(g, tol);
    auto simples = simple_modules(alg, tol);
    int sum = 0;
    for (const auto& s : simples) {
      sum += s.dim * s.dim;
      Complex chi_unit = s.character.cwiseProduct(alg.spec().unit()).sum();
      CHECK(std::abs(chi_unit - double(s.dim)) < 1e-9);
    }
    CHECK(sum == g.order);
  }
}

TEST_CASE("phi_inverse(chi) = c * e, with c = |G|/d") {
  auto alg = group_algebra(corpus::dicyclic(2), tol);
  for (const auto& s : simple_modules(alg, tol)) {
    Vector alpha = alg.phi_inverse({s.character});
    CHECK((alpha - s.c * s.idempotent).norm() < 1e-9);
    CHECK(std::abs(s.c - Complex(8.0 / s.dim)) < 1e-9);
  }
}

TEST_CASE("representations multiply like the algebra and reproduce traces") {
  FiniteGroup s3 = group_from_permutations({{1, 0, 2}, {1, 2, 0}});
  auto alg = group_algebra(s3, tol);
  auto simples = simple_modules(alg, tol);
  for (auto& s : simples) {
    compute_representation(alg, s, tol);
    REQUIRE(static_cast<int>(s.rep.size()) == alg.dim());
    for (int i = 0; i < alg.dim(); ++i) {
      CHECK(std::abs(s.rep[i].trace() - s.character(i)) < 1e-7);
      for (int j = 0; j < alg.dim(); ++j) {
        Matrix expected = Matrix::Zero(s.dim, s.dim);
        for (int k = 0; k < alg.dim(); ++k) {
          Complex c = alg.spec().structure(i, j, k);
          if (c != Complex(0)) expected += c * s.rep[k];
        }
        CHECK((s.rep[i] * s.rep[j] - expected).norm() < 1e-7);
      }
    }
  }
  // the 2-dim simple sends a 3-cycle to a matrix with eigenvalues {w, w^2}
  const auto& two = simples[2];
  Eigen::ComplexEigenSolver<Matrix> es(two.rep[2]);  // (012)
  std::vector<double> args;
  for (int i = 0; i < 2; ++i) args.push_back(std::arg(es.eigenvalues()(i)));
  std::sort(args.begin(), args.end());
  CHECK(std::abs(args[0] + 2 * M_PI / 3) < 1e-7);
  CHECK(std::abs(args[1] - 2 * M_PI / 3) < 1e-7);
}

TEST_CASE("orthogonality gram matrices for Z/2 and S3") {
  auto alg2 = group_algebra(corpus::cyclic(2), tol);
  auto rep2 = verify_orthogonality(alg2, simple_modules(alg2, tol), tol);
  CHECK(rep2.checks.pass());
  CHECK((rep2.gram - 2.0 * Matrix::Identity(2, 2)).norm() < 1e-9);

  auto alg6 = group_algebra(corpus::dihedral(3), tol);
  auto rep6 = verify_orthogonality(alg6, simple_modules(alg6, tol), tol);
  CHECK(rep6.checks.pass());
  CHECK((rep6.gram - 6.0 * Matrix::Identity(3, 3)).norm() < 1e-9);
}

TEST_CASE("gram is Hermitian positive definite") {
  auto alg = group_algebra(corpus::dicyclic(3), tol);
  auto rep = verify_orthogonality(alg, simple_modules(alg, tol), tol);
  CHECK((rep.gram - rep.gram.adjoint()).norm() < 1e-9);
  Eigen::SelfAdjointEigenSolver<Matrix> es(rep.gram);
  CHECK(es.eigenvalues()(0) > 1e-9);
}

TEST_CASE("agreement with the independent class-sum oracle") {
  for (const auto& named : corpus::all_groups_up_to(8)) {
    auto alg = group_algebra(named.group, tol);
    auto simples = simple_modules(alg, tol);
    auto table = class_sum_character_oracle(named.group, tol);
    REQUIRE(simples.size() == table.values.size());
    for (std::size_t i = 0; i < simples.size(); ++i) {
      INFO(named.name << " row " << i);
      CHECK(simples[i].dim == table.degrees[i]);
      CHECK((simples[i].character - table.values[i]).norm() < 1e-6);
    }
  }
}

TEST_CASE("characters of distinct simples annihilate each other") {
  auto alg = group_algebra(corpus::dihedral(4), tol);
  auto simples = simple_modules(alg, tol);
  for (std::size_t i = 0; i < simples.size(); ++i)
    for (std::size_t j = 0; j < simples.size(); ++j) {
      if (i == j) continue;
      Vector alpha = alg.phi_inverse({simples[i].character});
      Complex v = simples[j].character.cwiseProduct(alpha).sum();
      CHECK(std::abs(v) < 1e-9);
    }
}
