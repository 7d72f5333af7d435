#include "frobstar/semisimple.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace frobstar {

std::vector<Vector> central_idempotents(const FrobeniusStarAlgebra& a,
                                        const Tolerance& tol) {
  const int n = a.dim();
  Matrix z = center(a.spec(), tol);  // n x zdim, orthonormal columns
  const int zdim = static_cast<int>(z.cols());
  if (zdim == 0) throw StructureError("central_idempotents: empty center");

  // multiplication by each center basis vector, restricted to the center
  std::vector<Matrix> ops;
  ops.reserve(zdim);
  for (int j = 0; j < zdim; ++j) {
    Matrix lz = a.spec().left_mult(z.col(j));
    Matrix restr = z.adjoint() * (lz * z);
    if ((lz * z - z * restr).norm() > 1e-7 * std::max(1.0, lz.norm()))
      throw StructureError("central_idempotents: center not closed under product");
    ops.push_back(std::move(restr));
  }

  auto spaces = eig_commutative(ops, tol);
  std::vector<Vector> idems;
  for (const auto& es : spaces) {
    if (es.basis.cols() != 1)
      throw SplitFailure("central_idempotents: joint eigenspace not 1-dim");
    Vector cvec = z * es.basis.col(0);
    Vector csq = a.multiply(cvec, cvec);
    // c^2 = kappa c on the largest coordinate of c
    Eigen::Index imax;
    cvec.cwiseAbs().maxCoeff(&imax);
    Complex kappa = csq(imax) / cvec(imax);
    if (std::abs(kappa) < tol.eps_rank)
      throw StructureError("central_idempotents: nilpotent direction in center");
    Vector e = cvec / kappa;
    if ((a.multiply(e, e) - e).norm() > 1e-7 * std::max(1.0, e.norm()))
      throw StructureError("central_idempotents: idempotent residual too large");
    idems.push_back(std::move(e));
  }
  // sanity: sum to the unit
  Vector sum = Vector::Zero(n);
  for (const auto& e : idems) sum += e;
  if ((sum - a.spec().unit()).norm() > 1e-7 * idems.size())
    throw StructureError("central_idempotents: idempotents do not sum to 1");
  return idems;
}

std::vector<SimpleModuleData> simple_modules(const FrobeniusStarAlgebra& a,
                                             const Tolerance& tol) {
  const int n = a.dim();
  auto idems = central_idempotents(a, tol);
  std::vector<SimpleModuleData> out;
  for (const auto& e : idems) {
    SimpleModuleData m;
    m.idempotent = e;
    Matrix re = a.spec().right_mult(e);  // x -> x e, image is the ideal A e
    Matrix q = column_space(re, tol);
    const int ideal_dim = static_cast<int>(q.cols());
    double droot = std::sqrt(static_cast<double>(ideal_dim));
    int d = static_cast<int>(std::lround(droot));
    if (std::abs(droot - d) > 0.01)
      throw StructureError("simple_modules: ideal dimension is not a square");
    m.dim = d;
    m.character.resize(n);
    for (int i = 0; i < n; ++i) {
      Matrix restr = q.adjoint() * (a.spec().left_basis(i) * q);
      m.character(i) = restr.trace() / static_cast<double>(d);
    }
    Vector alpha = a.phi_inverse(LinearFunctional{m.character});
    Eigen::Index imax;
    e.cwiseAbs().maxCoeff(&imax);
    m.c = alpha(imax) / e(imax);
    if ((alpha - m.c * e).norm() > 1e-6 * std::max(1.0, alpha.norm()))
      throw StructureError("simple_modules: phi^{-1}(chi) not proportional to e");
    out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end(),
            [&](const SimpleModuleData& x, const SimpleModuleData& y) {
              if (x.dim != y.dim) return x.dim < y.dim;
              return lex_compare(x.character, y.character, tol.eps_eq) < 0;
            });
  return out;
}

void compute_representation(const FrobeniusStarAlgebra& a, SimpleModuleData& m,
                            const Tolerance& tol) {
  const int n = a.dim();
  const int d = m.dim;
  Matrix re = a.spec().right_mult(m.idempotent);
  Matrix q = column_space(re, tol);  // basis of the block A e, dim d^2

  std::mt19937_64 rng(tol.seed ^ 0x9e3779b97f4a7c15ull);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  const int max_attempts = 32;

  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Matrix v;  // basis of a minimal left ideal
    if (d == 1) {
      v = q;
    } else {
      // random element y of the block; generically y has d distinct
      // eigenvalues as a d x d matrix, each showing up with multiplicity d in
      // the left action on the block
      Vector coeffs(q.cols());
      for (Eigen::Index i = 0; i < coeffs.size(); ++i)
        coeffs(i) = Complex(unif(rng), unif(rng));
      Vector y = q * coeffs;
      Matrix ly_block = q.adjoint() * (a.spec().left_mult(y) * q);
      Eigen::ComplexEigenSolver<Matrix> ces(ly_block);
      if (ces.info() != Eigen::Success) continue;
      Vector vals = ces.eigenvalues();

      // cluster the d^2 eigenvalues into d groups of multiplicity d
      double scale = std::max(1.0, vals.cwiseAbs().maxCoeff());
      std::vector<int> taken(vals.size(), 0);
      std::vector<Complex> centers;
      std::vector<int> mult;
      bool ok = true;
      for (Eigen::Index i = 0; i < vals.size(); ++i) {
        if (taken[i]) continue;
        Complex c0 = vals(i);
        Complex acc = 0;
        int cnt = 0;
        for (Eigen::Index j = 0; j < vals.size(); ++j) {
          if (!taken[j] && std::abs(vals(j) - c0) < 1e-5 * scale) {
            taken[j] = 1;
            acc += vals(j);
            ++cnt;
          }
        }
        centers.push_back(acc / static_cast<double>(cnt));
        mult.push_back(cnt);
      }
      if (static_cast<int>(centers.size()) != d) ok = false;
      for (int cnt : mult)
        if (cnt != d) ok = false;
      if (!ok) continue;

      // spectral idempotent of y for centers[0], as an algebra element:
      // p = prod_{k>0} (y - centers[k] e) / (centers[0] - centers[k])
      Vector p = m.idempotent;
      for (std::size_t k = 1; k < centers.size(); ++k) {
        Vector factor = y - centers[k] * m.idempotent;
        p = a.multiply(p, factor) / (centers[0] - centers[k]);
      }
      Matrix rp = a.spec().right_mult(p);  // minimal ideal = A p
      v = column_space(rp * q, tol);
      if (static_cast<int>(v.cols()) != d) continue;
    }

    std::vector<Matrix> rep(n);
    bool ok = true;
    double trace_res = 0.0;
    for (int i = 0; i < n && ok; ++i) {
      Matrix li = a.spec().left_basis(i);
      Matrix restr = v.adjoint() * (li * v);
      if ((li * v - v * restr).norm() > 1e-6 * std::max(1.0, li.norm())) {
        ok = false;
        break;
      }
      trace_res = std::max(trace_res, std::abs(restr.trace() - m.character(i)));
      rep[i] = std::move(restr);
    }
    if (!ok || trace_res > 1e-6) continue;
    m.rep = std::move(rep);
    return;
  }
  throw SplitFailure("compute_representation: could not isolate a minimal ideal");
}

OrthogonalityReport verify_orthogonality(
    const FrobeniusStarAlgebra& a, const std::vector<SimpleModuleData>& simples,
    const Tolerance& tol) {
  OrthogonalityReport rep;
  const int k = static_cast<int>(simples.size());
  const int n = a.dim();
  std::vector<Vector> alphas;
  for (const auto& m : simples) {
    alphas.push_back(a.phi_inverse(LinearFunctional{m.character}));
    rep.c.push_back(m.c);
    rep.e_norm.push_back(a.inner(m.idempotent, m.idempotent));
  }
  rep.gram.resize(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) rep.gram(i, j) = a.inner(alphas[i], alphas[j]);

  double offdiag = 0.0, diag_res = 0.0;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i == j) {
        Complex target = std::norm(rep.c[i]) * rep.e_norm[i];
        double rel = std::abs(rep.gram(i, i) - target) /
                     std::max(1.0, std::abs(target));
        diag_res = std::max(diag_res, rel);
      } else {
        offdiag = std::max(offdiag, std::abs(rep.gram(i, j)));
      }
    }
  }
  double scale = std::max(1.0, rep.gram.norm());
  rep.checks.add("gram_off_diagonal", offdiag, 1e3 * tol.eps_eq * scale);
  rep.checks.add("gram_diagonal_formula", diag_res, 1e3 * tol.eps_eq);

  // sum of squared dimensions must exhaust the algebra (guards semisimplicity)
  int dimsum = 0;
  for (const auto& m : simples) dimsum += m.dim * m.dim;
  rep.checks.add("sum_d_squared", std::abs(dimsum - n), 0.5);

  // characters form a basis of the class functionals
  Matrix cf = class_functionals(a.spec(), tol);
  rep.checks.add("count_equals_dim_cf",
                 std::abs(k - static_cast<int>(cf.cols())), 0.5);
  Matrix chars(n, k);
  for (int i = 0; i < k; ++i) chars.col(i) = simples[i].character;
  rep.checks.add("characters_span_cf", subspace_distance(chars, cf, tol),
                 1e3 * tol.eps_eq);
  return rep;
}

}  // namespace frobstar
