#include "frobstar/numerics.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

namespace frobstar {

bool is_finite(const Matrix& m) { return m.allFinite(); }

namespace {

Eigen::BDCSVD<Matrix> full_svd(const Matrix& m) {
  return Eigen::BDCSVD<Matrix>(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
}

int rank_from_svd(const Eigen::BDCSVD<Matrix>& svd, double eps_rank) {
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  const double cutoff = eps_rank * sv(0);
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++r;
  return r;
}

}  // namespace

int numerical_rank(const Matrix& m, const Tolerance& tol) {
  if (!is_finite(m)) throw InvalidInput("numerical_rank: non-finite entries");
  if (m.size() == 0) return 0;
  return rank_from_svd(full_svd(m), tol.eps_rank);
}

Matrix kernel(const Matrix& m, const Tolerance& tol) {
  if (!is_finite(m)) throw InvalidInput("kernel: non-finite entries");
  if (m.rows() == 0) {
    // the zero map out of an n-dim space: kernel is everything
    return Matrix::Identity(m.cols(), m.cols());
  }
  auto svd = full_svd(m);
  const int r = rank_from_svd(svd, tol.eps_rank);
  Matrix null_basis = svd.matrixV().rightCols(m.cols() - r);
  canonicalize_columns(null_basis);
  return null_basis;
}

Matrix column_space(const Matrix& m, const Tolerance& tol) {
  if (!is_finite(m)) throw InvalidInput("column_space: non-finite entries");
  auto svd = full_svd(m);
  const int r = rank_from_svd(svd, tol.eps_rank);
  Matrix basis = svd.matrixU().leftCols(r);
  canonicalize_columns(basis);
  return basis;
}

void canonicalize_columns(Matrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    Eigen::Index imax = 0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (std::abs(m(i, j)) > best) {
        best = std::abs(m(i, j));
        imax = i;
      }
    }
    if (best > 0.0) {
      Complex phase = m(imax, j) / best;
      m.col(j) /= phase;
    }
  }
}

int lex_compare(const Vector& a, const Vector& b, double eps) {
  const Eigen::Index n = std::min(a.size(), b.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    if (a(i).real() < b(i).real() - eps) return -1;
    if (a(i).real() > b(i).real() + eps) return 1;
    if (a(i).imag() < b(i).imag() - eps) return -1;
    if (a(i).imag() > b(i).imag() + eps) return 1;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

namespace {

// Single-linkage clustering of eigenvalues by absolute distance `delta`.
// Returns cluster index per eigenvalue.
std::vector<int> cluster_points(const Vector& vals, double delta) {
  const int n = static_cast<int>(vals.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(vals(i) - vals(j)) < delta) parent[find(i)] = find(j);
  std::vector<int> label(n, -1);
  int next = 0;
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) {
    int r = find(i);
    if (label[r] < 0) label[r] = next++;
    out[i] = label[r];
  }
  return out;
}

}  // namespace

std::vector<Eigenspace> eig_commutative(const std::vector<Matrix>& ops,
                                        const Tolerance& tol) {
  if (ops.empty()) throw InvalidInput("eig_commutative: no operators");
  const Eigen::Index n = ops[0].rows();
  for (const auto& a : ops) {
    if (!is_finite(a)) throw InvalidInput("eig_commutative: non-finite entries");
    if (a.rows() != n || a.cols() != n)
      throw InvalidInput("eig_commutative: operators must be square, same size");
  }
  // pairwise commutation check
  for (std::size_t i = 0; i < ops.size(); ++i) {
    for (std::size_t j = i + 1; j < ops.size(); ++j) {
      double scale = 1.0 + ops[i].norm() * ops[j].norm();
      if ((ops[i] * ops[j] - ops[j] * ops[i]).norm() > 1e3 * tol.eps_eq * scale)
        throw NotCommuting("eig_commutative: operators do not commute");
    }
  }

  std::mt19937_64 rng(tol.seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  const int max_attempts = 24;

  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Matrix combo = Matrix::Zero(n, n);
    for (const auto& a : ops) combo += unif(rng) * a;

    Eigen::ComplexEigenSolver<Matrix> ces(combo);
    if (ces.info() != Eigen::Success) continue;
    const Vector vals = ces.eigenvalues();
    const Matrix vecs = ces.eigenvectors();

    double scale = std::max(1.0, vals.cwiseAbs().maxCoeff());
    double delta = std::max(tol.eps_rank * scale, 1e-10 * scale);
    std::vector<int> cl = cluster_points(vals, delta);
    int nclusters = *std::max_element(cl.begin(), cl.end()) + 1;

    // require a clean gap between clusters
    bool ambiguous = false;
    for (Eigen::Index i = 0; i < vals.size() && !ambiguous; ++i)
      for (Eigen::Index j = i + 1; j < vals.size(); ++j)
        if (cl[i] != cl[j] && std::abs(vals(i) - vals(j)) < 100 * delta) {
          ambiguous = true;
          break;
        }
    if (ambiguous) continue;

    // eigenvector matrix must be well conditioned enough to invert
    Eigen::PartialPivLU<Matrix> lu(vecs);
    Matrix vecs_inv = lu.solve(Matrix::Identity(n, n));
    if (!vecs_inv.allFinite()) continue;
    if ((vecs * vecs_inv - Matrix::Identity(n, n)).norm() > 1e-7 * n) continue;

    std::vector<Eigenspace> result(nclusters);
    bool ok = true;
    for (int c = 0; c < nclusters && ok; ++c) {
      std::vector<Eigen::Index> idx;
      for (Eigen::Index i = 0; i < vals.size(); ++i)
        if (cl[i] == c) idx.push_back(i);
      Matrix sub(n, idx.size());
      Matrix diag_ind = Matrix::Zero(n, n);
      for (std::size_t k = 0; k < idx.size(); ++k) {
        sub.col(k) = vecs.col(idx[k]);
        diag_ind(idx[k], idx[k]) = 1.0;
      }
      // orthonormalize within the cluster
      Eigen::HouseholderQR<Matrix> qr(sub);
      Matrix basis = qr.householderQ() * Matrix::Identity(n, idx.size());
      canonicalize_columns(basis);

      Eigenspace es;
      es.basis = basis;
      es.projector = vecs * diag_ind * vecs_inv;
      // each operator must act as a scalar on the subspace
      for (const auto& a : ops) {
        Matrix restr = basis.adjoint() * a * basis;
        Complex mu = restr.trace() / double(idx.size());
        double opscale = std::max(1.0, a.norm());
        if ((a * basis - basis * restr).norm() > 1e-7 * opscale ||
            (restr - mu * Matrix::Identity(idx.size(), idx.size())).norm() >
                1e-7 * opscale) {
          ok = false;
          break;
        }
        es.eigenvalues.push_back(mu);
      }
      result[c] = std::move(es);
    }
    if (!ok) continue;

    std::sort(result.begin(), result.end(),
              [&](const Eigenspace& a, const Eigenspace& b) {
                Vector va = Eigen::Map<const Vector>(a.eigenvalues.data(),
                                                     a.eigenvalues.size());
                Vector vb = Eigen::Map<const Vector>(b.eigenvalues.data(),
                                                     b.eigenvalues.size());
                int c = lex_compare(va, vb, tol.eps_eq);
                if (c != 0) return c < 0;
                return lex_compare(a.basis.col(0), b.basis.col(0), tol.eps_eq) < 0;
              });
    return result;
  }
  throw SplitFailure("eig_commutative: retries exhausted");
}

}  // namespace frobstar
