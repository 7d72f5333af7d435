#include "frobstar/algebra.hpp"

#include <cmath>

namespace frobstar {

AlgebraSpec::AlgebraSpec(int dim, std::vector<std::string> labels,
                         std::vector<Matrix> left_mult_basis, Vector unit)
    : dim_(dim),
      labels_(std::move(labels)),
      left_(std::move(left_mult_basis)),
      unit_(std::move(unit)) {
  if (static_cast<int>(left_.size()) != dim_ || unit_.size() != dim_)
    throw InvalidInput("AlgebraSpec: inconsistent dimensions");
  for (const auto& l : left_) {
    if (l.rows() != dim_ || l.cols() != dim_)
      throw InvalidInput("AlgebraSpec: left multiplication matrix size");
    if (!is_finite(l)) throw InvalidInput("AlgebraSpec: non-finite structure");
  }
  if (labels_.empty()) {
    for (int i = 0; i < dim_; ++i) labels_.push_back("b" + std::to_string(i));
  }
  if (static_cast<int>(labels_.size()) != dim_)
    throw InvalidInput("AlgebraSpec: label count");
  // right multiplication by b_j: (R_j)(k,i) = c[i][j][k]
  right_.assign(dim_, Matrix::Zero(dim_, dim_));
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) right_[j].col(i) = left_[i].col(j);
}

Matrix AlgebraSpec::left_mult(const Vector& x) const {
  if (x.size() != dim_) throw InvalidInput("left_mult: dimension mismatch");
  Matrix out = Matrix::Zero(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    if (x(i) != Complex(0)) out += x(i) * left_[i];
  return out;
}

Matrix AlgebraSpec::right_mult(const Vector& y) const {
  if (y.size() != dim_) throw InvalidInput("right_mult: dimension mismatch");
  Matrix out = Matrix::Zero(dim_, dim_);
  for (int j = 0; j < dim_; ++j)
    if (y(j) != Complex(0)) out += y(j) * right_[j];
  return out;
}

Vector AlgebraSpec::multiply(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw InvalidInput("multiply: dimension mismatch");
  Vector out = Vector::Zero(dim_);
  for (int i = 0; i < dim_; ++i)
    if (x(i) != Complex(0)) out += x(i) * (left_[i] * y);
  return out;
}

ValidationReport AlgebraSpec::validate(const Tolerance& tol) const {
  ValidationReport report;
  // associativity: L_i L_j == L_{b_i b_j} = sum_k c[i][j][k] L_k
  double assoc = 0.0, scale = 1.0;
  for (int i = 0; i < dim_; ++i) {
    scale = std::max(scale, left_[i].norm());
    for (int j = 0; j < dim_; ++j) {
      Matrix lhs = left_[i] * left_[j];
      Matrix rhs = Matrix::Zero(dim_, dim_);
      for (int k = 0; k < dim_; ++k) {
        Complex c = left_[i](k, j);
        if (c != Complex(0)) rhs += c * left_[k];
      }
      assoc = std::max(assoc, (lhs - rhs).norm());
    }
  }
  report.add("associativity", assoc, tol.eps_eq * scale * scale * dim_);

  double unit_res = 0.0;
  Matrix lu = left_mult(unit_);
  Matrix ru = right_mult(unit_);
  unit_res = std::max((lu - Matrix::Identity(dim_, dim_)).norm(),
                      (ru - Matrix::Identity(dim_, dim_)).norm());
  report.add("unit", unit_res, tol.eps_eq * scale * dim_);
  return report;
}

FrobeniusStarAlgebra::FrobeniusStarAlgebra(AlgebraSpec spec, Vector lambda,
                                           Matrix star, const Tolerance& tol)
    : spec_(std::move(spec)), lambda_(std::move(lambda)), star_(std::move(star)) {
  const int n = spec_.dim();
  if (lambda_.size() != n || star_.rows() != n || star_.cols() != n)
    throw InvalidInput("FrobeniusStarAlgebra: inconsistent dimensions");
  gram_bilinear_.resize(n, n);
  gram_hermitian_.resize(n, n);
  for (int i = 0; i < n; ++i) {
    Vector bi = Vector::Unit(n, i);
    for (int j = 0; j < n; ++j) {
      // G(i,j) = lambda(b_i b_j) reads off column j of L_i
      gram_bilinear_(i, j) = lambda_.cwiseProduct(spec_.left_basis(i).col(j)).sum();
    }
    for (int j = 0; j < n; ++j) {
      Vector bj_star = star_.col(j);  // (b_j)* = S * conj(e_j) = S e_j
      gram_hermitian_(i, j) = lambda_.cwiseProduct(spec_.multiply(bi, bj_star)).sum();
    }
  }
  // dual basis through the bilinear Gram matrix
  Eigen::BDCSVD<Matrix> svd(gram_bilinear_,
                            Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  degenerate_ = (sv.size() == 0) || (sv(sv.size() - 1) <= tol.eps_rank * sv(0)) ||
                sv(0) == 0.0;
  if (!degenerate_) {
    dual_ = gram_bilinear_.transpose().partialPivLu().solve(
        Matrix::Identity(n, n));
  }
}

Complex FrobeniusStarAlgebra::inner(const Vector& x, const Vector& y) const {
  return lambda(multiply(x, star(y)));
}

const Matrix& FrobeniusStarAlgebra::dual_basis() const {
  if (degenerate_)
    throw DegenerateForm("dual_basis: bilinear Gram matrix is singular");
  return dual_;
}

LinearFunctional FrobeniusStarAlgebra::phi(const Vector& x) const {
  return LinearFunctional{gram_bilinear_ * x};
}

Vector FrobeniusStarAlgebra::phi_inverse(const LinearFunctional& gamma) const {
  if (gamma.values.size() != dim())
    throw InvalidInput("phi_inverse: dimension mismatch");
  return dual_basis() * gamma.values;
}

ValidationReport validate_frobenius_star(const FrobeniusStarAlgebra& a,
                                         const Tolerance& tol) {
  ValidationReport report = a.spec().validate(tol);
  const int n = a.dim();
  const double thr = tol.eps_eq * std::max(1.0, a.lambda_values().norm()) * n;

  // lambda(xy) = lambda(yx) on basis pairs
  double cls = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      cls = std::max(cls, std::abs(a.gram_bilinear()(i, j) -
                                   a.gram_bilinear()(j, i)));
  report.add("lambda_class_functional", cls, thr);

  const Matrix& s = a.star_matrix();
  // involution: star(star(x)) = x  <=>  S conj(S) = I
  double invol = (s * s.conjugate() - Matrix::Identity(n, n)).norm();
  report.add("star_involution", invol, thr * std::max(1.0, s.norm()));

  // antimultiplicative on basis pairs: (b_i b_j)* = b_j* b_i*
  double antim = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Vector prod = a.spec().left_basis(i).col(j);  // b_i b_j
      Vector lhs = a.star(prod);
      Vector rhs = a.multiply(s.col(j), s.col(i));
      antim = std::max(antim, (lhs - rhs).norm());
    }
  }
  report.add("star_antimultiplicative", antim,
             thr * std::max(1.0, s.norm() * s.norm()));

  // Hermitian symmetry of the Gram matrix
  double herm = (a.gram_hermitian() - a.gram_hermitian().adjoint()).norm();
  report.add("form_hermitian", herm, thr);

  // positive definiteness: smallest eigenvalue of the Hermitian Gram matrix
  Eigen::SelfAdjointEigenSolver<Matrix> es(
      (a.gram_hermitian() + a.gram_hermitian().adjoint()) / 2.0);
  double min_ev = es.eigenvalues().size() ? es.eigenvalues()(0) : 0.0;
  report.checks.push_back(
      {"form_positive_definite", min_ev > tol.eps_rank, min_ev, tol.eps_rank});
  return report;
}

Matrix class_functionals(const AlgebraSpec& a, const Tolerance& tol) {
  const int n = a.dim();
  std::vector<Vector> rows;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Vector diff = a.left_basis(i).col(j) - a.left_basis(j).col(i);
      if (diff.norm() > 0) rows.push_back(diff);
    }
  }
  Matrix constraints(rows.size(), n);
  for (std::size_t r = 0; r < rows.size(); ++r)
    constraints.row(r) = rows[r].transpose();
  return kernel(constraints, tol);
}

Matrix center(const AlgebraSpec& a, const Tolerance& tol) {
  const int n = a.dim();
  Matrix stacked(n * n, n);
  for (int i = 0; i < n; ++i)
    stacked.middleRows(i * n, n) = a.left_basis(i) - a.right_basis(i);
  return kernel(stacked, tol);
}

double subspace_distance(const Matrix& a, const Matrix& b,
                         const Tolerance& tol) {
  Matrix qa = column_space(a, tol);
  Matrix qb = column_space(b, tol);
  if (qa.cols() != qb.cols()) return 1.0;
  if (qa.cols() == 0) return 0.0;
  // sin of the largest principal angle
  Eigen::BDCSVD<Matrix> svd(qa.adjoint() * qb);
  double smin = svd.singularValues()(svd.singularValues().size() - 1);
  smin = std::min(1.0, std::max(-1.0, smin));
  return std::sqrt(std::max(0.0, 1.0 - smin * smin));
}

}  // namespace frobstar
