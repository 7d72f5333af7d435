#pragma once

#include "frobstar/numerics.hpp"

namespace frobstar {

/// One pass/fail entry of a validation run. `measured` is the residual that
/// was compared against `threshold`.
struct CheckResult {
  std::string name;
  bool pass = false;
  double measured = 0.0;
  double threshold = 0.0;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  void add(const std::string& name, double measured, double threshold) {
    checks.push_back({name, measured <= threshold, measured, threshold});
  }
};

/// Finite-dimensional associative unital algebra given by structure constants:
/// b_i * b_j = sum_k c[i][j][k] b_k.
class AlgebraSpec {
 public:
  AlgebraSpec() = default;
  AlgebraSpec(int dim, std::vector<std::string> labels,
              std::vector<Matrix> left_mult_basis, Vector unit);

  int dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Vector& unit() const { return unit_; }

  /// Matrix of left multiplication by basis element i: (L_i)(k,j) = c[i][j][k].
  const Matrix& left_basis(int i) const { return left_[i]; }
  /// Matrix of right multiplication by basis element j: x -> x * b_j.
  const Matrix& right_basis(int j) const { return right_[j]; }

  Complex structure(int i, int j, int k) const { return left_[i](k, j); }

  Matrix left_mult(const Vector& x) const;   // y -> x*y
  Matrix right_mult(const Vector& y) const;  // x -> x*y
  Vector multiply(const Vector& x, const Vector& y) const;

  /// Associativity and two-sided unit, as residual checks.
  ValidationReport validate(const Tolerance& tol) const;

 private:
  int dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<Matrix> left_;
  std::vector<Matrix> right_;
  Vector unit_;
};

/// Linear functional on the algebra, stored as its values on the basis.
struct LinearFunctional {
  Vector values;
  Complex operator()(const Vector& x) const { return values.cwiseProduct(x).sum(); }
};

/// Symmetric Frobenius algebra with conjugate-linear involution and positive
/// definite form <a,b> = lambda(a b*). Caches the bilinear Gram matrix, the
/// dual basis and the Hermitian Gram matrix after construction.
class FrobeniusStarAlgebra {
 public:
  FrobeniusStarAlgebra() = default;
  /// `star` is the matrix S of the involution: (x)* = S * conj(x).
  FrobeniusStarAlgebra(AlgebraSpec spec, Vector lambda, Matrix star,
                       const Tolerance& tol);

  const AlgebraSpec& spec() const { return spec_; }
  int dim() const { return spec_.dim(); }
  const Vector& lambda_values() const { return lambda_; }
  const Matrix& star_matrix() const { return star_; }

  Complex lambda(const Vector& x) const { return lambda_.cwiseProduct(x).sum(); }
  Vector star(const Vector& x) const { return star_ * x.conjugate(); }
  Vector multiply(const Vector& x, const Vector& y) const {
    return spec_.multiply(x, y);
  }
  /// Positive definite Hermitian form <x,y> = lambda(x y*).
  Complex inner(const Vector& x, const Vector& y) const;

  /// Gram matrix of the bilinear form: G(i,j) = lambda(b_i b_j).
  const Matrix& gram_bilinear() const { return gram_bilinear_; }
  /// Gram matrix of the Hermitian form: H(i,j) = <b_i, b_j>.
  const Matrix& gram_hermitian() const { return gram_hermitian_; }
  bool degenerate() const { return degenerate_; }

  /// Columns are the phi-dual basis: lambda(dual_i * b_j) = delta_ij.
  const Matrix& dual_basis() const;

  /// phi(x) = lambda(- . x) as a functional.
  LinearFunctional phi(const Vector& x) const;
  /// phi^{-1}(gamma) = sum_i gamma(b_i) dual_i (Frobenius isomorphism inverse).
  Vector phi_inverse(const LinearFunctional& gamma) const;

 private:
  AlgebraSpec spec_;
  Vector lambda_;
  Matrix star_;
  Matrix gram_bilinear_;
  Matrix gram_hermitian_;
  Matrix dual_;  // = G^{-T}, columns are dual basis coefficients
  bool degenerate_ = true;
};

/// Full axiom run: associativity, unit, lambda class-functional
/// property, star axioms, Hermitian positive definiteness.
ValidationReport validate_frobenius_star(const FrobeniusStarAlgebra& a,
                                         const Tolerance& tol);

/// Orthonormal basis of the space of class functionals gamma(ab) = gamma(ba),
/// as columns of functional coefficient vectors.
Matrix class_functionals(const AlgebraSpec& a, const Tolerance& tol);

/// Basis of the center {z : z b_i = b_i z}, as columns of element coefficients.
Matrix center(const AlgebraSpec& a, const Tolerance& tol);

/// Largest principal angle distance between the column spans of two matrices.
double subspace_distance(const Matrix& a, const Matrix& b, const Tolerance& tol);

}  // namespace frobstar
