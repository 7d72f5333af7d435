#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace frobstar {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;

struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotCommuting : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SplitFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegenerateForm : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct StructureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Global comparison policy. Every mathematical zero/equality decision in the
/// library goes through one of these thresholds; raw == on floating point is
/// never used for such decisions.
struct Tolerance {
  double eps_eq = 1e-9;    // absolute equality threshold
  double eps_rank = 1e-9;  // relative singular-value cutoff for rank decisions
  std::uint64_t seed = 0;  // master seed for randomized splitting
};

bool is_finite(const Matrix& m);

/// Numerical rank via singular values, cutoff eps_rank * sigma_max.
int numerical_rank(const Matrix& m, const Tolerance& tol);

/// Orthonormal basis of the null space of m (columns). Empty matrix (rows x 0)
/// when m is injective.
Matrix kernel(const Matrix& m, const Tolerance& tol);

/// Orthonormal basis of the column space of m.
Matrix column_space(const Matrix& m, const Tolerance& tol);

/// Fixes the free phase of each column: the largest-magnitude entry is made
/// real and positive. Used to make decompositions reproducible.
void canonicalize_columns(Matrix& m);

struct Eigenspace {
  Matrix basis;                       // orthonormal columns
  std::vector<Complex> eigenvalues;   // one entry per input operator
  Matrix projector;                   // spectral (possibly oblique) projector
};

/// Simultaneous eigenspace decomposition of pairwise commuting operators.
/// Diagonalizes a random real-coefficient linear combination and redraws when
/// the eigenvalue clusters are not cleanly separated. Output is canonically
/// sorted by lexicographic eigenvalue tuple, ties broken by basis entries.
std::vector<Eigenspace> eig_commutative(const std::vector<Matrix>& ops,
                                        const Tolerance& tol);

/// Tolerance-mediated lexicographic comparison of complex vectors (re before
/// im per entry). Returns <0, 0, >0.
int lex_compare(const Vector& a, const Vector& b, double eps);

}  // namespace frobstar
