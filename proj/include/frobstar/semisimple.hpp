#pragma once

#include "frobstar/algebra.hpp"

namespace frobstar {

/// One Wedderburn block of a Frobenius star-algebra.
struct SimpleModuleData {
  Vector idempotent;        // primitive central idempotent e_M
  int dim = 0;              // d_M
  Vector character;         // chi_M on the algebra basis
  Complex c = 0.0;          // phi^{-1}(chi_M) = c * e_M
  std::vector<Matrix> rep;  // empty until compute_representation is called
};

/// Primitive central orthogonal idempotents, found by simultaneously splitting
/// the multiplication operators of the center acting on itself.
std::vector<Vector> central_idempotents(const FrobeniusStarAlgebra& a,
                                        const Tolerance& tol);

/// Idempotents + dimensions + characters + c constants, canonically ordered by
/// (dim, lexicographic character vector). Representations are not filled in.
std::vector<SimpleModuleData> simple_modules(const FrobeniusStarAlgebra& a,
                                             const Tolerance& tol);

/// Explicit irreducible matrix representation of one simple module: the left
/// action of each basis element on a minimal left ideal inside A e_M.
void compute_representation(const FrobeniusStarAlgebra& a, SimpleModuleData& m,
                            const Tolerance& tol);

struct OrthogonalityReport {
  Matrix gram;                  // <alpha_M, alpha_N> for all simples
  std::vector<Complex> c;       // c_M per simple
  std::vector<Complex> e_norm;  // <e_M, e_M>
  ValidationReport checks;
};

/// Machine check of the untwisted orthogonality relations: off-diagonal
/// vanishing, diagonal |c_M|^2 <e_M,e_M>, and that the characters form a basis
/// of the class functionals.
OrthogonalityReport verify_orthogonality(const FrobeniusStarAlgebra& a,
                                         const std::vector<SimpleModuleData>& simples,
                                         const Tolerance& tol);

}  // namespace frobstar
