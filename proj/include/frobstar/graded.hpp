#pragma once

#include <optional>

#include "frobstar/group.hpp"
#include "frobstar/semisimple.hpp"

namespace frobstar {

/// Z/mZ-graded Frobenius star-algebra: a grade per basis vector, lambda
/// supported on grade 0, star mapping grade r to grade -r.
class GradedFrobeniusStarAlgebra {
 public:
  GradedFrobeniusStarAlgebra() = default;
  GradedFrobeniusStarAlgebra(FrobeniusStarAlgebra base, int m,
                             std::vector<int> grades);

  const FrobeniusStarAlgebra& base() const { return base_; }
  int dim() const { return base_.dim(); }
  int modulus() const { return m_; }
  int grade(int i) const { return grades_[i]; }
  const std::vector<int>& grades() const { return grades_; }
  const std::vector<int>& indices_of_grade(int r) const;
  Complex omega() const;  // e^{2 pi i / m}

  /// Grade-0 subalgebra with lambda and star restricted, plus the index map
  /// from subalgebra basis positions to positions in the full basis.
  const FrobeniusStarAlgebra& grade0(const Tolerance& tol) const;
  const std::vector<int>& grade0_indices() const { return by_grade_[0]; }

 private:
  FrobeniusStarAlgebra base_;
  int m_ = 1;
  std::vector<int> grades_;
  std::vector<std::vector<int>> by_grade_;
  mutable std::optional<FrobeniusStarAlgebra> grade0_;
};

/// C[G ⋊ Z/mZ] with grade(g, r) = r.
GradedFrobeniusStarAlgebra graded_group_algebra(const FiniteGroup& g,
                                                const GroupAutomorphism& sigma,
                                                const Tolerance& tol);

/// All grading axioms: product grading, star grading, lambda support, unit in
/// grade 0, plus re-validation of the grade-0 part as a Frobenius star-algebra.
ValidationReport validate_graded(const GradedFrobeniusStarAlgebra& a,
                                 const Tolerance& tol);

/// A ⊗_{A0} M realized concretely as a quotient of the free space, with
/// inherited grading and the action of every basis element of A.
struct InducedModule {
  int dim = 0;
  std::vector<Matrix> action;          // per basis element of A
  std::vector<Matrix> component;       // orthonormal basis of each grade part
  std::vector<int> component_dim;      // per grade r
};

InducedModule induce(const GradedFrobeniusStarAlgebra& a,
                     const SimpleModuleData& m0, const Tolerance& tol);

/// Iso-class of the grade-r component of the induced module, as an index into
/// `simples0` (the canonical simple list of A0); nullopt when the component is
/// zero.
std::optional<int> partial_action(const GradedFrobeniusStarAlgebra& a,
                                  const std::vector<SimpleModuleData>& simples0,
                                  int source_index, int r, const Tolerance& tol);

/// Indices (into simples0) of the simples fixed by the partial action for
/// every grade.
std::vector<int> invariant_simples(const GradedFrobeniusStarAlgebra& a,
                                   const std::vector<SimpleModuleData>& simples0,
                                   const Tolerance& tol);

struct Extension {
  Vector character;  // on the full algebra basis
  int dim = 0;
  Complex c = 0.0;        // alpha_{M~} = c e_{M~}
  Vector idempotent;      // e_{M~} in A
  int simple_index = -1;  // position in the canonical simple list of A
};

struct ExtensionFamily {
  int source_index = -1;             // invariant simple of A0
  std::vector<Extension> extensions;  // m entries; [r] has grade-s char scaled by omega^{sr}
  Complex omega = 1.0;
  int anchor_index = -1;  // grade-1 basis element used for the canonical choice
};

/// The m pairwise non-isomorphic simple A-constituents of the induced module
/// of an invariant simple, ordered so that extension r has grade-1 character
/// omega^r times that of the canonical extension 0.
ExtensionFamily extensions(const GradedFrobeniusStarAlgebra& a,
                           const std::vector<SimpleModuleData>& simples0,
                           const std::vector<SimpleModuleData>& simples_full,
                           int source_index, const Tolerance& tol);

/// Twisted character: the canonical extension's character restricted to the
/// grade-1 basis vectors, zero elsewhere.
struct TwistedCharacter {
  Vector values;  // full-basis functional, supported on grade 1
  int source_index = -1;
  int extension_choice = 0;
};

TwistedCharacter twisted_character(const GradedFrobeniusStarAlgebra& a,
                                   const ExtensionFamily& family,
                                   int choice = 0);

/// Orthonormal basis of {gamma on A1 : gamma(a x) = gamma(x a) for a in A0},
/// as full-basis functional coefficient columns supported on grade 1.
Matrix twisted_class_functionals(const GradedFrobeniusStarAlgebra& a,
                                 const Tolerance& tol);

/// Per-grade centralizer Z_{A0}(A_r), as element coefficient columns.
std::vector<Matrix> centralizer(const GradedFrobeniusStarAlgebra& a,
                                const Tolerance& tol);

struct TwistedReport {
  std::vector<int> invariant;            // indices into simples0
  std::vector<ExtensionFamily> families;
  Matrix twisted_gram;                   // <phi^{-1} chi~_M, phi^{-1} chi~_N>
  std::vector<Complex> diagonal_target;  // |c_M~|^2 <e_M~,e_M~> / m
  Matrix graded_component_gram;          // rows (M,r): <alpha_M^(r), alpha_M^(r)>
  std::vector<Vector> vandermonde_solution;  // per invariant M
  ValidationReport checks;
};

/// Full machine check of the twisted orthogonality relations: graded component
/// norms, cross-term vanishing, the diagonal formula, basis property of the
/// twisted characters, and the Vandermonde cross-check.
TwistedReport verify_twisted_orthogonality(const GradedFrobeniusStarAlgebra& a,
                                           const Tolerance& tol);

}  // namespace frobstar
