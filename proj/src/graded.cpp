#include "frobstar/graded.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace frobstar {

GradedFrobeniusStarAlgebra::GradedFrobeniusStarAlgebra(FrobeniusStarAlgebra base,
                                                       int m,
                                                       std::vector<int> grades)
    : base_(std::move(base)), m_(m), grades_(std::move(grades)) {
  if (m_ < 1) throw InvalidInput("graded algebra: m must be positive");
  if (static_cast<int>(grades_.size()) != base_.dim())
    throw InvalidInput("graded algebra: grade count != dimension");
  by_grade_.assign(m_, {});
  for (int i = 0; i < base_.dim(); ++i) {
    if (grades_[i] < 0 || grades_[i] >= m_)
      throw InvalidInput("graded algebra: grade out of range");
    by_grade_[grades_[i]].push_back(i);
  }
}

const std::vector<int>& GradedFrobeniusStarAlgebra::indices_of_grade(int r) const {
  return by_grade_[((r % m_) + m_) % m_];
}

Complex GradedFrobeniusStarAlgebra::omega() const {
  return std::polar(1.0, 2.0 * std::numbers::pi / m_);
}

const FrobeniusStarAlgebra& GradedFrobeniusStarAlgebra::grade0(
    const Tolerance& tol) const {
  if (!grade0_) {
    const auto& idx = by_grade_[0];
    const int n0 = static_cast<int>(idx.size());
    std::vector<Matrix> left(n0, Matrix::Zero(n0, n0));
    std::vector<std::string> labels;
    for (int i = 0; i < n0; ++i) {
      labels.push_back(base_.spec().labels()[idx[i]]);
      for (int j = 0; j < n0; ++j)
        for (int k = 0; k < n0; ++k)
          left[i](k, j) = base_.spec().structure(idx[i], idx[j], idx[k]);
    }
    Vector unit(n0), lambda0(n0);
    Matrix star0(n0, n0);
    for (int i = 0; i < n0; ++i) {
      unit(i) = base_.spec().unit()(idx[i]);
      lambda0(i) = base_.lambda_values()(idx[i]);
      for (int j = 0; j < n0; ++j)
        star0(i, j) = base_.star_matrix()(idx[i], idx[j]);
    }
    grade0_ = FrobeniusStarAlgebra(
        AlgebraSpec(n0, std::move(labels), std::move(left), std::move(unit)),
        std::move(lambda0), std::move(star0), tol);
  }
  return *grade0_;
}

GradedFrobeniusStarAlgebra graded_group_algebra(const FiniteGroup& g,
                                                const GroupAutomorphism& sigma,
                                                const Tolerance& tol) {
  FiniteGroup big = semidirect_product(g, sigma);
  FrobeniusStarAlgebra alg = group_algebra(big, tol);
  std::vector<int> grades(big.order);
  for (int i = 0; i < big.order; ++i) grades[i] = i / g.order;
  return GradedFrobeniusStarAlgebra(std::move(alg), sigma.m, std::move(grades));
}

ValidationReport validate_graded(const GradedFrobeniusStarAlgebra& a,
                                 const Tolerance& tol) {
  const auto& base = a.base();
  const int n = a.dim();
  const int m = a.modulus();
  ValidationReport report = validate_frobenius_star(base, tol);

  // products land in the sum grade
  double prod_res = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int target = (a.grade(i) + a.grade(j)) % m;
      Vector prod = base.spec().left_basis(i).col(j);
      for (int k = 0; k < n; ++k)
        if (a.grade(k) != target) prod_res = std::max(prod_res, std::abs(prod(k)));
    }
  }
  report.add("grading_of_products", prod_res, tol.eps_eq);

  // star maps grade r to grade -r
  double star_res = 0.0;
  for (int i = 0; i < n; ++i) {
    int target = ((m - a.grade(i)) % m);
    for (int k = 0; k < n; ++k)
      if (a.grade(k) != target)
        star_res = std::max(star_res, std::abs(base.star_matrix()(k, i)));
  }
  report.add("grading_of_star", star_res, tol.eps_eq);

  // lambda supported on grade 0
  double lam_res = 0.0;
  for (int i = 0; i < n; ++i)
    if (a.grade(i) != 0)
      lam_res = std::max(lam_res, std::abs(base.lambda_values()(i)));
  report.add("lambda_grade0_support", lam_res, tol.eps_eq);

  // unit in grade 0
  double unit_res = 0.0;
  for (int i = 0; i < n; ++i)
    if (a.grade(i) != 0)
      unit_res = std::max(unit_res, std::abs(base.spec().unit()(i)));
  report.add("unit_in_grade0", unit_res, tol.eps_eq);

  // grade-0 part must itself be a Frobenius star-algebra
  ValidationReport sub = validate_frobenius_star(a.grade0(tol), tol);
  for (auto& c : sub.checks) {
    c.name = "grade0_" + c.name;
    report.checks.push_back(c);
  }
  return report;
}

namespace {

// v, viewed as a (d x n) column-major block, maps to vec(V * L^T): the left
// action of the algebra element with left-multiplication matrix L on the free
// space A (x) M.
Matrix apply_free_action(const Matrix& l, const Matrix& vectors, int d) {
  const int n = static_cast<int>(l.rows());
  Matrix out(vectors.rows(), vectors.cols());
  for (Eigen::Index c = 0; c < vectors.cols(); ++c) {
    Eigen::Map<const Matrix> v(vectors.col(c).data(), d, n);
    Matrix w = v * l.transpose();
    out.col(c) = Eigen::Map<const Vector>(w.data(), d * n);
  }
  return out;
}

}  // namespace

InducedModule induce(const GradedFrobeniusStarAlgebra& a,
                     const SimpleModuleData& m0, const Tolerance& tol) {
  if (m0.rep.empty())
    throw InvalidInput("induce: source module needs an explicit representation");
  const int n = a.dim();
  const int m = a.modulus();
  const int d = m0.dim;
  const auto& g0 = a.grade0_indices();
  const int n0 = static_cast<int>(g0.size());
  const int big = n * d;
  auto flat = [&](int b, int j) { return b * d + j; };

  // relations (b a) (x) v - b (x) (rho(a) v), spanning the tensor ideal
  Matrix relations(big, static_cast<Eigen::Index>(n) * n0 * d);
  Eigen::Index col = 0;
  for (int b = 0; b < n; ++b) {
    for (int p = 0; p < n0; ++p) {
      Vector prod = a.base().spec().left_basis(b).col(g0[p]);  // b * a
      for (int j = 0; j < d; ++j, ++col) {
        Vector rel = Vector::Zero(big);
        for (int k = 0; k < n; ++k)
          if (prod(k) != Complex(0)) rel(flat(k, j)) += prod(k);
        for (int l = 0; l < d; ++l) rel(flat(b, l)) -= m0.rep[p](l, j);
        relations.col(col) = rel;
      }
    }
  }
  Matrix rel_basis = column_space(relations, tol);
  Matrix q = kernel(Matrix(rel_basis.adjoint()), tol);  // quotient coordinates
  InducedModule ind;
  ind.dim = static_cast<int>(q.cols());

  ind.action.resize(n);
  for (int c = 0; c < n; ++c) {
    Matrix tq = apply_free_action(a.base().spec().left_basis(c), q, d);
    ind.action[c] = q.adjoint() * tq;
  }

  // inherited grading: grade of b (x) v_j is grade(b)
  ind.component.resize(m);
  ind.component_dim.resize(m);
  for (int r = 0; r < m; ++r) {
    const auto& idx = a.indices_of_grade(r);
    Matrix cols(ind.dim, static_cast<Eigen::Index>(idx.size()) * d);
    Eigen::Index cc = 0;
    for (int b : idx)
      for (int j = 0; j < d; ++j, ++cc) cols.col(cc) = q.row(flat(b, j)).adjoint();
    ind.component[r] = column_space(cols, tol);
    ind.component_dim[r] = static_cast<int>(ind.component[r].cols());
  }
  int total = 0;
  for (int r = 0; r < m; ++r) total += ind.component_dim[r];
  if (total != ind.dim)
    throw StructureError("induce: grading does not decompose the quotient");
  if (ind.component_dim[0] != d)
    throw StructureError("induce: grade-0 component does not match the source");

  // null socle must vanish: A_{-r} maps each nonzero component injectively
  // into grade 0
  for (int r = 1; r < m; ++r) {
    if (ind.component_dim[r] == 0) continue;
    const auto& neg = a.indices_of_grade(-r);
    const Matrix& b0 = ind.component[0];
    Matrix stacked(static_cast<Eigen::Index>(neg.size()) * b0.cols(),
                   ind.component_dim[r]);
    Eigen::Index row = 0;
    for (int c : neg) {
      stacked.middleRows(row, b0.cols()) =
          b0.adjoint() * ind.action[c] * ind.component[r];
      row += b0.cols();
    }
    if (numerical_rank(stacked, tol) != ind.component_dim[r])
      throw StructureError("induce: nonzero null socle detected");
  }
  return ind;
}

namespace {

/// A0-character of an A0-invariant subspace of an induced module.
Vector component_character(const GradedFrobeniusStarAlgebra& a,
                           const InducedModule& ind, const Matrix& basis) {
  const auto& g0 = a.grade0_indices();
  Vector chi(g0.size());
  for (std::size_t p = 0; p < g0.size(); ++p)
    chi(static_cast<Eigen::Index>(p)) =
        (basis.adjoint() * ind.action[g0[p]] * basis).trace();
  return chi;
}

int match_character(const std::vector<SimpleModuleData>& simples,
                    const Vector& chi, double eps) {
  for (std::size_t t = 0; t < simples.size(); ++t)
    if ((simples[t].character - chi).norm() < eps)
      return static_cast<int>(t);
  return -1;
}

}  // namespace

std::optional<int> partial_action(const GradedFrobeniusStarAlgebra& a,
                                  const std::vector<SimpleModuleData>& simples0,
                                  int source_index, int r,
                                  const Tolerance& tol) {
  InducedModule ind = induce(a, simples0[source_index], tol);
  int rr = ((r % a.modulus()) + a.modulus()) % a.modulus();
  if (ind.component_dim[rr] == 0) return std::nullopt;
  Vector chi = component_character(a, ind, ind.component[rr]);
  int t = match_character(simples0, chi, 1e-6 * std::max(1.0, chi.norm()));
  if (t < 0)
    throw StructureError("partial_action: component character matches no simple");
  return t;
}

std::vector<int> invariant_simples(const GradedFrobeniusStarAlgebra& a,
                                   const std::vector<SimpleModuleData>& simples0,
                                   const Tolerance& tol) {
  std::vector<int> out;
  for (std::size_t s = 0; s < simples0.size(); ++s) {
    InducedModule ind = induce(a, simples0[s], tol);
    bool invariant = true;
    for (int r = 0; r < a.modulus() && invariant; ++r) {
      if (ind.component_dim[r] == 0) {
        invariant = false;
        break;
      }
      Vector chi = component_character(a, ind, ind.component[r]);
      int t = match_character(simples0, chi, 1e-6 * std::max(1.0, chi.norm()));
      if (t != static_cast<int>(s)) invariant = false;
    }
    if (invariant) out.push_back(static_cast<int>(s));
  }
  return out;
}

ExtensionFamily extensions(const GradedFrobeniusStarAlgebra& a,
                           const std::vector<SimpleModuleData>& simples0,
                           const std::vector<SimpleModuleData>& simples_full,
                           int source_index, const Tolerance& tol) {
  const int n = a.dim();
  const int m = a.modulus();
  const int d = simples0[source_index].dim;
  InducedModule ind = induce(a, simples0[source_index], tol);
  if (ind.dim != m * d)
    throw StructureError("extensions: induced module is not m*d dimensional");

  ExtensionFamily family;
  family.source_index = source_index;
  family.omega = a.omega();

  for (std::size_t s = 0; s < simples_full.size(); ++s) {
    Matrix act_e = Matrix::Zero(ind.dim, ind.dim);
    for (int c = 0; c < n; ++c) {
      Complex coeff = simples_full[s].idempotent(c);
      if (coeff != Complex(0)) act_e += coeff * ind.action[c];
    }
    if (act_e.norm() < 1e-8) continue;  // this simple does not occur
    Matrix basis = column_space(act_e, tol);
    if (basis.cols() == 0) continue;
    if (static_cast<int>(basis.cols()) != d)
      throw StructureError("extensions: constituent has wrong dimension");
    Extension ext;
    ext.dim = d;
    ext.character.resize(n);
    for (int c = 0; c < n; ++c)
      ext.character(c) = (basis.adjoint() * ind.action[c] * basis).trace();
    if ((ext.character - simples_full[s].character).norm() >
        1e-6 * std::max(1.0, ext.character.norm()))
      throw StructureError("extensions: constituent character mismatch");
    ext.c = simples_full[s].c;
    ext.idempotent = simples_full[s].idempotent;
    ext.simple_index = static_cast<int>(s);
    family.extensions.push_back(std::move(ext));
  }
  if (static_cast<int>(family.extensions.size()) != m)
    throw StructureError("extensions: constituent count != m");

  // anchor: first grade-1 basis element on which the characters do not vanish
  const auto& g1 = a.indices_of_grade(1);
  for (int i : g1) {
    if (std::abs(family.extensions[0].character(i)) > 1e-8) {
      family.anchor_index = i;
      break;
    }
  }
  if (family.anchor_index < 0)
    throw StructureError("extensions: characters vanish on all of grade 1");

  // canonical extension: argument of the anchor value in [0, 2pi/m)
  const double two_pi = 2.0 * std::numbers::pi;
  auto norm_arg = [&](Complex v) {
    double t = std::arg(v);
    if (t < 0) t += two_pi;
    if (t > two_pi - 1e-9) t = 0.0;
    return t;
  };
  int canonical = 0;
  double best = norm_arg(family.extensions[0].character(family.anchor_index));
  for (std::size_t i = 1; i < family.extensions.size(); ++i) {
    double t = norm_arg(family.extensions[i].character(family.anchor_index));
    if (t < best) {
      best = t;
      canonical = static_cast<int>(i);
    }
  }

  // order by the power of omega relative to the canonical choice
  Complex v0 = family.extensions[canonical].character(family.anchor_index);
  std::vector<Extension> ordered(m);
  std::vector<char> used(m, 0);
  for (auto& ext : family.extensions) {
    Complex ratio = ext.character(family.anchor_index) / v0;
    int rbest = -1;
    double dist = 1e9;
    Complex w = 1.0;
    for (int r = 0; r < m; ++r, w *= family.omega) {
      if (std::abs(ratio - w) < dist) {
        dist = std::abs(ratio - w);
        rbest = r;
      }
    }
    if (dist > 1e-6 || used[rbest])
      throw StructureError("extensions: characters are not omega-shifts of each other");
    used[rbest] = 1;
    ordered[rbest] = std::move(ext);
  }
  family.extensions = std::move(ordered);
  return family;
}

TwistedCharacter twisted_character(const GradedFrobeniusStarAlgebra& a,
                                   const ExtensionFamily& family, int choice) {
  TwistedCharacter tc;
  tc.source_index = family.source_index;
  tc.extension_choice = choice;
  tc.values = Vector::Zero(a.dim());
  for (int i : a.indices_of_grade(1))
    tc.values(i) = family.extensions[choice].character(i);
  return tc;
}

Matrix twisted_class_functionals(const GradedFrobeniusStarAlgebra& a,
                                 const Tolerance& tol) {
  const int n = a.dim();
  const auto& g0 = a.grade0_indices();
  const auto& g1 = a.indices_of_grade(1);
  const int d1 = static_cast<int>(g1.size());
  std::vector<int> pos(n, -1);
  for (int i = 0; i < d1; ++i) pos[g1[i]] = i;

  std::vector<Vector> rows;
  for (int ga : g0) {
    for (int gx : g1) {
      // a*x - x*a, both lying in grade 1
      Vector diff = a.base().spec().left_basis(ga).col(gx) -
                    a.base().spec().right_basis(ga).col(gx);
      Vector row = Vector::Zero(d1);
      bool nonzero = false;
      for (int k = 0; k < n; ++k) {
        if (diff(k) == Complex(0)) continue;
        if (pos[k] < 0)
          throw StructureError("twisted_class_functionals: product left grade 1");
        row(pos[k]) += diff(k);
        nonzero = true;
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  }
  Matrix constraints(rows.size(), d1);
  for (std::size_t r = 0; r < rows.size(); ++r)
    constraints.row(r) = rows[r].transpose();
  Matrix small = kernel(constraints, tol);  // d1 x k

  Matrix full = Matrix::Zero(n, small.cols());
  for (int i = 0; i < d1; ++i) full.row(g1[i]) = small.row(i);
  return full;
}

std::vector<Matrix> centralizer(const GradedFrobeniusStarAlgebra& a,
                                const Tolerance& tol) {
  const int n = a.dim();
  const int m = a.modulus();
  const auto& g0 = a.grade0_indices();
  std::vector<Matrix> out(m);
  for (int r = 0; r < m; ++r) {
    const auto& gr = a.indices_of_grade(r);
    const int dr = static_cast<int>(gr.size());
    Matrix stacked(static_cast<Eigen::Index>(g0.size()) * n, dr);
    Eigen::Index row = 0;
    for (int ga : g0) {
      Matrix comm = a.base().spec().left_basis(ga) - a.base().spec().right_basis(ga);
      for (int c = 0; c < dr; ++c) stacked.block(row, c, n, 1) = comm.col(gr[c]);
      row += n;
    }
    Matrix small = kernel(stacked, tol);
    Matrix full = Matrix::Zero(n, small.cols());
    for (int i = 0; i < dr; ++i) full.row(gr[i]) = small.row(i);
    out[r] = std::move(full);
  }
  return out;
}

TwistedReport verify_twisted_orthogonality(const GradedFrobeniusStarAlgebra& a,
                                           const Tolerance& tol) {
  TwistedReport rep;
  const int n = a.dim();
  const int m = a.modulus();
  const auto& base = a.base();
  const auto& a0 = a.grade0(tol);

  auto simples0 = simple_modules(a0, tol);
  for (auto& s : simples0) compute_representation(a0, s, tol);
  auto simples_full = simple_modules(base, tol);

  rep.invariant = invariant_simples(a, simples0, tol);
  const int k = static_cast<int>(rep.invariant.size());
  for (int s : rep.invariant)
    rep.families.push_back(extensions(a, simples0, simples_full, s, tol));

  // alpha_{M~} and its graded components
  std::vector<Vector> alpha_full(k);
  std::vector<std::vector<Vector>> alpha_comp(k, std::vector<Vector>(m));
  std::vector<Vector> tw_chars(k);
  rep.diagonal_target.resize(k);
  for (int i = 0; i < k; ++i) {
    const Extension& ext = rep.families[i].extensions[0];
    alpha_full[i] = base.phi_inverse(LinearFunctional{ext.character});
    for (int r = 0; r < m; ++r) {
      Vector comp = Vector::Zero(n);
      for (int b : a.indices_of_grade(r)) comp(b) = alpha_full[i](b);
      alpha_comp[i][r] = std::move(comp);
    }
    tw_chars[i] = twisted_character(a, rep.families[i]).values;
    Complex enorm = base.inner(ext.idempotent, ext.idempotent);
    rep.diagonal_target[i] = std::norm(ext.c) * enorm / double(m);
  }

  // each graded component norm equals the shared diagonal value
  rep.graded_component_gram.resize(k, m);
  double norm_res = 0.0;
  for (int i = 0; i < k; ++i) {
    for (int r = 0; r < m; ++r) {
      Complex x = base.inner(alpha_comp[i][r], alpha_comp[i][r]);
      rep.graded_component_gram(i, r) = x;
      norm_res = std::max(norm_res, std::abs(x - rep.diagonal_target[i]));
    }
  }
  rep.checks.add("component_norms_match_diagonal", norm_res, 1e-6 * std::max(1.0, double(n)));

  // cross terms vanish gradewise
  double cross_res = 0.0;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      for (int r = 0; r < m; ++r)
        cross_res = std::max(cross_res,
                       std::abs(base.inner(alpha_comp[i][r], alpha_comp[j][r])));
    }
  rep.checks.add("component_cross_terms_vanish", cross_res, 1e-6 * std::max(1.0, double(n)));

  // twisted Gram must be diagonal with the predicted values
  rep.twisted_gram.resize(k, k);
  double diag_res = 0.0, off_res = 0.0;
  for (int i = 0; i < k; ++i) {
    Vector ai = base.phi_inverse(LinearFunctional{tw_chars[i]});
    for (int j = 0; j < k; ++j) {
      Vector aj = base.phi_inverse(LinearFunctional{tw_chars[j]});
      rep.twisted_gram(i, j) = base.inner(ai, aj);
      if (i == j)
        diag_res = std::max(
            diag_res, std::abs(rep.twisted_gram(i, i) - rep.diagonal_target[i]));
      else
        off_res = std::max(off_res, std::abs(rep.twisted_gram(i, j)));
    }
  }
  rep.checks.add("twisted_gram_diagonal", diag_res, 1e-6 * std::max(1.0, double(n)));
  rep.checks.add("twisted_gram_off_diagonal", off_res, 1e-6 * std::max(1.0, double(n)));

  // twisted characters form a basis of the twisted class functionals
  Matrix tw_cf = twisted_class_functionals(a, tol);
  rep.checks.add("count_vs_twisted_cf_dim",
                 std::abs(k - static_cast<int>(tw_cf.cols())), 0.5);
  Matrix char_mat(n, k);
  for (int i = 0; i < k; ++i) char_mat.col(i) = tw_chars[i];
  if (k > 0) {
    Eigen::BDCSVD<Matrix> svd(char_mat);
    double smin = svd.singularValues()(svd.singularValues().size() - 1);
    rep.checks.checks.push_back(
        {"twisted_characters_full_rank", smin > 1e-6, smin, 1e-6});
    rep.checks.add("twisted_characters_span_cf",
                   subspace_distance(char_mat, tw_cf, tol), 1e-6);
  }

  // phi^{-1} of the twisted class functionals is Z_{A0}(A_{-1})
  auto zr = centralizer(a, tol);
  const Matrix& z_minus1 = zr[((m - 1) % m)];
  Matrix phi_inv_cf(n, tw_cf.cols());
  for (Eigen::Index c = 0; c < tw_cf.cols(); ++c)
    phi_inv_cf.col(c) = base.phi_inverse(LinearFunctional{tw_cf.col(c)});
  rep.checks.add("centralizer_duality_dim",
                 std::abs(double(tw_cf.cols()) - double(z_minus1.cols())), 0.5);
  if (tw_cf.cols() > 0)
    rep.checks.add("centralizer_duality_subspace",
                   subspace_distance(phi_inv_cf, z_minus1, tol), 1e-6);

  // Vandermonde cross-check: P x = (D, 0, ..., 0) must reproduce the measured
  // component norms
  double vres = 0.0;
  Complex omega = a.omega();
  for (int i = 0; i < k; ++i) {
    Matrix p(m, m);
    for (int r = 0; r < m; ++r)
      for (int s = 0; s < m; ++s) p(r, s) = std::pow(std::conj(omega), r * s);
    // row 0 sums all m component norms, so the data is the full norm
    // D = |c|^2 <e,e> = m * (per-component value)
    Vector rhs = Vector::Zero(m);
    rhs(0) = double(m) * rep.diagonal_target[i];
    Vector x = p.partialPivLu().solve(rhs);
    rep.vandermonde_solution.push_back(x);
    for (int r = 0; r < m; ++r)
      vres = std::max(vres, std::abs(x(r) - rep.graded_component_gram(i, r)));
  }
  rep.checks.add("vandermonde_consistency", vres, 1e-6 * std::max(1.0, double(n)));
  return rep;
}

}  // namespace frobstar
