#include "frobstar/group.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>

namespace frobstar {

bool FiniteGroup::is_abelian() const {
  for (int i = 0; i < order; ++i)
    for (int j = i + 1; j < order; ++j)
      if (cayley[i][j] != cayley[j][i]) return false;
  return true;
}

FiniteGroup group_from_cayley(std::vector<std::vector<int>> cayley,
                              std::vector<std::string> labels) {
  FiniteGroup g;
  g.order = static_cast<int>(cayley.size());
  if (g.order == 0) throw InvalidInput("group: empty Cayley table");
  for (const auto& row : cayley) {
    if (static_cast<int>(row.size()) != g.order)
      throw InvalidInput("group: Cayley table is not square");
    for (int v : row)
      if (v < 0 || v >= g.order)
        throw InvalidInput("group: Cayley entry out of range");
  }
  g.cayley = std::move(cayley);

  // identity
  g.identity = -1;
  for (int e = 0; e < g.order; ++e) {
    bool ok = true;
    for (int i = 0; i < g.order && ok; ++i)
      ok = g.cayley[e][i] == i && g.cayley[i][e] == i;
    if (ok) {
      g.identity = e;
      break;
    }
  }
  if (g.identity < 0) throw InvalidInput("group: no two-sided identity");

  // inverses
  g.inverse.assign(g.order, -1);
  for (int i = 0; i < g.order; ++i) {
    for (int j = 0; j < g.order; ++j) {
      if (g.cayley[i][j] == g.identity && g.cayley[j][i] == g.identity) {
        g.inverse[i] = j;
        break;
      }
    }
    if (g.inverse[i] < 0) throw InvalidInput("group: missing inverse");
  }

  // associativity, exhaustive
  for (int i = 0; i < g.order; ++i)
    for (int j = 0; j < g.order; ++j)
      for (int k = 0; k < g.order; ++k)
        if (g.cayley[g.cayley[i][j]][k] != g.cayley[i][g.cayley[j][k]])
          throw InvalidInput("group: Cayley table is not associative");

  if (labels.empty()) {
    for (int i = 0; i < g.order; ++i) labels.push_back("g" + std::to_string(i));
  }
  if (static_cast<int>(labels.size()) != g.order)
    throw InvalidInput("group: label count mismatch");
  g.labels = std::move(labels);
  return g;
}

namespace {

std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
  // (a ∘ b)(x) = a(b(x))
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
  return out;
}

}  // namespace

FiniteGroup group_from_permutations(
    const std::vector<std::vector<int>>& generators, int max_order) {
  std::size_t degree = 0;
  for (const auto& p : generators) degree = std::max(degree, p.size());
  if (degree == 0) degree = 1;
  std::vector<int> id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<int>(i);

  std::vector<std::vector<int>> gens;
  for (auto p : generators) {
    if (p.size() < degree) {
      // pad fixed points
      for (std::size_t i = p.size(); i < degree; ++i)
        p.push_back(static_cast<int>(i));
    }
    std::vector<char> seen(degree, 0);
    for (int v : p) {
      if (v < 0 || v >= static_cast<int>(degree) || seen[v])
        throw InvalidInput("group: generator is not a permutation");
      seen[v] = 1;
    }
    gens.push_back(std::move(p));
  }

  std::vector<std::vector<int>> elems{id};
  std::map<std::vector<int>, int> index{{id, 0}};
  std::queue<int> todo;
  todo.push(0);
  while (!todo.empty()) {
    int cur = todo.front();
    todo.pop();
    for (const auto& gen : gens) {
      auto prod = compose(elems[cur], gen);
      if (!index.count(prod)) {
        if (static_cast<int>(elems.size()) >= max_order)
          throw TooLarge("group: closure exceeds configured max order");
        index[prod] = static_cast<int>(elems.size());
        elems.push_back(prod);
        todo.push(index[prod]);
      }
    }
  }

  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> cayley(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      auto prod = compose(elems[i], elems[j]);
      auto it = index.find(prod);
      if (it == index.end())
        throw StructureError("group: closure not closed under product");
      cayley[i][j] = it->second;
    }
  }
  return group_from_cayley(std::move(cayley));
}

void validate_automorphism(const FiniteGroup& g, const GroupAutomorphism& sigma) {
  if (static_cast<int>(sigma.perm.size()) != g.order)
    throw InvalidInput("automorphism: permutation length != group order");
  if (sigma.m < 1) throw InvalidInput("automorphism: m must be positive");
  std::vector<char> seen(g.order, 0);
  for (int v : sigma.perm) {
    if (v < 0 || v >= g.order || seen[v])
      throw InvalidInput("automorphism: not a permutation");
    seen[v] = 1;
  }
  if (sigma.perm[g.identity] != g.identity)
    throw InvalidInput("automorphism: does not fix the identity");
  for (int i = 0; i < g.order; ++i)
    for (int j = 0; j < g.order; ++j)
      if (sigma.perm[g.mul(i, j)] != g.mul(sigma.perm[i], sigma.perm[j]))
        throw InvalidInput("automorphism: not multiplicative");
  // sigma^m = id (m may be a proper multiple of the order of sigma)
  std::vector<int> power(g.order);
  for (int i = 0; i < g.order; ++i) power[i] = i;
  for (int r = 0; r < sigma.m; ++r) {
    std::vector<int> next(g.order);
    for (int i = 0; i < g.order; ++i) next[i] = sigma.perm[power[i]];
    power = std::move(next);
  }
  for (int i = 0; i < g.order; ++i)
    if (power[i] != i) throw InvalidInput("automorphism: sigma^m is not the identity");
}

FiniteGroup semidirect_product(const FiniteGroup& g,
                               const GroupAutomorphism& sigma) {
  validate_automorphism(g, sigma);
  const int n = g.order;
  const int m = sigma.m;
  // sigma powers
  std::vector<std::vector<int>> pw(m, std::vector<int>(n));
  for (int i = 0; i < n; ++i) pw[0][i] = i;
  for (int r = 1; r < m; ++r)
    for (int i = 0; i < n; ++i) pw[r][i] = sigma.perm[pw[r - 1][i]];

  const int big = n * m;
  std::vector<std::vector<int>> cayley(big, std::vector<int>(big));
  std::vector<std::string> labels(big);
  for (int r = 0; r < m; ++r) {
    for (int i = 0; i < n; ++i) {
      labels[r * n + i] = "(" + g.labels[i] + ",s^" + std::to_string(r) + ")";
      for (int s = 0; s < m; ++s)
        for (int j = 0; j < n; ++j)
          cayley[r * n + i][s * n + j] =
              ((r + s) % m) * n + g.mul(i, pw[r][j]);
    }
  }
  return group_from_cayley(std::move(cayley), std::move(labels));
}

FrobeniusStarAlgebra group_algebra(const FiniteGroup& g, const Tolerance& tol) {
  const int n = g.order;
  std::vector<Matrix> left(n, Matrix::Zero(n, n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) left[i](g.mul(i, j), j) = 1.0;
  Vector unit = Vector::Unit(n, g.identity);
  AlgebraSpec spec(n, g.labels, std::move(left), unit);

  Vector lambda = Vector::Unit(n, g.identity);
  Matrix star = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) star(g.inv(i), i) = 1.0;
  return FrobeniusStarAlgebra(std::move(spec), std::move(lambda),
                              std::move(star), tol);
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<int> cls(g.order, -1);
  std::vector<std::vector<int>> classes;
  for (int i = 0; i < g.order; ++i) {
    if (cls[i] >= 0) continue;
    std::vector<int> orbit;
    int id = static_cast<int>(classes.size());
    for (int h = 0; h < g.order; ++h) {
      int c = g.mul(g.mul(h, i), g.inv(h));
      if (cls[c] < 0) {
        cls[c] = id;
        orbit.push_back(c);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(std::move(orbit));
  }
  return classes;
}

CharacterTable class_sum_character_oracle(const FiniteGroup& g,
                                          const Tolerance& tol) {
  CharacterTable t;
  t.classes = conjugacy_classes(g);
  const int k = static_cast<int>(t.classes.size());
  t.class_of.assign(g.order, -1);
  for (int c = 0; c < k; ++c)
    for (int e : t.classes[c]) t.class_of[e] = c;

  // class multiplication coefficients: C_i C_j = sum_k a[i][j][k] C_k,
  // a[i][j][k] counted at a fixed representative of class k
  std::vector<Matrix> ops(k, Matrix::Zero(k, k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      std::vector<int> count(k, 0);
      std::vector<long> hits(g.order, 0);
      for (int x : t.classes[i])
        for (int y : t.classes[j]) ++hits[g.mul(x, y)];
      for (int c = 0; c < k; ++c)
        count[c] = static_cast<int>(hits[t.classes[c][0]]);
      for (int c = 0; c < k; ++c) ops[i](c, j) = double(count[c]);
    }
  }

  auto spaces = eig_commutative(ops, tol);
  if (static_cast<int>(spaces.size()) != k)
    throw SplitFailure("character oracle: center did not split into lines");

  for (const auto& es : spaces) {
    // es.eigenvalues[i] = |C_i| chi(g_i) / d
    double inv_norm = 0.0;
    for (int i = 0; i < k; ++i)
      inv_norm += std::norm(es.eigenvalues[i]) / double(t.classes[i].size());
    double d = std::sqrt(double(g.order) / inv_norm);
    int deg = static_cast<int>(std::lround(d));
    if (std::abs(d - deg) > 1e-6)
      throw StructureError("character oracle: non-integer degree");
    Vector vals(g.order);
    for (int e = 0; e < g.order; ++e) {
      int c = t.class_of[e];
      vals(e) = es.eigenvalues[c] * d / double(t.classes[c].size());
    }
    t.degrees.push_back(deg);
    t.values.push_back(std::move(vals));
  }

  // canonical row order: by (degree, lexicographic values)
  std::vector<int> order(k);
  for (int i = 0; i < k; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (t.degrees[x] != t.degrees[y]) return t.degrees[x] < t.degrees[y];
    return lex_compare(t.values[x], t.values[y], tol.eps_eq) < 0;
  });
  CharacterTable sorted;
  sorted.classes = t.classes;
  sorted.class_of = t.class_of;
  for (int i : order) {
    sorted.degrees.push_back(t.degrees[i]);
    sorted.values.push_back(t.values[i]);
  }
  return sorted;
}

Complex principal_root(Complex c, int m) {
  // principal branch: argument in (-pi, pi]
  double r = std::pow(std::abs(c), 1.0 / m);
  double theta = std::arg(c);  // in (-pi, pi]
  return std::polar(r, theta / m);
}

std::optional<Matrix> intertwiner(const FiniteGroup& g, const GroupRep& rep,
                                  const GroupAutomorphism& sigma,
                                  const Tolerance& tol) {
  validate_automorphism(g, sigma);
  if (static_cast<int>(rep.size()) != g.order)
    throw InvalidInput("intertwiner: rep size != group order");
  const int d = static_cast<int>(rep[0].rows());
  // rho(g) phi - phi rho(sigma(g)) = 0, vectorized with vec(AXB)=(B^T ⊗ A)vec X
  Matrix stacked(g.order * d * d, d * d);
  for (int e = 0; e < g.order; ++e) {
    Matrix block =
        Eigen::kroneckerProduct(Matrix::Identity(d, d), rep[e]).eval() -
        Eigen::kroneckerProduct(rep[sigma.perm[e]].transpose(),
                                Matrix::Identity(d, d))
            .eval();
    stacked.middleRows(e * d * d, d * d) = block;
  }
  double scale = 0.0;
  for (const auto& r : rep) scale = std::max(scale, r.norm());
  Matrix null_basis;
  if (stacked.norm() <= tol.eps_eq * std::max(1.0, scale) * g.order) {
    // constraints vanish identically (only possible for d = 1): every scalar
    // intertwines, and the relative SV cutoff in kernel() would misread the
    // near-zero stack as full rank
    null_basis = Matrix::Identity(d * d, d * d);
  } else {
    null_basis = kernel(stacked, tol);
  }
  if (null_basis.cols() == 0) return std::nullopt;
  if (null_basis.cols() > 1)
    throw StructureError("intertwiner: intertwiner space has dim > 1");

  Matrix phi = Eigen::Map<Matrix>(null_basis.col(0).data(), d, d);
  // normalize so phi^m = I
  Matrix power = Matrix::Identity(d, d);
  for (int r = 0; r < sigma.m; ++r) power = power * phi;
  Complex c = power.trace() / double(d);
  if ((power - c * Matrix::Identity(d, d)).norm() > 1e-6 * std::max(1.0, power.norm()))
    throw StructureError("intertwiner: phi^m is not scalar");
  if (std::abs(c) < tol.eps_rank)
    throw StructureError("intertwiner: phi^m vanishes");
  phi /= principal_root(c, sigma.m);
  return phi;
}

Vector twisted_character_direct(const GroupRep& rep, const Matrix& phi) {
  Vector out(rep.size());
  for (std::size_t e = 0; e < rep.size(); ++e)
    out(static_cast<Eigen::Index>(e)) = (rep[e] * phi).trace();
  return out;
}

}  // namespace frobstar
