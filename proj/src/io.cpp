#include "frobstar/io.hpp"

#include <fstream>

namespace frobstar::io {

namespace {

Complex parse_complex(const json& j, const std::string& field) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return Complex(j[0].get<double>(), j[1].get<double>());
  throw InvalidInput("expected number or [re,im] in field '" + field + "'");
}

}  // namespace

FiniteGroup parse_group(const json& j) {
  if (!j.is_object()) throw InvalidInput("group: top-level JSON object expected");
  if (j.contains("permutations")) {
    const auto& perms = j.at("permutations");
    if (!perms.is_array())
      throw InvalidInput("group: field 'permutations' must be an array");
    std::vector<std::vector<int>> gens;
    for (const auto& p : perms) {
      if (!p.is_array())
        throw InvalidInput("group: each entry of 'permutations' must be an array");
      gens.push_back(p.get<std::vector<int>>());
    }
    if (j.contains("degree")) {
      int degree = j.at("degree").get<int>();
      for (auto& p : gens)
        while (static_cast<int>(p.size()) < degree)
          p.push_back(static_cast<int>(p.size()));
    }
    return group_from_permutations(gens);
  }
  if (!j.contains("order") || !j.contains("cayley"))
    throw InvalidInput("group: fields 'order' and 'cayley' are required");
  int order = j.at("order").get<int>();
  auto cayley = j.at("cayley").get<std::vector<std::vector<int>>>();
  if (static_cast<int>(cayley.size()) != order)
    throw InvalidInput("group: field 'cayley' has wrong row count");
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  return group_from_cayley(std::move(cayley), std::move(labels));
}

GroupAutomorphism parse_automorphism(const json& j) {
  if (!j.is_object() || !j.contains("perm") || !j.contains("m"))
    throw InvalidInput("automorphism: fields 'perm' and 'm' are required");
  GroupAutomorphism sigma;
  sigma.perm = j.at("perm").get<std::vector<int>>();
  sigma.m = j.at("m").get<int>();
  return sigma;
}

GradedFrobeniusStarAlgebra parse_graded_algebra(const json& j,
                                                const Tolerance& tol) {
  if (!j.is_object()) throw InvalidInput("algebra: top-level JSON object expected");
  for (const char* field : {"dim", "m", "grades", "structure", "lambda", "star"})
    if (!j.contains(field))
      throw InvalidInput(std::string("algebra: field '") + field + "' is required");
  const int n = j.at("dim").get<int>();
  if (n <= 0) throw InvalidInput("algebra: field 'dim' must be positive");
  const int m = j.at("m").get<int>();
  auto grades = j.at("grades").get<std::vector<int>>();
  if (static_cast<int>(grades.size()) != n)
    throw InvalidInput("algebra: field 'grades' has wrong length");

  std::vector<Matrix> left(n, Matrix::Zero(n, n));
  for (const auto& entry : j.at("structure")) {
    if (!entry.is_array() || entry.size() < 4 || entry.size() > 5)
      throw InvalidInput("algebra: field 'structure' entries must be [i,j,k,re(,im)]");
    int i = entry[0].get<int>(), jj = entry[1].get<int>(), k = entry[2].get<int>();
    if (i < 0 || i >= n || jj < 0 || jj >= n || k < 0 || k >= n)
      throw InvalidInput("algebra: index out of range in field 'structure'");
    double re = entry[3].get<double>();
    double im = entry.size() == 5 ? entry[4].get<double>() : 0.0;
    left[i](k, jj) = Complex(re, im);
  }

  Vector lambda(n);
  const auto& lam = j.at("lambda");
  if (!lam.is_array() || static_cast<int>(lam.size()) != n)
    throw InvalidInput("algebra: field 'lambda' has wrong length");
  for (int i = 0; i < n; ++i) lambda(i) = parse_complex(lam[i], "lambda");

  Matrix star = Matrix::Zero(n, n);
  const auto& st = j.at("star");
  if (st.is_object()) {
    auto perm = st.at("perm").get<std::vector<int>>();
    if (static_cast<int>(perm.size()) != n)
      throw InvalidInput("algebra: star.perm has wrong length");
    std::vector<Complex> signs(n, 1.0);
    if (st.contains("signs")) {
      const auto& sg = st.at("signs");
      if (static_cast<int>(sg.size()) != n)
        throw InvalidInput("algebra: star.signs has wrong length");
      for (int i = 0; i < n; ++i) signs[i] = parse_complex(sg[i], "star.signs");
    }
    for (int i = 0; i < n; ++i) {
      if (perm[i] < 0 || perm[i] >= n)
        throw InvalidInput("algebra: star.perm index out of range");
      star(perm[i], i) = signs[i];
    }
  } else if (st.is_array()) {
    if (static_cast<int>(st.size()) != n)
      throw InvalidInput("algebra: dense 'star' has wrong row count");
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(st[i].size()) != n)
        throw InvalidInput("algebra: dense 'star' has wrong column count");
      for (int k = 0; k < n; ++k) star(i, k) = parse_complex(st[i][k], "star");
    }
  } else {
    throw InvalidInput("algebra: field 'star' must be an object or a matrix");
  }

  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();

  // the unit is recovered by solving left-multiplication = identity
  Matrix stacked(n * n, n);
  for (int i = 0; i < n; ++i) {
    Matrix ri = Matrix::Zero(n, n);
    for (int b = 0; b < n; ++b) ri.col(b) = left[b].col(i);
    stacked.middleRows(static_cast<Eigen::Index>(i) * n, n) = ri;
  }
  Vector rhs = Vector::Zero(n * n);
  for (int i = 0; i < n; ++i) rhs(static_cast<Eigen::Index>(i) * n + i) = 1.0;
  Vector unit = stacked.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(rhs);

  AlgebraSpec spec(n, std::move(labels), std::move(left), std::move(unit));
  FrobeniusStarAlgebra alg(std::move(spec), std::move(lambda), std::move(star), tol);
  return GradedFrobeniusStarAlgebra(std::move(alg), m, std::move(grades));
}

json group_to_json(const FiniteGroup& g) {
  json j;
  j["schema"] = "group.v1";
  j["order"] = g.order;
  j["cayley"] = g.cayley;
  j["labels"] = g.labels;
  return j;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw InvalidInput("JSON parse error in " + path + ": " + e.what());
  }
  return j;
}

std::string file_fingerprint(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open file: " + path);
  std::uint64_t h = 1469598103934665603ull;
  char c;
  while (in.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace frobstar::io
