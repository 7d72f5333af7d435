#pragma once

#include <json.hpp>

#include <string>

#include "frobstar/graded.hpp"
#include "frobstar/group.hpp"

namespace frobstar::io {

using json = nlohmann::json;

/// Parses schema `group.v1`: either {"order", "cayley", "labels"?} or
/// {"permutations", "degree"?}. Throws InvalidInput naming the offending field.
FiniteGroup parse_group(const json& j);

/// Parses {"perm": [...], "m": m}.
GroupAutomorphism parse_automorphism(const json& j);

/// Parses schema `algebra.v1`:
/// { "dim", "m", "grades", "structure": [[i,j,k,re,im], ...],
///   "lambda": [...], "star": {"perm": [...], "signs": [...]} | dense,
///   "labels"? }
GradedFrobeniusStarAlgebra parse_graded_algebra(const json& j,
                                                const Tolerance& tol);

json group_to_json(const FiniteGroup& g);

json load_json_file(const std::string& path);

/// FNV-1a content fingerprint of a file, as a hex string.
std::string file_fingerprint(const std::string& path);

}  // namespace frobstar::io
