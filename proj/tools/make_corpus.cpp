// Regenerates the bundled group corpus and automorphism files under a target
// directory (data/ by default).
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "frobstar/corpus.hpp"
#include "frobstar/io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace frobstar;

namespace {

std::string sanitize(std::string name) {
  for (char& c : name)
    if (c == '(' || c == ')' || c == ':' || c == '^') c = '_';
  return name;
}

void write_json(const fs::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << "\n";
}

json automorphism_json(const GroupAutomorphism& sigma) {
  return json{{"perm", sigma.perm}, {"m", sigma.m}};
}

}  // namespace

int main(int argc, char** argv) {
  fs::path root = argc > 1 ? argv[1] : "data";
  fs::create_directories(root / "groups");
  fs::create_directories(root / "automorphisms");

  for (const auto& [name, group] : corpus::all_groups_up_to(16)) {
    json j = io::group_to_json(group);
    j["name"] = name;
    write_json(root / "groups" / (sanitize(name) + ".json"), j);
  }

  write_json(root / "automorphisms" / "z3_inversion.json",
             automorphism_json(corpus::cyclic_inversion(3, 2)));
  write_json(root / "automorphisms" / "z4_inversion.json",
             automorphism_json(corpus::cyclic_inversion(4, 2)));
  // conjugation by the transposition b in S3 = <a, b | a^3, b^2, bab=a^-1>;
  // element (i, r) has index r*3 + i, so b is index 3
  write_json(root / "automorphisms" / "s3_conj12.json",
             automorphism_json(
                 corpus::inner_automorphism(corpus::dihedral(3), 3, 2)));

  std::cout << "corpus written to " << root << "\n";
  return 0;
}
