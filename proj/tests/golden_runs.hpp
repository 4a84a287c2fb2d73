#pragma once

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

// CLI runs frozen as golden reports, shared by the unit and acceptance tests.
namespace crsym::golden {

namespace fs = std::filesystem;
using nlohmann::json;

inline const fs::path kData = CRSYM_TEST_DATA;
inline const fs::path kGolden = CRSYM_GOLDEN_DIR;

inline std::vector<std::string> words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w == "@data" ? kData.string() : (w.rfind("@data/", 0) == 0 ? (kData / w.substr(6)).string() : w));
  return out;
}

// Reports minus timing, with data paths reduced to file names.
inline json stable(json r) {
  r.erase("timingMs");
  for (auto& [k, v] : r["params"].items()) {
    if (v.is_string() && v.get<std::string>().rfind(kData.string(), 0) == 0) v = fs::path(v.get<std::string>()).filename().string();
  }
  return r;
}

struct Golden {
  std::string name;
  std::string args;
};

inline void PrintTo(const Golden& g, std::ostream* os) { *os << g.args; }

inline const std::vector<Golden> kRuns = {
    {"verify_indefinite_3", "verify --family indefinite --n 3 --eps +"},
    {"verify_definite_3", "verify --family definite --n 3"},
    {"verify_flat_2", "verify --family flat --n 2"},
    {"verify_model_file", "verify --model @data/definite2.model --fields @data/definite2.fields"},
    {"solve_definite_2", "solve --family definite --n 2 --degree 3"},
    {"solve_indefinite_2", "solve --family indefinite --n 2 --degree 2"},
    {"solve_model_file", "solve --model @data/definite2.model --degree 2"},
    {"structure_indefinite_4", "structure --family indefinite --n 4 --eps +-"},
    {"structure_definite_2", "structure --family definite --n 2"},
    {"structure_definite_3", "structure --family definite --n 3"},
    {"levi_form_indefinite_3", "levi-form --family indefinite --n 3 --eps +"},
    {"levi_form_flat_3", "levi-form --family flat --n 3 --eps +-+"},
    {"parabolic_1_3", "parabolic --p 1 --q 3"},
    {"prolong_full_1_3", "prolong --p 1 --q 3 --a0 full"},
    {"prolong_zero_1_3", "prolong --p 1 --q 3 --a0 zero"},
    {"prolong_lowest_1_3", "prolong --p 1 --q 3 --a0 lowest"},
    {"prolong_file_1_3", "prolong --p 1 --q 3 --a0 @data/a0_grading.json"},
    {"invariants_sp2", "invariants --check sp2 --n 4"},
    {"kostant_3", "kostant --n 3"},
    {"kostant_4", "kostant --n 4"},
    {"satake_5_1", "satake --n 5 --k 1"},
    {"satake_3_0", "satake --n 3 --k 0"},
    {"bounds_2_0", "bounds --n 2 --k 0"},
    {"bounds_1_0", "bounds --n 1 --k 0"},
};

inline fs::path golden_file(const Golden& g) { return kGolden / (g.name + ".json"); }

}  // namespace crsym::golden
