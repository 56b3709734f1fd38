#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace spjlab::testing {

struct GoldenCase {
  std::string file;  // relative to tests/golden
  std::function<std::string()> produce;
};

// Every byte-exact rendering and CLI transcript the project pins.
std::vector<GoldenCase> golden_cases();

// nullopt when `actual` matches tests/golden/<file> byte for byte, else a
// short description of the first difference. With SPJLAB_UPDATE_GOLDENS=1
// set, writes `actual` to the file instead and reports a match.
std::optional<std::string> check_golden(const std::string& file, const std::string& actual);

// Queries shared by the rendering goldens.
const std::vector<std::string>& demo_queries();

}  // namespace spjlab::testing
