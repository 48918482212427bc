#pragma once

#include <string>
#include <utility>
#include <vector>

namespace embtree {

// (A-number, b-file text) pairs shipped with the library.
const std::vector<std::pair<std::string, std::string>>& oeis_fixture_bfiles();

}  // namespace embtree
