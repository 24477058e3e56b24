#pragma once

#include <string>
#include <vector>

#include "bssrw/cake/measure.hpp"

namespace bssrw::testing {

struct CorpusCase {
  std::string name;
  std::string measures;  // measure-file text
};

// Ten two-player and ten three-player profiles on which every applicable
// protocol finishes under the default degree cap.
const std::vector<CorpusCase>& corpus();

std::vector<Measure> load(const CorpusCase& c);

// Protocols that accept the profile's player count.
std::vector<std::string> applicable_protocols(std::size_t players);

}  // namespace bssrw::testing
