#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bssrw/cake/allocation.hpp"
#include "bssrw/cake/measure.hpp"
#include "bssrw/cake/session.hpp"

namespace bssrw {

enum class Guarantee { proportional, envy_free };
std::string to_string(Guarantee g);

struct ProtocolRun {
  std::string protocol;
  Allocation allocation;
  Session session;
  std::vector<Guarantee> guarantees;
};

// P1 halves the cake, P2 takes the piece it values at least 1/2 (left on a tie).
ProtocolRun cut_and_choose(const Measure& first, const Measure& second);

// Banach-Knaster: the piece [left, y] worth 1/n of the whole cake is passed
// along; a player trims it only when valuing it strictly above 1/n.
ProtocolRun last_diminisher(std::vector<Measure> measures);

// Divide and conquer: with k players on a piece, each marks where its left part
// is worth ceil(k/2)/k of its own value; the cake splits at the ceil(k/2)-th
// smallest mark (ties ordered by player index).
ProtocolRun even_paz(std::vector<Measure> measures);

// The three-player envy-free procedure with trimming.
ProtocolRun selfridge_conway(std::vector<Measure> measures);

const std::vector<std::string>& protocol_names();
// Dispatch by name; throws DomainError for unknown names or wrong player counts.
ProtocolRun run_protocol(std::string_view name, std::vector<Measure> measures);

}  // namespace bssrw
