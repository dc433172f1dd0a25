#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "setfam/family.hpp"

namespace setfam {

struct BdFree {
  std::uint32_t d;
};
struct AUnionFree {
  std::uint32_t a;
};
struct ABUnionFree {
  std::uint32_t a;
  std::uint32_t b;
};

using Property = std::variant<BdFree, AUnionFree, ABUnionFree>;

// Formats as the CLI spelling: "bd:2", "uf:3", "abuf:2,2".
std::string property_name(const Property& p);
Property parse_property(const std::string& text);

bool holds(const SetFamily& f, const IndexMask& candidates, const Property& p);
bool holds(const SetFamily& f, const Property& p);

// Participant indices (ascending, distinct) of the first minimal violating
// configuration inside `candidates`: the 2^d members of a Boolean algebra,
// or the a+1 / a+b members of a union equation.
std::optional<std::vector<std::uint32_t>> find_violation(const SetFamily& f,
                                                         const IndexMask& candidates,
                                                         const Property& p);

std::uint64_t count_violations(const SetFamily& f, const IndexMask& candidates, const Property& p);
std::uint64_t count_violations(const SetFamily& f, const Property& p);

// How many violating configurations each member participates in; zero for
// members outside `candidates`.
std::vector<std::uint64_t> violation_participation(const SetFamily& f, const IndexMask& candidates,
                                                   const Property& p);

}  // namespace setfam
