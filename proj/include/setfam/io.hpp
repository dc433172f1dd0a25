#pragma once

#include <iosfwd>
#include <string>

#include "setfam/family.hpp"

namespace setfam {

// Family text format: a header line "n m", then m member lines.  A member
// line is either "-" (the empty set) or its elements in strictly increasing
// order, separated by single spaces.  The format round-trips bit-exactly,
// so the reader rejects any spacing the writer would not produce.
SetFamily read_family(std::istream& in, std::uint32_t max_universe = 4096);
SetFamily read_family_file(const std::string& path, std::uint32_t max_universe = 4096);
SetFamily parse_family(const std::string& text, std::uint32_t max_universe = 4096);

void write_family(std::ostream& out, const SetFamily& f);
std::string format_family(const SetFamily& f);
void write_family_file(const std::string& path, const SetFamily& f);

}  // namespace setfam
