#include "setfam/property.hpp"

#include <algorithm>

#include "setfam/boolean_algebra.hpp"
#include "setfam/errors.hpp"

namespace setfam {

namespace {

std::vector<std::uint32_t> sorted_unique(std::vector<std::uint32_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

template <typename Each>
void for_each_violation(const SetFamily& f, const IndexMask& candidates, const Property& p,
                        Each&& each) {
  // `each` receives the participant list and returns false to stop.
  if (const auto* bd = std::get_if<BdFree>(&p)) {
    for_each_boolean_algebra(f, candidates, bd->d, EnumerationOptions{},
                             [&](const BooleanAlgebraWitness& w) {
                               return each(sorted_unique(w.member_of_mask));
                             });
  } else if (const auto* uf = std::get_if<AUnionFree>(&p)) {
    scan_union_violations(f, candidates, uf->a,
                          [&](std::span<const std::uint32_t> lhs, std::uint32_t rhs) {
                            std::vector<std::uint32_t> all(lhs.begin(), lhs.end());
                            all.push_back(rhs);
                            return each(sorted_unique(std::move(all)));
                          });
  } else {
    const auto& ab = std::get<ABUnionFree>(p);
    scan_ab_union_violations(f, candidates, ab.a, ab.b,
                             [&](std::span<const std::uint32_t> lhs,
                                 std::span<const std::uint32_t> rhs) {
                               std::vector<std::uint32_t> all(lhs.begin(), lhs.end());
                               all.insert(all.end(), rhs.begin(), rhs.end());
                               return each(sorted_unique(std::move(all)));
                             });
  }
}

}  // namespace

std::string property_name(const Property& p) {
  if (const auto* bd = std::get_if<BdFree>(&p)) return "bd:" + std::to_string(bd->d);
  if (const auto* uf = std::get_if<AUnionFree>(&p)) return "uf:" + std::to_string(uf->a);
  const auto& ab = std::get<ABUnionFree>(p);
  return "abuf:" + std::to_string(ab.a) + "," + std::to_string(ab.b);
}

Property parse_property(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw Error("property must look like bd:D, uf:A or abuf:A,B, got \"" + text + "\"");
  }
  const std::string kind = text.substr(0, colon);
  const std::string args = text.substr(colon + 1);
  const auto to_u32 = [&](const std::string& s) -> std::uint32_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 9) {
      throw Error("bad property parameter \"" + s + "\" in \"" + text + "\"");
    }
    return static_cast<std::uint32_t>(std::stoul(s));
  };
  if (kind == "bd") return BdFree{to_u32(args)};
  if (kind == "uf") return AUnionFree{to_u32(args)};
  if (kind == "abuf") {
    const auto comma = args.find(',');
    if (comma == std::string::npos) throw Error("abuf needs two parameters: abuf:A,B");
    return ABUnionFree{to_u32(args.substr(0, comma)), to_u32(args.substr(comma + 1))};
  }
  throw Error("unknown property kind \"" + kind + "\"");
}

bool holds(const SetFamily& f, const IndexMask& candidates, const Property& p) {
  return !find_violation(f, candidates, p).has_value();
}

bool holds(const SetFamily& f, const Property& p) { return holds(f, f.full_mask(), p); }

std::optional<std::vector<std::uint32_t>> find_violation(const SetFamily& f,
                                                         const IndexMask& candidates,
                                                         const Property& p) {
  std::optional<std::vector<std::uint32_t>> found;
  for_each_violation(f, candidates, p, [&](std::vector<std::uint32_t> parts) {
    found = std::move(parts);
    return false;
  });
  return found;
}

std::uint64_t count_violations(const SetFamily& f, const IndexMask& candidates,
                               const Property& p) {
  std::uint64_t n = 0;
  for_each_violation(f, candidates, p, [&](const std::vector<std::uint32_t>&) {
    ++n;
    return true;
  });
  return n;
}

std::uint64_t count_violations(const SetFamily& f, const Property& p) {
  return count_violations(f, f.full_mask(), p);
}

std::vector<std::uint64_t> violation_participation(const SetFamily& f, const IndexMask& candidates,
                                                   const Property& p) {
  std::vector<std::uint64_t> counts(f.size(), 0);
  for_each_violation(f, candidates, p, [&](const std::vector<std::uint32_t>& parts) {
    for (std::uint32_t i : parts) ++counts[i];
    return true;
  });
  return counts;
}

}  // namespace setfam
