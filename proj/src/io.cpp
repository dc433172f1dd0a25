#include "setfam/io.hpp"

#include <fstream>
#include <sstream>

#include "setfam/errors.hpp"

namespace setfam {

namespace {

// Splits on single spaces; empty tokens flag malformed spacing.
std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t sp = line.find(' ', start);
    if (sp == std::string::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, sp - start));
    start = sp + 1;
  }
}

std::uint64_t parse_uint(const std::string& tok, std::size_t line_no, const char* what) {
  if (tok.empty()) {
    throw ParseError(line_no, "line " + std::to_string(line_no) + ": malformed spacing");
  }
  std::uint64_t v = 0;
  for (char c : tok) {
    if (c < '0' || c > '9') {
      throw ParseError(line_no, "line " + std::to_string(line_no) + ": expected " + what +
                                    ", got \"" + tok + "\"");
    }
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
    if (v > (std::uint64_t{1} << 32)) {
      throw ParseError(line_no, "line " + std::to_string(line_no) + ": " + what + " too large");
    }
  }
  return v;
}

}  // namespace

SetFamily read_family(std::istream& in, std::uint32_t max_universe) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line)) throw ParseError(1, "line 1: missing header");
  const auto header = split_tokens(line);
  if (header.size() != 2) {
    throw ParseError(1, "line 1: header must be \"n m\"");
  }
  const std::uint64_t n = parse_uint(header[0], 1, "universe size");
  const std::uint64_t m = parse_uint(header[1], 1, "member count");
  if (n > max_universe) {
    throw UniverseTooLargeError("universe size " + std::to_string(n) + " exceeds limit " +
                                std::to_string(max_universe));
  }

  std::vector<std::vector<std::uint32_t>> lists;
  lists.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    ++line_no;
    if (!std::getline(in, line)) {
      throw ParseError(line_no, "line " + std::to_string(line_no) + ": expected " +
                                    std::to_string(m) + " member lines, found " +
                                    std::to_string(i));
    }
    std::vector<std::uint32_t> elems;
    if (line != "-") {
      std::uint64_t prev = 0;
      for (const auto& tok : split_tokens(line)) {
        const std::uint64_t e = parse_uint(tok, line_no, "element");
        if (e < 1 || e > n) {
          throw ParseError(line_no, "line " + std::to_string(line_no) + ": element " +
                                        std::to_string(e) + " outside universe [1," +
                                        std::to_string(n) + "]");
        }
        if (e <= prev) {
          throw ParseError(line_no, "line " + std::to_string(line_no) +
                                        ": elements must be strictly increasing");
        }
        prev = e;
        elems.push_back(static_cast<std::uint32_t>(e));
      }
    }
    lists.push_back(std::move(elems));
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty()) {
      throw ParseError(line_no,
                       "line " + std::to_string(line_no) + ": trailing content after last member");
    }
  }

  try {
    return SetFamily::from_element_lists(static_cast<std::uint32_t>(n), lists);
  } catch (const DuplicateSetError& e) {
    // Re-key the member indices as file lines for the diagnostic.
    throw DuplicateSetError(e.first_index, e.second_index,
                            "lines " + std::to_string(e.first_index + 2) + " and " +
                                std::to_string(e.second_index + 2) + " define the same set");
  }
}

SetFamily read_family_file(const std::string& path, std::uint32_t max_universe) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return read_family(in, max_universe);
}

SetFamily parse_family(const std::string& text, std::uint32_t max_universe) {
  std::istringstream in(text);
  return read_family(in, max_universe);
}

void write_family(std::ostream& out, const SetFamily& f) {
  out << f.universe_size() << ' ' << f.size() << '\n';
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto elems = f.member(i).elements();
    if (elems.empty()) {
      out << "-\n";
      continue;
    }
    for (std::size_t j = 0; j < elems.size(); ++j) {
      if (j) out << ' ';
      out << elems[j];
    }
    out << '\n';
  }
}

std::string format_family(const SetFamily& f) {
  std::ostringstream out;
  write_family(out, f);
  return out.str();
}

void write_family_file(const std::string& path, const SetFamily& f) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path + " for writing");
  write_family(out, f);
}

}  // namespace setfam
