#pragma once

#include <cctype>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "codeglab/perm.hpp"
#include "codeglab/permgroup.hpp"

namespace codeglab {

// Permutation-group text format:
//   line 1 (first non-comment line): decimal degree n
//   directives: "#! order=<int>", "#! simple=<true|false>"
//   comments: lines starting '#'
//   generator lines: exactly n space-separated decimal integers, 1-based images
// Strict layout: LF line endings, single spaces, no trailing whitespace,
// at most one trailing LF.
struct PgrError : std::runtime_error {
  enum class Kind {
    io,
    malformed_line,
    bad_degree,
    image_out_of_range,
    duplicate_image,
    failed_assertion,
  };
  Kind kind;
  int line;
  PgrError(Kind k, int ln, const std::string& msg)
      : std::runtime_error("line " + std::to_string(ln) + ": " + msg),
        kind(k),
        line(ln) {}
};

namespace pgrdetail {

inline bool parse_uint(const std::string& s, std::uint64_t& out) {
  if (s.empty()) return false;
  out = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
    out = out * 10 + static_cast<std::uint64_t>(c - '0');
    if (out > (1ull << 62)) return false;
  }
  return true;
}

}  // namespace pgrdetail

// simple= assertions need class data to check, so the parse records them
// and group-structure-aware callers enforce them.
struct ParsedGroup {
  PermGroup group;
  bool has_simple_assert = false;
  bool simple_value = false;
};

inline ParsedGroup parse_group_text_full(const std::string& text) {
  std::vector<std::string> lines;
  {
    std::string cur;
    for (char c : text) {
      if (c == '\n') {
        lines.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    if (!cur.empty()) lines.push_back(cur);
  }

  long long degree = -1;
  std::vector<Perm> gens;
  bool want_order = false, want_simple_flag = false, want_simple_value = false;
  std::uint64_t expected_order = 0;

  for (std::size_t li = 0; li < lines.size(); ++li) {
    const std::string& line = lines[li];
    const int ln = static_cast<int>(li) + 1;
    if (line.empty()) {
      if (li + 1 == lines.size()) continue;  // single trailing LF
      throw PgrError(PgrError::Kind::malformed_line, ln, "empty line");
    }
    if (line.find('\r') != std::string::npos)
      throw PgrError(PgrError::Kind::malformed_line, ln, "carriage return");
    if (line.back() == ' ' || line.front() == ' ')
      throw PgrError(PgrError::Kind::malformed_line, ln, "stray whitespace");
    if (line[0] == '#') {
      if (line.rfind("#! ", 0) == 0) {
        std::string body = line.substr(3);
        if (body.rfind("order=", 0) == 0) {
          if (!pgrdetail::parse_uint(body.substr(6), expected_order))
            throw PgrError(PgrError::Kind::malformed_line, ln, "bad order directive");
          want_order = true;
        } else if (body == "simple=true") {
          want_simple_flag = true;
          want_simple_value = true;
        } else if (body == "simple=false") {
          want_simple_flag = true;
          want_simple_value = false;
        } else {
          throw PgrError(PgrError::Kind::malformed_line, ln, "unknown directive");
        }
      }
      continue;  // plain comment
    }

    // numeric line: degree or generator
    std::vector<long long> nums;
    {
      std::size_t pos = 0;
      while (pos < line.size()) {
        std::size_t sp = line.find(' ', pos);
        std::string tok = line.substr(pos, sp == std::string::npos ? sp : sp - pos);
        std::uint64_t v;
        if (!pgrdetail::parse_uint(tok, v))
          throw PgrError(PgrError::Kind::malformed_line, ln, "bad integer '" + tok + "'");
        nums.push_back(static_cast<long long>(v));
        if (sp == std::string::npos) break;
        if (sp + 1 >= line.size() || line[sp + 1] == ' ')
          throw PgrError(PgrError::Kind::malformed_line, ln, "bad spacing");
        pos = sp + 1;
      }
    }
    if (degree < 0) {
      if (nums.size() != 1 || nums[0] < 1 || nums[0] > 65535)
        throw PgrError(PgrError::Kind::bad_degree, ln, "degree expected");
      degree = nums[0];
      continue;
    }
    if (nums.size() != static_cast<std::size_t>(degree))
      throw PgrError(PgrError::Kind::malformed_line, ln,
                     "expected " + std::to_string(degree) + " images");
    try {
      gens.push_back(perm_from_one_based(nums));
    } catch (const std::invalid_argument& e) {
      std::string what = e.what();
      auto kind = what == "duplicate image" ? PgrError::Kind::duplicate_image
                                            : PgrError::Kind::image_out_of_range;
      throw PgrError(kind, ln, what);
    }
  }

  if (degree < 0) throw PgrError(PgrError::Kind::bad_degree, 1, "missing degree line");
  ParsedGroup out{PermGroup(static_cast<std::size_t>(degree), gens),
                  want_simple_flag, want_simple_value};
  if (want_order && out.group.order() != expected_order)
    throw PgrError(PgrError::Kind::failed_assertion, 0,
                   "order assertion failed: built " + out.group.order().str() +
                       ", declared " + std::to_string(expected_order));
  return out;
}

inline PermGroup parse_group_text(const std::string& text) {
  return parse_group_text_full(text).group;
}

inline ParsedGroup parse_group_file_full(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PgrError(PgrError::Kind::io, 0, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_group_text_full(ss.str());
}

inline PermGroup parse_group_file(const std::string& path) {
  return parse_group_file_full(path).group;
}

inline std::string serialize_group(const PermGroup& g) {
  std::ostringstream os;
  os << g.degree() << '\n';
  for (const auto& p : g.generators()) os << format_images(p) << '\n';
  return os.str();
}

}  // namespace codeglab
