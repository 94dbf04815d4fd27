#pragma once

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mtkit/bits.hpp"
#include "mtkit/error.hpp"
#include "mtkit/mt_algebra.hpp"
#include "mtkit/poset.hpp"

namespace mtkit {

// Text formats, one structure per header line:
//
//   poset 3          mt 2
//   0 <= 1           []
//   1 <= 2           [1]
//                    [0 1]
//
// '#' starts a comment. Poset pairs are closed reflexively and transitively.

namespace detail {

class LineReader {
 public:
  LineReader(std::istream& in, std::string file) : in_(in), file_(std::move(file)) {}

  /// Next line with comments stripped and content present; false at EOF.
  bool next(std::string& out) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++line_;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      const auto first = raw.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      const auto last = raw.find_last_not_of(" \t\r");
      out = raw.substr(first, last - first + 1);
      return true;
    }
    return false;
  }

  /// Puts the last line back so the next structure can start on it.
  void unread(std::string line) { pending_ = std::move(line); }
  bool next_or_pending(std::string& out) {
    if (!pending_.empty()) {
      out = std::move(pending_);
      pending_.clear();
      return true;
    }
    return next(out);
  }

  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError(file_, line_, expected);
  }

 private:
  std::istream& in_;
  std::string file_;
  std::size_t line_ = 0;
  std::string pending_;
};

/// Reads an unsigned integer token; fails with `expected` otherwise.
inline std::size_t read_index(std::istringstream& ss, const LineReader& r, const std::string& expected) {
  std::string tok;
  if (!(ss >> tok) || tok.empty() ||
      !std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); }) ||
      tok.size() > 6) {
    r.fail(expected);
  }
  return std::stoul(tok);
}

inline bool starts_with_word(const std::string& line, const std::string& word) {
  return line.rfind(word, 0) == 0 && (line.size() == word.size() || line[word.size()] == ' ' ||
                                      line[word.size()] == '\t');
}

inline std::size_t read_header(LineReader& r, const std::string& line, const std::string& word) {
  std::istringstream ss(line);
  std::string head;
  ss >> head;
  if (head != word) r.fail("'" + word + " <count>'");
  const auto n = read_index(ss, r, "a count after '" + word + "'");
  std::string extra;
  if (ss >> extra) r.fail("end of line after '" + word + " <count>'");
  return n;
}

inline FinitePoset read_poset_body(LineReader& r, std::size_t n) {
  std::vector<std::pair<Element, Element>> pairs;
  std::string line;
  while (r.next(line)) {
    if (starts_with_word(line, "poset") || starts_with_word(line, "mt")) {
      r.unread(line);
      break;
    }
    std::istringstream ss(line);
    const auto i = read_index(ss, r, "'<i> <= <j>'");
    std::string op;
    if (!(ss >> op) || op != "<=") r.fail("'<=' between element ids");
    const auto j = read_index(ss, r, "an element id after '<='");
    std::string extra;
    if (ss >> extra) r.fail("end of line after '<i> <= <j>'");
    if (i >= n || j >= n) r.fail("element ids below " + std::to_string(n));
    pairs.emplace_back(static_cast<Element>(i), static_cast<Element>(j));
  }
  return FinitePoset::from_pairs(n, pairs);
}

inline MTAlgebra read_mt_body(LineReader& r, std::size_t n) {
  if (n > kMaxAtoms) r.fail("at most " + std::to_string(kMaxAtoms) + " atoms");
  std::vector<AtomSet> opens;
  std::string line;
  while (r.next(line)) {
    if (starts_with_word(line, "poset") || starts_with_word(line, "mt")) {
      r.unread(line);
      break;
    }
    if (line.front() != '[' || line.back() != ']') r.fail("an open set like '[0 1]'");
    std::istringstream ss(line.substr(1, line.size() - 2));
    AtomSet u = 0;
    std::size_t prev = 0;
    bool first = true;
    while (ss >> std::ws, !ss.eof()) {
      const auto i = read_index(ss, r, "atom indices inside '[...]'");
      if (i >= n) r.fail("atom indices below " + std::to_string(n));
      if (!first && i <= prev) r.fail("strictly increasing atom indices");
      u |= bit(i);
      prev = i;
      first = false;
    }
    opens.push_back(u);
  }
  return build_mt(n, std::move(opens));
}

}  // namespace detail

/// Every poset in the stream, one per `poset N` header.
inline std::vector<FinitePoset> read_posets(std::istream& in, const std::string& file = "<input>") {
  detail::LineReader r(in, file);
  std::vector<FinitePoset> out;
  std::string line;
  while (r.next_or_pending(line)) {
    out.push_back(detail::read_poset_body(r, detail::read_header(r, line, "poset")));
  }
  if (out.empty()) r.fail("'poset <count>'");
  return out;
}

/// Every MT-algebra in the stream, one per `mt N` header.
inline std::vector<MTAlgebra> read_mts(std::istream& in, const std::string& file = "<input>") {
  detail::LineReader r(in, file);
  std::vector<MTAlgebra> out;
  std::string line;
  while (r.next_or_pending(line)) {
    out.push_back(detail::read_mt_body(r, detail::read_header(r, line, "mt")));
  }
  if (out.empty()) r.fail("'mt <count>'");
  return out;
}

inline FinitePoset parse_poset(const std::string& text, const std::string& file = "<input>") {
  std::istringstream in(text);
  auto all = read_posets(in, file);
  if (all.size() != 1) throw ParseError(file, 0, "exactly one poset");
  return std::move(all.front());
}

inline MTAlgebra parse_mt(const std::string& text, const std::string& file = "<input>") {
  std::istringstream in(text);
  auto all = read_mts(in, file);
  if (all.size() != 1) throw ParseError(file, 0, "exactly one MT-algebra");
  return std::move(all.front());
}

/// Which format a file uses, judged by its first content line.
enum class FileKind { poset, mt };

inline FileKind sniff(std::istream& in, const std::string& file) {
  detail::LineReader r(in, file);
  std::string line;
  if (!r.next(line)) r.fail("'poset <count>' or 'mt <count>'");
  if (detail::starts_with_word(line, "poset")) return FileKind::poset;
  if (detail::starts_with_word(line, "mt")) return FileKind::mt;
  r.fail("'poset <count>' or 'mt <count>'");
}

/// Covers only; reading takes the reflexive transitive closure back.
inline std::string write_poset(const FinitePoset& p) {
  std::ostringstream os;
  os << "poset " << p.size() << '\n';
  for (auto [i, j] : p.covers()) os << i << " <= " << j << '\n';
  return os.str();
}

inline std::string format_atoms(AtomSet s) {
  std::string out = "[";
  bool first = true;
  for_each_bit(s, [&](Element i) {
    if (!first) out += ' ';
    out += std::to_string(i);
    first = false;
  });
  return out + "]";
}

inline std::string write_mt(const MTAlgebra& M) {
  std::ostringstream os;
  os << "mt " << M.atom_count() << '\n';
  for (auto u : M.opens()) os << format_atoms(u) << '\n';
  return os.str();
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, 0, "a readable file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace mtkit
