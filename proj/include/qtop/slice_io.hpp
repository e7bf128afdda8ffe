#pragma once

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qtop/diagram.hpp"
#include "qtop/error.hpp"

namespace qtop {

// Slice notation, one slice per line, bottom to top:
//   strands <n> <sign>...   bottom boundary (signs + / - / +1 / -1); optional, must come first
//   id | x+ <p> | x- <p> | cup <p> lr|rl | cap <p> lr|rl
// Blank lines and lines starting with '#' are ignored; '#' also starts a trailing comment.

namespace detail {

inline std::size_t parse_index(const std::string& tok, std::size_t line) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("expected a strand index, got '" + tok + "'", line);
  try {
    return static_cast<std::size_t>(std::stoull(tok));
  } catch (const std::exception&) {
    throw ParseError("strand index '" + tok + "' out of range", line);
  }
}

inline Direction parse_direction(const std::string& tok, std::size_t line) {
  if (tok == "lr") return Direction::LeftToRight;
  if (tok == "rl") return Direction::RightToLeft;
  throw ParseError("expected lr or rl, got '" + tok + "'", line);
}

inline int parse_orientation(const std::string& tok, std::size_t line) {
  if (tok == "+" || tok == "+1" || tok == "1") return kUp;
  if (tok == "-" || tok == "-1") return kDown;
  throw ParseError("expected orientation sign + or -, got '" + tok + "'", line);
}

}  // namespace detail

inline SliceDiagram parse_slices(std::istream& in) {
  std::vector<int> bottom;
  std::vector<Generator> slices;
  std::vector<std::size_t> line_of;  // source line of each slice
  bool header_allowed = true;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    const std::string& head = tok[0];
    auto want = [&](std::size_t n) {
      if (tok.size() != n)
        throw ParseError("'" + head + "' takes " + std::to_string(n - 1) + " argument(s), got " +
                             std::to_string(tok.size() - 1),
                         line);
    };
    if (head == "strands") {
      if (!header_allowed) throw ParseError("'strands' header must precede all slices", line);
      if (tok.size() < 2) throw ParseError("'strands' needs a count", line);
      const std::size_t n = detail::parse_index(tok[1], line);
      if (tok.size() != n + 2)
        throw ParseError("'strands " + std::to_string(n) + "' needs " + std::to_string(n) + " orientation signs", line);
      for (std::size_t i = 0; i < n; ++i) bottom.push_back(detail::parse_orientation(tok[i + 2], line));
      header_allowed = false;
      continue;
    }
    header_allowed = false;
    if (head == "id") {
      want(1);
      slices.push_back(Generator::identity());
    } else if (head == "x+" || head == "x-") {
      want(2);
      slices.push_back(Generator::crossing(detail::parse_index(tok[1], line), head == "x+" ? 1 : -1));
    } else if (head == "cup" || head == "cap") {
      want(3);
      const auto p = detail::parse_index(tok[1], line);
      const auto d = detail::parse_direction(tok[2], line);
      slices.push_back(head == "cup" ? Generator::cup(p, d) : Generator::cap(p, d));
    } else {
      throw ParseError("unknown slice '" + head + "'", line);
    }
    line_of.push_back(line);
  }
  try {
    return SliceDiagram(std::move(bottom), std::move(slices));
  } catch (const ValidationError& e) {
    const std::size_t at = e.slice() < line_of.size() ? line_of[e.slice()] : line;
    throw ParseError(e.what(), at);
  }
}

inline SliceDiagram parse_slices(const std::string& text) {
  std::istringstream in(text);
  return parse_slices(in);
}

inline SliceDiagram read_slice_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_slices(in);
}

inline std::string format_slices(const SliceDiagram& d) {
  std::ostringstream out;
  if (!d.bottom().empty()) {
    out << "strands " << d.bottom().size();
    for (int o : d.bottom()) out << ' ' << (o == kUp ? '+' : '-');
    out << '\n';
  }
  for (const auto& g : d.slices()) {
    switch (g.kind) {
      case GeneratorKind::Identity:
        out << "id\n";
        break;
      case GeneratorKind::PositiveCrossing:
        out << "x+ " << g.position << '\n';
        break;
      case GeneratorKind::NegativeCrossing:
        out << "x- " << g.position << '\n';
        break;
      case GeneratorKind::Cup:
      case GeneratorKind::Cap:
        out << (g.kind == GeneratorKind::Cup ? "cup " : "cap ") << g.position << ' '
            << (g.direction == Direction::LeftToRight ? "lr" : "rl") << '\n';
        break;
    }
  }
  return out.str();
}

}  // namespace qtop
