#include "crdfa/io.hpp"

#include <charconv>
#include <string>
#include <vector>

#include "crdfa/error.hpp"

namespace crdfa {

namespace {

std::vector<std::string_view> split_whitespace(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::optional<std::size_t> parse_index(std::string_view token) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

}  // namespace

Automaton parse_automaton(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  bool have_header = false;
  std::vector<State> table;

  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() == '#') continue;
    const auto tokens = split_whitespace(line);
    if (tokens.empty()) continue;

    if (!have_header) {
      if (tokens.size() != 3 || tokens[0] != "dfa") throw ParseError(line_no, "expected header 'dfa <n> <k>'");
      const auto states = parse_index(tokens[1]);
      const auto letters = parse_index(tokens[2]);
      if (!states || !letters || *states == 0 || *letters == 0) {
        throw ParseError(line_no, "header needs positive integers n and k");
      }
      n = *states;
      k = *letters;
      if (n > (std::size_t{1} << 31) || n * k > (std::size_t{1} << 31)) {
        throw ParseError(line_no, "automaton too large");
      }
      table.reserve(n * k);
      have_header = true;
      continue;
    }

    if (table.size() == n * k) throw ParseError(line_no, "unexpected content after " + std::to_string(k) + " rows");
    if (tokens.size() != n) {
      throw ParseError(line_no, "row has " + std::to_string(tokens.size()) + " entries, expected " + std::to_string(n));
    }
    for (std::string_view token : tokens) {
      const auto value = parse_index(token);
      if (!value) throw ParseError(line_no, "'" + std::string(token) + "' is not a state index");
      if (*value >= n) throw ParseError(line_no, "state " + std::string(token) + " out of range [0, " + std::to_string(n) + ")");
      table.push_back(static_cast<State>(*value));
    }
  }

  if (!have_header) throw ParseError(line_no + 1, "missing header 'dfa <n> <k>'");
  if (table.size() != n * k) {
    throw ParseError(line_no + 1, "expected " + std::to_string(k) + " rows, found " + std::to_string(table.size() / n));
  }
  return Automaton(n, k, std::move(table));
}

std::string serialize_automaton(const Automaton& automaton) {
  std::string out = "dfa " + std::to_string(automaton.states()) + " " + std::to_string(automaton.letters()) + "\n";
  for (Letter a = 0; a < automaton.letters(); ++a) {
    const auto row = automaton.row(a);
    for (std::size_t q = 0; q < row.size(); ++q) {
      if (q > 0) out += ' ';
      out += std::to_string(row[q]);
    }
    out += '\n';
  }
  return out;
}

StateSet parse_subset(std::string_view text, std::size_t universe, bool allow_empty) {
  StateSet s(universe);
  if (text.empty()) {
    if (allow_empty) return s;
    throw InvalidInput("subset must not be empty");
  }
  std::size_t pos = 0;
  while (true) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view token = text.substr(pos, end - pos);
    const auto value = parse_index(token);
    if (!value) throw InvalidInput("'" + std::string(token) + "' is not a state index");
    if (*value >= universe) {
      throw InvalidInput("state " + std::to_string(*value) + " out of range [0, " + std::to_string(universe) + ")");
    }
    const auto q = static_cast<State>(*value);
    if (s.contains(q)) throw InvalidInput("state " + std::to_string(q) + " listed twice");
    s.insert(q);
    if (end == text.size()) break;
    pos = end + 1;
  }
  return s;
}

std::string format_word(const Word& w, std::size_t alphabet_size) {
  if (w.empty()) return "ε";
  std::string out;
  if (alphabet_size <= 26) {
    w.for_each([&](Letter a) { out += static_cast<char>('a' + a); });
  } else {
    w.for_each([&](Letter a) {
      if (!out.empty()) out += '.';
      out += std::to_string(a);
    });
  }
  return out;
}

}  // namespace crdfa
