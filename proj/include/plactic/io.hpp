#pragma once

// JSON and CSV forms of the library's values.  Durations are always written
// as exact strings ("0.7", "1/3"); readers also accept JSON numbers.

#include <nlohmann/json.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "plactic/error.hpp"
#include "plactic/knuth.hpp"
#include "plactic/rsk.hpp"
#include "plactic/tableau.hpp"
#include "plactic/word.hpp"

namespace plactic::io {

using json = nlohmann::json;

inline json to_json(const Duration& d) { return d.str(); }

inline Duration duration_from_json(const json& j) {
  if (j.is_string()) return Duration::parse(j.get<std::string>());
  if (j.is_number_unsigned() || j.is_number_integer()) {
    const auto v = j.get<long long>();
    if (v < 0) throw domain_error("negative duration");
    return Duration(static_cast<long>(v));
  }
  if (j.is_number_float()) {
    // nlohmann prints the shortest round-tripping decimal.
    const std::string text = j.dump();
    if (text.find_first_of("eE-") != std::string::npos) {
      throw parse_error(0, "duration " + text + " must be a plain nonnegative decimal");
    }
    return Duration::parse(text);
  }
  throw parse_error(0, "duration must be a string or number");
}

inline json to_json(const std::vector<Duration>& v) {
  json out = json::array();
  for (const auto& d : v) out.push_back(to_json(d));
  return out;
}

inline json to_json(const RealPartition& p) {
  return to_json(std::vector<Duration>(p.parts().begin(), p.parts().end()));
}

inline std::vector<Duration> durations_from_json(const json& j) {
  if (!j.is_array()) throw parse_error(0, "expected an array of durations");
  std::vector<Duration> out;
  for (const auto& x : j) out.push_back(duration_from_json(x));
  return out;
}

// "3.7,1.9", "3.7 1.9", "(3.7, 1.9)" or a JSON array.
inline RealPartition parse_partition(std::string_view text) {
  std::string cleaned;
  for (char c : text) {
    if (c == '(' || c == ')' || c == '[' || c == ']' || c == '"') continue;
    cleaned += (c == ',') ? ' ' : c;
  }
  std::istringstream in(cleaned);
  std::vector<Duration> parts;
  std::string token;
  while (in >> token) parts.push_back(Duration::parse(token));
  return RealPartition(std::move(parts));
}

inline json to_json(const TimedWord& w) { return format_word(w); }

inline json to_json(const TimedTableau& t) {
  json rows = json::array();
  for (const auto& r : t.rows()) rows.push_back(format_word(r));
  return {{"alphabet", t.alphabet_size()},
          {"rows", rows},
          {"reading_word", format_word(t.reading_word())},
          {"shape", to_json(t.shape())},
          {"weight", to_json(weight(t))}};
}

// Accepts a reading-word string, an array of row strings (bottom row first),
// or an object carrying "rows" (and optionally "alphabet").
inline TimedTableau tableau_from_json(const json& j, std::optional<int> alphabet = std::nullopt) {
  if (j.is_string()) return from_reading_word(parse_word(j.get<std::string>(), alphabet));
  const json* rows_json = &j;
  if (j.is_object()) {
    if (!alphabet && j.contains("alphabet")) alphabet = j.at("alphabet").get<int>();
    if (j.contains("rows")) {
      rows_json = &j.at("rows");
    } else if (j.contains("reading_word")) {
      return from_reading_word(parse_word(j.at("reading_word").get<std::string>(), alphabet));
    } else {
      throw parse_error(0, "tableau object needs \"rows\" or \"reading_word\"");
    }
  }
  if (!rows_json->is_array()) throw parse_error(0, "tableau must be a string, array or object");
  std::vector<TimedWord> rows;
  int n = 1;
  for (const auto& r : *rows_json) {
    rows.push_back(parse_word(r.get<std::string>(), alphabet));
    n = std::max(n, rows.back().alphabet_size());
  }
  const int size = alphabet.value_or(n);
  for (auto& r : rows) r = r.with_alphabet(size);
  return TimedTableau(size, std::move(rows));
}

// Text argument: JSON when it starts with '[' or '{', otherwise a reading
// word in the word text format.
inline TimedTableau parse_tableau(std::string_view text, std::optional<int> alphabet = std::nullopt) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && (text[first] == '[' || text[first] == '{')) {
    return tableau_from_json(json::parse(text), alphabet);
  }
  return from_reading_word(parse_word(text, alphabet));
}

inline json to_json(const GTPattern& g) {
  json rows = json::array();
  for (const auto& r : g.rows()) rows.push_back(to_json(r));
  return {{"size", g.size()}, {"rows", rows}};
}

// {"rows": [[l11], [l21, l22], ...]} or the bare array; top row last.
inline GTPattern gt_from_json(const json& j) {
  const json& rows = j.is_object() ? j.at("rows") : j;
  std::vector<std::vector<Duration>> out;
  for (const auto& r : rows) out.push_back(durations_from_json(r));
  return GTPattern(std::move(out));
}

inline std::string to_string(MoveKind k) { return k == MoveKind::k1 ? "K1" : "K2"; }
inline std::string to_string(Direction d) { return d == Direction::forward ? "forward" : "backward"; }

inline json to_json(const KnuthMove& m) {
  return {{"kind", to_string(m.kind)},   {"direction", to_string(m.direction)},
          {"offset", to_json(m.offset)}, {"lx", to_json(m.lx)},
          {"ly", to_json(m.ly)},         {"lz", to_json(m.lz)}};
}

inline json to_json(const std::vector<KnuthMove>& trace) {
  json out = json::array();
  for (const auto& m : trace) out.push_back(to_json(m));
  return out;
}

inline KnuthMove move_from_json(const json& j) {
  KnuthMove m;
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "K1") m.kind = MoveKind::k1;
  else if (kind == "K2") m.kind = MoveKind::k2;
  else throw parse_error(0, "unknown move kind " + kind);
  const auto dir = j.at("direction").get<std::string>();
  if (dir == "forward") m.direction = Direction::forward;
  else if (dir == "backward") m.direction = Direction::backward;
  else throw parse_error(0, "unknown move direction " + dir);
  m.offset = duration_from_json(j.at("offset"));
  m.lx = duration_from_json(j.at("lx"));
  m.ly = duration_from_json(j.at("ly"));
  m.lz = duration_from_json(j.at("lz"));
  return m;
}

inline std::vector<KnuthMove> trace_from_json(const json& j) {
  std::vector<KnuthMove> out;
  for (const auto& m : j) out.push_back(move_from_json(m));
  return out;
}

// ---------------------------------------------------------------------------
// Matrices

inline json to_json(const NonNegMatrix& a) {
  json entries = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(to_json(a(i, j)));
    entries.push_back(row);
  }
  return {{"m", a.rows()}, {"n", a.cols()}, {"entries", entries}};
}

inline NonNegMatrix matrix_from_json(const json& j) {
  std::vector<std::vector<Duration>> rows;
  for (const auto& r : j.at("entries")) rows.push_back(durations_from_json(r));
  NonNegMatrix a(rows);
  if (j.contains("m") && j.at("m").get<std::size_t>() != a.rows()) throw parse_error(0, "m does not match entries");
  if (j.contains("n") && j.at("n").get<std::size_t>() != a.cols()) throw parse_error(0, "n does not match entries");
  return a;
}

// One matrix row per line, entries separated by commas.  Blank lines and
// lines starting with '#' are skipped.
inline NonNegMatrix parse_csv(std::string_view text) {
  std::vector<std::vector<Duration>> rows;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    auto line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    const std::string_view line = text.substr(line_start, line_end - line_start);
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && line[first] != '#') {
      std::vector<Duration> row;
      std::size_t cell = 0;
      while (cell <= line.size()) {
        auto comma = line.find(',', cell);
        if (comma == std::string_view::npos) comma = line.size();
        std::string_view field = line.substr(cell, comma - cell);
        const auto a = field.find_first_not_of(" \t\r");
        const auto b = field.find_last_not_of(" \t\r");
        if (a == std::string_view::npos) throw parse_error(line_start + cell, "empty matrix entry");
        row.push_back(Duration::parse(field.substr(a, b - a + 1), line_start + cell + a));
        cell = comma + 1;
      }
      rows.push_back(std::move(row));
    }
    line_start = line_end + 1;
  }
  if (rows.empty()) throw parse_error(0, "empty matrix");
  return NonNegMatrix(rows);
}

inline std::string format_csv(const NonNegMatrix& a) {
  std::string out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) out += ',';
      out += a(i, j).str();
    }
    out += '\n';
  }
  return out;
}

// JSON when the text starts with '{', CSV otherwise.
inline NonNegMatrix parse_matrix(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return matrix_from_json(json::parse(text));
  return parse_csv(text);
}

}  // namespace plactic::io
