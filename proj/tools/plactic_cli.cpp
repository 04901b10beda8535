// plactic: command-line front end for the timed plactic library.
//
// Exit codes: 0 success, 1 a property or agreement check failed, 2 bad input.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "plactic/fuzz.hpp"
#include "plactic/io.hpp"
#include "plactic/plactic.hpp"
#include "plactic/svg.hpp"

namespace {

using namespace plactic;
using io::json;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_input = 2;

// Thrown when a check run by a command fails; carries the JSON to print.
struct check_failed {
  json report;
};

struct Globals {
  std::optional<int> n;
  std::string format = "json";
  std::string output;
  bool format_given = false;
};

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// "-" is stdin; otherwise a path.
std::string read_source(const std::string& path) {
  if (path == "-") return read_all(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_all(in);
}

// Arguments starting with '@' name a file holding the actual text.
std::string argument_text(const std::string& arg) {
  return !arg.empty() && arg[0] == '@' ? read_source(arg.substr(1)) : arg;
}

void write_output(const Globals& g, const std::string& text) {
  if (g.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(g.output);
  if (!out) throw std::runtime_error("cannot write " + g.output);
  out << text;
}

std::string text_tableau(const TimedTableau& t) {
  std::string out;
  for (std::size_t i = 0; i < t.row_count(); ++i) {
    out += "row " + std::to_string(i + 1) + ": " + format_word(t.rows()[i]) + "\n";
  }
  out += "shape: " + format_partition(t.shape()) + "\n";
  return out;
}

std::string text_durations(const std::vector<Duration>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].str();
  return out + ")";
}

std::string text_move(const KnuthMove& m) {
  return io::to_string(m.kind) + " " + io::to_string(m.direction) + " @" + m.offset.str() + " (" +
         m.lx.str() + ", " + m.ly.str() + ", " + m.lz.str() + ")";
}

std::string text_gt(const GTPattern& g) {
  std::string out;
  for (std::size_t j = 1; j <= g.size(); ++j) {
    const auto row = g.row(j);
    out += text_durations(std::vector<Duration>(row.begin(), row.end())) + "\n";
  }
  return out;
}

void emit(const Globals& g, const json& j, const std::string& text) {
  write_output(g, g.format == "json" ? j.dump(2) + "\n" : text);
}

TimedWord word_arg(const Globals& g, const std::string& arg) {
  return parse_word(argument_text(arg), g.n);
}

TimedTableau tableau_arg(const Globals& g, const std::string& arg) {
  return io::parse_tableau(argument_text(arg), g.n);
}

// ---------------------------------------------------------------------------

void cmd_ptab(const Globals& g, const std::string& word, bool trace) {
  const TimedWord w = word_arg(g, word);
  const auto norm = normalize_with_trace(w);
  json j = io::to_json(norm.tableau);
  std::string text = text_tableau(norm.tableau);
  if (trace) {
    j["trace"] = io::to_json(norm.trace);
    for (const auto& m : norm.trace) text += text_move(m) + "\n";
  }
  emit(g, j, text);
}

void cmd_insert(const Globals& g, const std::string& tableau, const std::string& row) {
  const TimedTableau t = tableau_arg(g, tableau);
  const TimedTableau out = insert(t, parse_word(argument_text(row), t.alphabet_size()));
  emit(g, io::to_json(out), text_tableau(out));
}

void cmd_delete(const Globals& g, const std::string& tableau, const std::string& shape_text) {
  const TimedTableau t = tableau_arg(g, tableau);
  const auto d = delete_row(t, io::parse_partition(shape_text));
  json j{{"row", io::to_json(d.row)}, {"tableau", io::to_json(d.tableau)}};
  emit(g, j, "row: " + format_word(d.row) + "\n" + text_tableau(d.tableau));
}

void cmd_greene(const Globals& g, const std::string& word, std::size_t k, bool oracle, std::size_t cap) {
  const TimedWord w = word_arg(g, word);
  const Duration fast = greene(w, k);
  json j{{"k", k}, {"a_k", io::to_json(fast)}};
  std::string text = "a_" + std::to_string(k) + " = " + fast.str() + "\n";
  if (oracle) {
    const Duration slow = greene_oracle(w, k, cap);
    j["oracle"] = io::to_json(slow);
    j["agree"] = slow == fast;
    text += "oracle = " + slow.str() + "\n";
    if (slow != fast) throw check_failed{j};
  }
  emit(g, j, text);
}

void cmd_knuth_equal(const Globals& g, const std::string& a, const std::string& b) {
  TimedWord v = word_arg(g, a);
  TimedWord w = word_arg(g, b);
  if (!g.n) {
    const int n = std::max(v.alphabet_size(), w.alphabet_size());
    v = v.with_alphabet(n);
    w = w.with_alphabet(n);
  }
  const bool eq = equivalent(v, w);
  json j{{"equivalent", eq},
         {"P_left", io::to_json(insertion_tableau(v))},
         {"P_right", io::to_json(insertion_tableau(w))}};
  emit(g, j, eq ? "equivalent\n" : "not equivalent\n");
}

void cmd_knuth_trace(const Globals& g, const std::string& word, const std::string& replay_path) {
  const TimedWord w = word_arg(g, word);
  const TimedTableau p = insertion_tableau(w);
  if (replay_path.empty()) {
    const auto norm = normalize_with_trace(w);
    json j{{"word", io::to_json(w)}, {"trace", io::to_json(norm.trace)},
           {"reading_word", io::to_json(norm.tableau.reading_word())}};
    std::string text;
    for (const auto& m : norm.trace) text += text_move(m) + "\n";
    emit(g, j, text + "-> " + format_word(norm.tableau.reading_word()) + "\n");
    return;
  }
  const json doc = json::parse(read_source(replay_path));
  const auto trace = io::trace_from_json(doc.is_object() ? doc.at("trace") : doc);
  json j{{"word", io::to_json(w)}, {"moves", trace.size()}};
  TimedWord cur = w;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    try {
      cur = apply_move(cur, trace[i]);
    } catch (const invalid_move& e) {
      j["valid"] = false;
      j["failed_move"] = i;
      j["reason"] = e.what();
      throw check_failed{j};
    }
  }
  j["result"] = io::to_json(cur);
  j["valid"] = cur == p.reading_word();
  if (cur != p.reading_word()) {
    j["reason"] = "trace does not end at the reading word of P(w)";
    throw check_failed{j};
  }
  emit(g, j, "valid: " + format_word(w) + " -> " + format_word(cur) + "\n");
}

void cmd_rsk(const Globals& g, const std::string& path, const std::string& algo, bool emit_gt,
             bool timing) {
  const NonNegMatrix a = io::parse_matrix(read_source(path));
  json times = json::object();
  auto timed = [&](const char* name, auto&& f) {
    const auto start = std::chrono::steady_clock::now();
    RskResult r = f();
    const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
    times[name] = ms.count();
    return r;
  };

  std::optional<RskResult> result;
  json j;
  if (algo == "direct" || algo == "all") result = timed("direct", [&] { return rsk(a); });
  if (algo == "recording" || algo == "all") {
    auto r = timed("recording", [&] { return rsk_recording(a); });
    if (!result) result = r;
    else if (r != *result) j["mismatch"] = "recording";
  }
  if (algo == "shadows" || algo == "all") {
    std::optional<RskResult> r;
    try {
      r = timed("shadows", [&] { return rsk_shadows(a); });
    } catch (const error&) {
      j["mismatch"] = "shadows";
    }
    if (r && !result) result = r;
    else if (r && *r != *result) j["mismatch"] = "shadows";
  }
  if (!result) throw std::invalid_argument("unknown --algo " + algo);

  j["m"] = a.rows();
  j["n"] = a.cols();
  j["algo"] = algo;
  j["P"] = io::to_json(result->p);
  j["Q"] = io::to_json(result->q);
  j["shape"] = io::to_json(result->p.shape());
  if (emit_gt) j["gt"] = {{"P", io::to_json(to_gt(result->p))}, {"Q", io::to_json(to_gt(result->q))}};
  if (timing) j["timing_ms"] = times;
  if (algo == "all") j["agreement"] = !j.contains("mismatch");
  if (j.contains("mismatch")) {
    const NonNegMatrix small = fuzz::shrink(a, [](const NonNegMatrix& m) {
      return fuzz::check_matrix(m).has_value();
    });
    j["counterexample"] = io::to_json(small);
    throw check_failed{j};
  }

  std::string text = "P:\n" + text_tableau(result->p) + "Q:\n" + text_tableau(result->q);
  if (emit_gt) text += "GT(P):\n" + text_gt(to_gt(result->p)) + "GT(Q):\n" + text_gt(to_gt(result->q));
  if (timing) {
    for (const auto& [name, ms] : times.items()) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%s: %.3f ms\n", name.c_str(), ms.get<double>());
      text += buf;
    }
  }
  emit(g, j, text);
}

void cmd_rsk_inverse(const Globals& g, const std::string& path, const std::string& p_arg,
                     const std::string& q_arg) {
  TimedTableau p, q;
  if (!path.empty()) {
    const json doc = json::parse(read_source(path));
    p = io::tableau_from_json(doc.at("P"));
    q = io::tableau_from_json(doc.at("Q"));
  } else {
    if (p_arg.empty() || q_arg.empty()) throw std::invalid_argument("give an rsk JSON file or both --p and --q");
    p = io::parse_tableau(argument_text(p_arg));
    q = io::parse_tableau(argument_text(q_arg));
  }
  const NonNegMatrix a = rsk_inverse(p, q);
  // CSV unless JSON was asked for explicitly.
  if (g.format_given && g.format == "json") {
    write_output(g, io::to_json(a).dump(2) + "\n");
  } else {
    write_output(g, io::format_csv(a));
  }
}

void cmd_gt(const Globals& g, const std::string& arg, bool inverse) {
  if (inverse) {
    const GTPattern pattern = io::gt_from_json(json::parse(argument_text(arg)));
    const TimedTableau t = from_gt(pattern);
    emit(g, io::to_json(t), text_tableau(t));
    return;
  }
  const GTPattern pattern = to_gt(tableau_arg(g, arg));
  emit(g, io::to_json(pattern), text_gt(pattern));
}

void cmd_viz(const Globals& g, const std::string& arg, const RenderSpec& spec) {
  const std::string text = argument_text(arg);
  TimedTableau t;
  try {
    t = io::parse_tableau(text, g.n);
  } catch (const not_a_tableau&) {
    t = insertion_tableau(parse_word(text, g.n));
  } catch (const not_a_row&) {
    t = insertion_tableau(parse_word(text, g.n));
  }
  write_output(g, render_svg(t, spec));
}

void cmd_fuzz(const Globals& g, const fuzz::Options& opt) {
  const auto report = fuzz::run(opt);
  json failures = json::array();
  std::string text = "cases: " + std::to_string(report.cases) + "\nfailures: " +
                     std::to_string(report.failures.size()) + "\n";
  for (const auto& f : report.failures) {
    json item{{"case", f.case_index}, {"property", f.property}, {"detail", f.detail}};
    text += "case " + std::to_string(f.case_index) + ": " + f.property + ": " + f.detail + "\n";
    if (f.matrix) {
      item["matrix"] = io::to_json(*f.matrix);
      text += io::format_csv(*f.matrix);
    }
    if (f.word) {
      item["word"] = io::to_json(*f.word);
      text += format_word(*f.word) + "\n";
    }
    failures.push_back(std::move(item));
  }
  json j{{"seed", opt.seed}, {"cases", report.cases}, {"ok", report.ok()}, {"failures", failures}};
  emit(g, j, text);
  if (!report.ok()) throw check_failed{};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Timed plactic monoid: tableaux, Knuth certificates, Greene invariants, real RSK"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--n", g.n, "Alphabet size (default: largest letter present)")->check(CLI::PositiveNumber);
  auto* format_opt = app.add_option("--format", g.format, "Output format")
                         ->check(CLI::IsMember({"json", "text"}));
  app.add_option("-o,--output", g.output, "Write output to this file instead of stdout");

  std::string word, word2, tableau, row, shape, path, replay_path, algo = "direct", p_arg, q_arg;
  bool trace = false, oracle = false, emit_gt = false, timing = false, inverse = false;
  std::size_t k = 1, cap = default_oracle_cap;
  RenderSpec spec;
  fuzz::Options fopt;
  std::string fault;

  auto* ptab = app.add_subcommand("ptab", "Insertion tableau P(w)");
  ptab->add_option("word", word, "Timed word, e.g. \"3^0.8 1^0.5 4^1.1\"")->required();
  ptab->add_flag("--trace", trace, "Include the Knuth certificate");

  auto* ins = app.add_subcommand("insert", "Insert a row into a tableau");
  ins->add_option("tableau", tableau, "Tableau (reading word or JSON rows)")->required();
  ins->add_option("row", row, "Row to insert")->required();

  auto* del = app.add_subcommand("delete", "Delete down to a given shape");
  del->add_option("tableau", tableau, "Tableau (reading word or JSON rows)")->required();
  del->add_option("--shape", shape, "Target shape, e.g. 3.7,1.9")->required();

  auto* gre = app.add_subcommand("greene", "Greene invariant a_k(w)");
  gre->add_option("word", word, "Timed word")->required();
  gre->add_option("--k", k, "Number of disjoint rows")->check(CLI::PositiveNumber);
  gre->add_flag("--oracle", oracle, "Also run the brute-force oracle and compare");
  gre->add_option("--cap", cap, "Oracle cap on the integer-scaled length");

  auto* keq = app.add_subcommand("knuth-equal", "Decide Knuth equivalence of two words");
  keq->add_option("v", word, "First word")->required();
  keq->add_option("w", word2, "Second word")->required();

  auto* ktr = app.add_subcommand("knuth-trace", "Emit or verify a Knuth certificate");
  ktr->add_option("word", word, "Timed word")->required();
  ktr->add_option("--replay", replay_path, "Trace JSON to check against the word");

  auto* rs = app.add_subcommand("rsk", "Real RSK of a nonnegative matrix");
  rs->add_option("matrix", path, "CSV or JSON matrix file ('-' for stdin)")->required();
  rs->add_option("--algo", algo, "direct, recording, shadows or all")
      ->check(CLI::IsMember({"direct", "recording", "shadows", "all"}));
  rs->add_flag("--emit-gt", emit_gt, "Include Gelfand-Tsetlin patterns");
  rs->add_flag("--timing", timing, "Include per-algorithm wall time");

  auto* rinv = app.add_subcommand("rsk-inverse", "Recover the matrix from (P, Q)");
  rinv->add_option("input", path, "JSON output of the rsk command ('-' for stdin)");
  rinv->add_option("--p", p_arg, "Insertion tableau");
  rinv->add_option("--q", q_arg, "Recording tableau");

  auto* gtc = app.add_subcommand("gt", "Tableau to Gelfand-Tsetlin pattern");
  gtc->add_option("input", tableau, "Tableau, or a pattern JSON with --inverse")->required();
  gtc->add_flag("--inverse", inverse, "Pattern to tableau");

  auto* viz = app.add_subcommand("viz", "Render a tableau (or P of a word) as SVG");
  viz->add_option("input", tableau, "Tableau or word")->required();
  viz->add_option("--ppu", spec.pixels_per_unit, "Pixels per unit of duration")->check(CLI::PositiveNumber);
  viz->add_option("--row-height", spec.row_height, "Row height in pixels")->check(CLI::PositiveNumber);

  auto* fz = app.add_subcommand("fuzz", "Seeded differential checks over random inputs");
  fz->add_option("--seed", fopt.seed, "Seed");
  fz->add_option("--cases", fopt.cases, "Number of cases");
  fz->add_option("--max-m", fopt.max_m, "Largest matrix row count")->check(CLI::PositiveNumber);
  fz->add_option("--max-n", fopt.max_n, "Largest matrix column count")->check(CLI::PositiveNumber);
  fz->add_option("--denom-bound", fopt.denom_bound, "Largest denominator")->check(CLI::PositiveNumber);
  fz->add_option("--inject-fault", fault, "Run a deliberately wrong variant")
      ->check(CLI::IsMember({"maximal-leading-points"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_input;
  }
  g.format_given = format_opt->count() > 0;

  try {
    if (*ptab) cmd_ptab(g, word, trace);
    else if (*ins) cmd_insert(g, tableau, row);
    else if (*del) cmd_delete(g, tableau, shape);
    else if (*gre) cmd_greene(g, word, k, oracle, cap);
    else if (*keq) cmd_knuth_equal(g, word, word2);
    else if (*ktr) cmd_knuth_trace(g, word, replay_path);
    else if (*rs) cmd_rsk(g, path, algo, emit_gt, timing);
    else if (*rinv) cmd_rsk_inverse(g, path, p_arg, q_arg);
    else if (*gtc) cmd_gt(g, tableau, inverse);
    else if (*viz) cmd_viz(g, tableau, spec);
    else if (*fz) {
      if (fault == "maximal-leading-points") fopt.leading_rule = LeadingRule::maximal;
      cmd_fuzz(g, fopt);
    }
  } catch (const check_failed& f) {
    if (!f.report.is_null()) write_output(g, f.report.dump(2) + "\n");
    return exit_failed;
  } catch (const reconstruction_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_failed;
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return exit_input;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  }
  return exit_ok;
}
