#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "fgkit/report.hpp"
#include "fgkit/surface_family.hpp"
#include "fgkit/word.hpp"

namespace fgkit::cli {

namespace {

int to_int(std::string_view s) {
  int value = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || end != s.data() + s.size()) {
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  }
  return value;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

ReportFormat parse_format(const std::string& s) {
  if (s == "json") return ReportFormat::json;
  if (s == "csv") return ReportFormat::csv;
  return ReportFormat::table;
}

// Writes to --out when given, otherwise to `out`.
bool emit(const std::string& text, const std::string& path, std::ostream& out, std::ostream& err) {
  if (path.empty()) {
    out << text;
    return true;
  }
  std::ofstream file(path, std::ios::binary);
  file << text;
  if (!file) {
    err << "error: cannot write " << path << '\n';
    return false;
  }
  return true;
}

struct WordArgs {
  std::string op;
  std::vector<std::string> words;
  std::string alphabet = "y1,y2,y3";
  bool unoriented = false;
  bool show_conjugator = false;
};

struct ReportArgs {
  std::uint64_t seed = kDefaultSeed;
  std::string format = "json";
  std::string out_path;
  bool no_timings = false;
};

int run_word(const WordArgs& a, std::ostream& out, std::ostream& err) {
  AlphabetPtr alphabet;
  try {
    alphabet = Alphabet::make(split(a.alphabet, ','));
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  const std::size_t arity = a.op == "concat" ? 0 : 1;
  if ((arity == 1 && a.words.size() != 1) || (arity == 0 && a.words.empty())) {
    err << "error: '" << a.op << "' expects " << (arity == 1 ? "exactly one word" : "at least one word") << '\n';
    return kUsage;
  }
  std::vector<Word> words;
  try {
    for (const auto& text : a.words) words.push_back(parse_word(text, alphabet));
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  }

  if (a.op == "reduce") {
    out << render_word(words.front()) << '\n';
  } else if (a.op == "invert") {
    out << render_word(invert(words.front())) << '\n';
  } else if (a.op == "concat") {
    Word acc(alphabet);
    for (const auto& w : words) acc = concat(acc, w);
    out << render_word(acc) << '\n';
  } else if (a.op == "cyclic") {
    const auto [core, conjugator] = cyclic_reduce(words.front());
    out << render_letters(*alphabet, core.letters()) << '\n';
    if (a.show_conjugator) out << "conjugator: " << render_word(conjugator) << '\n';
  } else {
    const CyclicWord c =
        canonical_class(words.front(), a.unoriented ? Orientation::unoriented : Orientation::oriented);
    out << render_letters(*alphabet, c.letters()) << '\n';
  }
  return kSuccess;
}

int run_verify(int g, int l, const ReportArgs& a, std::ostream& out, std::ostream& err) {
  FamilyParams params;
  try {
    params = FamilyParams::make(g, l);
  } catch (const InvalidParams& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  const VerificationReport report = verify(params, a.seed);
  if (!emit(render(report, {parse_format(a.format), !a.no_timings}), a.out_path, out, err)) return kUsage;
  for (const auto& w : report.warnings) err << "WARNING: " << w << '\n';
  for (const auto& f : report.failures) err << "FAILURE: " << f << '\n';
  return report.passed() ? kSuccess : kCheckFailed;
}

int run_sweep_cmd(const SweepConfig& config, const ReportArgs& a, std::ostream& out, std::ostream& err) {
  try {
    config.validate();
  } catch (const InvalidParams& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  const SweepResult result = run_sweep(config);
  if (!emit(render(result, {parse_format(a.format), !a.no_timings}), a.out_path, out, err)) return kUsage;
  std::size_t warnings = 0;
  for (const auto& r : result.reports) warnings += r.warnings.size();
  if (warnings) err << "WARNING: " << warnings << " instance(s) with quotient order different from 4l+4\n";
  return result.passed() ? kSuccess : kCheckFailed;
}

int run_identities(int i_max, int j_max, const std::vector<int>& ls, std::ostream& out, std::ostream& err) {
  if (i_max < 0 || j_max < 0) {
    err << "error: bounds must be non-negative\n";
    return kUsage;
  }
  for (int l : ls) {
    if (l < 3) {
      err << "error: l must be >= 3\n";
      return kUsage;
    }
  }
  for (int l : ls) {
    if (const auto failure = find_shuffle_failure(i_max, j_max, l)) {
      out << "FAIL branch=" << to_string(failure->branch) << " i=" << failure->i << " j=" << failure->j
          << " l=" << failure->l << '\n';
      return kCheckFailed;
    }
  }
  out << "OK identities hold for i<=" << i_max << " j<=" << j_max << " over " << ls.size() << " value(s) of l\n";
  return kSuccess;
}

}  // namespace

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  for (const auto& part : split(text, ',')) {
    std::string_view p = part;
    auto range = p.find("..");
    std::size_t sep_len = 2;
    if (range == std::string_view::npos) {
      range = p.find('-', 1);
      sep_len = 1;
    }
    if (range == std::string_view::npos) {
      out.push_back(to_int(p));
      continue;
    }
    const int lo = to_int(p.substr(0, range));
    const int hi = to_int(p.substr(range + sep_len));
    if (hi < lo) throw std::invalid_argument("empty range '" + part + "'");
    for (int v = lo; v <= hi; ++v) out.push_back(v);
  }
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"fgkit: free-group verification of the surface-map family", "fgkit"};
  app.require_subcommand(1);

  WordArgs word_args;
  auto* word = app.add_subcommand("word", "Reduce, invert, multiply or canonicalize words");
  word->add_option("op", word_args.op, "reduce | invert | concat | cyclic | canon")
      ->required()
      ->check(CLI::IsMember({"reduce", "invert", "concat", "cyclic", "canon"}));
  word->add_option("words", word_args.words, "word text, e.g. \"y1 y2^-3\"")->required();
  word->add_option("--alphabet", word_args.alphabet, "comma-separated generator names");
  word->add_flag("--unoriented", word_args.unoriented, "canon: identify a class with its inverse");
  word->add_flag("--conjugator", word_args.show_conjugator, "cyclic: also print the conjugator");

  auto add_report_options = [](CLI::App* cmd, ReportArgs& a) {
    cmd->add_option("--seed", a.seed, "seed for randomized checks");
    cmd->add_option("--format", a.format, "json | csv | table")->check(CLI::IsMember({"json", "csv", "table"}));
    cmd->add_option("--out", a.out_path, "write the report to PATH");
    cmd->add_flag("--no-timings", a.no_timings, "omit timings (deterministic output)");
  };

  int g = 0, l = 0;
  ReportArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Verify one (g, l) instance");
  verify_cmd->add_option("--g", g, "even genus >= 2")->required();
  verify_cmd->add_option("--l", l, "winding parameter >= 3")->required();
  add_report_options(verify_cmd, verify_args);

  std::string g_list = "2,4,6,8", l_list = "3..12";
  unsigned parallel = 1;
  ReportArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Verify a grid of instances plus slope distinctness");
  sweep->add_option("--g-list", g_list, "even genus values, e.g. 2,4,6,8");
  sweep->add_option("--l-list", l_list, "l values, e.g. 3..12");
  sweep->add_option("--parallel", parallel, "worker threads");
  add_report_options(sweep, sweep_args);

  int i_max = 6, j_max = 6;
  std::string id_l_list = "3..12";
  auto* identities = app.add_subcommand("identities", "Check the w1/w2 shuffle identities");
  identities->add_option("--i-max", i_max, "largest i");
  identities->add_option("--j-max", j_max, "largest j");
  identities->add_option("--l-list,--l", id_l_list, "l values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*word) return run_word(word_args, out, err);
    if (*verify_cmd) return run_verify(g, l, verify_args, out, err);
    if (*sweep) {
      SweepConfig config;
      config.g_values = parse_int_list(g_list);
      config.l_values = parse_int_list(l_list);
      config.seed = sweep_args.seed;
      config.parallelism = parallel;
      return run_sweep_cmd(config, sweep_args, out, err);
    }
    if (*identities) return run_identities(i_max, j_max, parse_int_list(id_l_list), out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace fgkit::cli
