#include "freerot/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "freerot/mat3.hpp"
#include "freerot/rotmap.hpp"
#include "freerot/suites.hpp"
#include "freerot/words.hpp"

namespace freerot::cli {

namespace {

// A word-grammar failure with a human position ("line 3, column 2").
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InputWord {
  std::string text;
  Word word;
};

Word parse_at(std::string_view text, const std::string& where) {
  try {
    return parse_word(text);
  } catch (const ParseError& e) {
    throw InputError(where + ", column " + std::to_string(e.index() + 1) + ": " +
                     e.what());
  }
}

// One word per line; '#' starts a comment line; an empty line is the empty
// word.
void read_word_lines(std::istream& in, const std::string& source,
                     std::vector<InputWord>& words) {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line.front() == '#') continue;
    words.push_back({line, parse_at(line, source + "line " + std::to_string(lineno))});
  }
}

std::vector<InputWord> gather_words(const RunConfig& cfg, std::istream& in) {
  std::vector<InputWord> words;
  if (cfg.input) {
    std::ifstream file(*cfg.input);
    if (!file) throw InputError("cannot open input file '" + *cfg.input + "'");
    read_word_lines(file, *cfg.input + ": ", words);
  }
  for (std::size_t i = 0; i < cfg.words.size(); ++i) {
    const std::string& arg = cfg.words[i];
    if (arg == "-") {
      read_word_lines(in, "stdin: ", words);
    } else {
      words.push_back({arg, parse_at(arg, "argument " + std::to_string(i + 1))});
    }
  }
  return words;
}

InputWord single_word(const RunConfig& cfg, std::istream& in, const char* command) {
  auto words = gather_words(cfg, in);
  if (words.size() != 1) {
    throw InputError(std::string(command) + " expects exactly one word, got " +
                     std::to_string(words.size()));
  }
  return std::move(words.front());
}

int cmd_reduce(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const auto words = gather_words(cfg, in);
  if (cfg.format == Format::Json) {
    auto arr = nlohmann::json::array();
    for (const auto& w : words) {
      arr.push_back({{"input", w.text}, {"reduced", format_word(reduce(w.word))}});
    }
    out << nlohmann::json{{"words", arr}}.dump(2) << "\n";
  } else {
    for (const auto& w : words) out << format_word(reduce(w.word)) << "\n";
  }
  return static_cast<int>(ExitCode::Ok);
}

int cmd_compose(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const auto words = gather_words(cfg, in);
  ReducedWord acc;
  for (const auto& w : words) acc = compose(acc, reduce(w.word));
  if (cfg.format == Format::Json) {
    auto inputs = nlohmann::json::array();
    for (const auto& w : words) inputs.push_back(w.text);
    out << nlohmann::json{{"inputs", inputs}, {"composed", format_word(acc)}}.dump(2)
        << "\n";
  } else {
    out << format_word(acc) << "\n";
  }
  return static_cast<int>(ExitCode::Ok);
}

int cmd_inverse(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const auto words = gather_words(cfg, in);
  if (cfg.format == Format::Json) {
    auto arr = nlohmann::json::array();
    for (const auto& w : words) {
      arr.push_back({{"input", w.text}, {"inverse", format_word(inverse(WordView(w.word)))}});
    }
    out << nlohmann::json{{"words", arr}}.dump(2) << "\n";
  } else {
    for (const auto& w : words) out << format_word(inverse(WordView(w.word))) << "\n";
  }
  return static_cast<int>(ExitCode::Ok);
}

int cmd_rotation(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const InputWord w = single_word(cfg, in, "rotation");
  const ReducedWord reduced = reduce(w.word);
  const Mat3 m = rotation(reduced);
  if (cfg.format == Format::Json) {
    out << nlohmann::json{{"word", w.text},
                          {"reduced", format_word(reduced)},
                          {"matrix", to_json(m)}}
               .dump(2)
        << "\n";
  } else {
    out << to_pretty_string(m);
  }
  return static_cast<int>(ExitCode::Ok);
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  SuiteConfig sc;
  sc.max_len = cfg.max_len;
  sc.jobs = cfg.jobs;
  sc.seed = cfg.seed;
  sc.samples = cfg.samples;

  std::vector<SuiteResult> results;
  const bool all = cfg.suite == "all";
  if (all || cfg.suite == "group") results.push_back(run_group_suite(sc));
  if (all || cfg.suite == "rotation-axioms") results.push_back(run_rotation_axioms_suite(sc));
  if (all || cfg.suite == "freeness") results.push_back(run_freeness_suite(sc));
  if (all || cfg.suite == "injectivity") results.push_back(run_injectivity_suite(sc));

  bool passed = true;
  for (const auto& r : results) passed = passed && r.ok();

  if (cfg.format == Format::Json) {
    auto suites = nlohmann::json::array();
    for (const auto& r : results) suites.push_back(to_json(r));
    // jobs is left out on purpose: the report must not depend on it.
    out << nlohmann::json{{"config",
                           {{"suite", cfg.suite},
                            {"max_len", cfg.max_len},
                            {"seed", cfg.seed},
                            {"samples", cfg.samples}}},
                          {"suites", suites},
                          {"passed", passed}}
               .dump(2)
        << "\n";
  } else {
    for (const auto& r : results) {
      out << (r.ok() ? "PASS " : "FAIL ") << r.name << ": " << r.checks << " checks, "
          << r.failures << " failures\n";
      for (const auto& c : r.counterexamples) out << "  counterexample: " << c << "\n";
    }
    out << (passed ? "all suites passed" : "verification FAILED") << "\n";
  }
  return static_cast<int>(passed ? ExitCode::Ok : ExitCode::VerificationFailed);
}

int dispatch(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  switch (cfg.command) {
    case Command::Reduce: return cmd_reduce(cfg, in, out);
    case Command::Compose: return cmd_compose(cfg, in, out);
    case Command::Inverse: return cmd_inverse(cfg, in, out);
    case Command::Rotation: return cmd_rotation(cfg, in, out);
    case Command::Verify: return cmd_verify(cfg, out);
  }
  return static_cast<int>(ExitCode::Usage);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact free group of rotations: word algebra, rotation matrices and "
               "freeness certificates",
               "freerot"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--out", cfg.output, "Write output to FILE instead of stdout");

  auto add_word_inputs = [&](CLI::App* sub, const char* what) {
    sub->add_option("words", cfg.words, what);
    sub->add_option("--input", cfg.input, "Read words from FILE, one per line");
  };

  auto* reduce_cmd = app.add_subcommand("reduce", "Print the reduced form of each word");
  add_word_inputs(reduce_cmd, "Words to reduce; '-' reads lines from stdin");

  auto* compose_cmd = app.add_subcommand("compose", "Compose words left to right");
  add_word_inputs(compose_cmd, "Words to compose; '-' reads lines from stdin");

  auto* inverse_cmd = app.add_subcommand("inverse", "Print the (unreduced) inverse of each word");
  add_word_inputs(inverse_cmd, "Words to invert; '-' reads lines from stdin");

  auto* rotation_cmd = app.add_subcommand("rotation", "Print the exact rotation matrix of a word");
  add_word_inputs(rotation_cmd, "Word; '-' reads it from stdin");

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("suite", cfg.suite, "Suite to run")
      ->check(CLI::IsMember({"group", "rotation-axioms", "freeness", "injectivity", "all"}))
      ->capture_default_str();
  verify_cmd->add_option("--max-len", cfg.max_len, "Longest word checked exhaustively")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify_cmd->add_option("--jobs", cfg.jobs, "Worker threads for the freeness walk")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify_cmd->add_option("--seed", cfg.seed, "Seed for randomized properties")
      ->capture_default_str();
  verify_cmd->add_option("--samples", cfg.samples, "Random trials per property")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  for (auto* sub : {reduce_cmd, compose_cmd, inverse_cmd, rotation_cmd, verify_cmd}) {
    sub->fallthrough();
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : static_cast<int>(ExitCode::Usage);
  }

  cfg.format = format == "json" ? Format::Json : Format::Text;
  if (reduce_cmd->parsed()) cfg.command = Command::Reduce;
  if (compose_cmd->parsed()) cfg.command = Command::Compose;
  if (inverse_cmd->parsed()) cfg.command = Command::Inverse;
  if (rotation_cmd->parsed()) cfg.command = Command::Rotation;
  if (verify_cmd->parsed()) cfg.command = Command::Verify;

  try {
    std::ofstream file;
    if (cfg.output) {
      file.open(*cfg.output);
      if (!file) {
        err << "error: cannot open output file '" << *cfg.output << "'\n";
        return static_cast<int>(ExitCode::Usage);
      }
    }
    return dispatch(cfg, in, cfg.output ? static_cast<std::ostream&>(file) : out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::Usage);
  }
}

}  // namespace freerot::cli
