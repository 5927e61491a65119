#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace freerot::cli {

enum class ExitCode : int { Ok = 0, VerificationFailed = 1, Usage = 2 };

enum class Command { Reduce, Compose, Inverse, Rotation, Verify };
enum class Format { Text, Json };

struct RunConfig {
  Command command = Command::Reduce;
  std::size_t max_len = 8;
  std::size_t jobs = 1;
  Format format = Format::Text;
  std::uint64_t seed = 42;
  std::size_t samples = 10000;
  std::vector<std::string> words;
  std::string suite = "all";
  std::optional<std::string> input;
  std::optional<std::string> output;
};

/// Runs the tool with argv-style `args` (without the program name). Reads
/// word lists from `in` when a word argument is "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace freerot::cli
