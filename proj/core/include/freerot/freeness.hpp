#pragma once

// Certificates that the rotation map is injective on F2.
//
// For a reduced word w of length n, rotation(w) sends (0,1,0) to
// (x*sqrt2/3^n, y/3^n, z*sqrt2/3^n) with x, y, z integers. If w is nonempty
// then (x, y, z) is never 0 mod 3, whereas the identity would give
// (0, 3^n, 0). Prepending a letter acts on (x, y, z) by a fixed integer
// matrix, so the classes mod 3 form a finite machine whose reachable set can
// be closed exhaustively; that covers every length at once.

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "freerot/mat3.hpp"
#include "freerot/scalar.hpp"
#include "freerot/words.hpp"

namespace freerot {

struct InvariantTriple {
  Int3 value;
  std::size_t length = 0;

  friend bool operator==(const InvariantTriple&, const InvariantTriple&) = default;
};

using Mod3Class = std::array<std::uint8_t, 3>;

Mod3Class mod3(const Int3& v);

inline bool is_zero_class(const Mod3Class& c) {
  return c[0] == 0 && c[1] == 0 && c[2] == 0;
}

/// A mod-3 class tagged with the first letter of its word (nullopt for the
/// empty word).
struct Mod3State {
  std::optional<Letter> tag;
  Mod3Class cls{};

  friend bool operator==(const Mod3State&, const Mod3State&) = default;
  friend bool operator<(const Mod3State& a, const Mod3State& b);
};

std::string to_string(const Mod3State& s);

/// Integer 3x3 matrix acting on Int3.
using IntMat3 = std::array<std::array<long, 3>, 3>;

/// Prepend action per letter, indexed by `index_of`:
///   a     : (x, y, z) -> (3x, y - 4z, 2y + z)
///   a^-1  : (x, y, z) -> (3x, y + 4z, -2y + z)
///   b     : (x, y, z) -> (x - 2y, 4x + y, 3z)
///   b^-1  : (x, y, z) -> (x + 2y, -4x + y, 3z)
using StepTable = std::array<IntMat3, 4>;

const StepTable& step_table();

Int3 apply(const IntMat3& m, const Int3& v);
Mod3Class apply_mod3(const IntMat3& m, const Mod3Class& c);

/// Scales an image of (0,1,0) under a length-n product back to integers.
/// Throws NonIntegral if the image is not of the expected shape.
InvariantTriple invariant_from_image(const Vec3& image, std::size_t length);

/// From rotation(w) * (0,1,0).
InvariantTriple invariant_exact(const ReducedWord& w);

/// The triple of l.w given that of w.
InvariantTriple invariant_step(Letter l, const InvariantTriple& t,
                               const StepTable& table = step_table());

Mod3State mod3_state(const ReducedWord& w);

struct Violation {
  std::string kind;
  std::string word;
  std::string detail;
};

struct NonidentityReport {
  std::size_t max_len = 0;
  /// Index n holds the number of words of length n visited (index 0 unused).
  std::vector<std::uint64_t> words_checked;
  std::uint64_t total_words = 0;
  std::vector<Violation> violations;
  /// Every tagged class seen, with the shortest length it was first seen at.
  std::map<Mod3State, std::size_t> observed_states;

  bool ok() const noexcept { return violations.empty(); }
};

/// Walks every reduced word of length 1..max_len depth-first, growing words
/// by prepending a letter and carrying the exact product along the path.
/// For each word checks rotation(w) != I, that the invariant read off the
/// exact product is integral and agrees with the step recurrence, and that
/// its class mod 3 is nonzero. The four subtrees rooted at single letters
/// are independent and are split over `jobs` threads; the merged report does
/// not depend on `jobs`. A subtree stops at its first violation.
NonidentityReport check_nonidentity_upto(std::size_t max_len,
                                         std::size_t jobs = 1);

struct Mod3Certificate {
  /// Sorted reachable states, all with a letter tag.
  std::vector<Mod3State> reachable;
  /// A shortest word reaching each state.
  std::map<Mod3State, ReducedWord> witness;
  /// Set when the zero class is reachable.
  std::optional<ReducedWord> counterexample;

  bool ok() const noexcept { return !counterexample.has_value(); }
};

/// Breadth-first closure of the tagged mod-3 machine from the four
/// single-letter states, using every non-cancelling letter as a transition.
Mod3Certificate certify_mod3_machine();
Mod3Certificate certify_mod3_machine(const StepTable& table);

/// States whose witness word does not reproduce the state under
/// invariant_exact. Empty means the certificate replays.
std::vector<Mod3State> replay_witnesses(const Mod3Certificate& cert);

struct Collision {
  std::string first;
  std::string second;
};

struct InjectivityReport {
  std::size_t max_len = 0;
  std::uint64_t words = 0;
  std::uint64_t distinct = 0;
  std::vector<Collision> collisions;
  std::uint64_t pairs_checked = 0;
  /// Random pairs (w1, w2), w1 != w2, with rotation(w1 . w2^-1) = I or
  /// rotation(w1) = rotation(w2).
  std::vector<Collision> pair_failures;

  bool ok() const noexcept {
    return collisions.empty() && pair_failures.empty() && distinct == words;
  }
};

/// Inserts rotation(w) for every reduced w with |w| <= max_len (including
/// the empty word) into a set and checks the set has one entry per word.
/// Then samples `pairs` random pairs of distinct words from `seed` and checks
/// rotation(compose(w1, inverse(w2))) != I.
InjectivityReport check_injectivity_upto(std::size_t max_len,
                                         std::uint64_t seed = 0,
                                         std::size_t pairs = 1000);

struct PartitionReport {
  std::size_t max_len = 0;
  /// Indexed by WordClass.
  std::array<std::uint64_t, 5> bucket_sizes{};
  std::uint64_t union_size = 0;
  std::uint64_t words = 0;
  std::vector<Collision> overlaps;

  bool ok() const noexcept { return overlaps.empty() && union_size == words; }
};

/// Buckets rotation(w), |w| <= max_len, by classify(w).
PartitionReport partition_census(std::size_t max_len);

/// Number of reduced words with 1 <= |w| <= max_len.
std::uint64_t nonempty_word_count_upto(std::size_t max_len) noexcept;

nlohmann::json to_json(const Mod3State& s);
nlohmann::json to_json(const NonidentityReport& r);
nlohmann::json to_json(const Mod3Certificate& c);
nlohmann::json to_json(const InjectivityReport& r);
nlohmann::json to_json(const PartitionReport& r);

}  // namespace freerot
