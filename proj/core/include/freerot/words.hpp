#pragma once

// Words over the alphabet {a, a^-1, b, b^-1} and the free group F2 built on
// them: reduction to canonical form, the group operation and the inverse.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace freerot {

/// The four generators of F2. The declaration order is the enumeration
/// order used by `enumerate`.
enum class Letter : std::uint8_t { GenA = 0, InvA = 1, GenB = 2, InvB = 3 };

inline constexpr std::array<Letter, 4> kLetters = {Letter::GenA, Letter::InvA,
                                                  Letter::GenB, Letter::InvB};

constexpr Letter inverse(Letter l) noexcept {
  // GenA <-> InvA, GenB <-> InvB
  return static_cast<Letter>(static_cast<std::uint8_t>(l) ^ 1u);
}

constexpr std::size_t index_of(Letter l) noexcept {
  return static_cast<std::size_t>(l);
}

/// Text alphabet: a, A, b, B (uppercase is the inverse).
char to_char(Letter l) noexcept;
std::optional<Letter> letter_from_char(char c) noexcept;

/// A weak word: any finite sequence of letters, cancellations allowed.
using Word = std::vector<Letter>;
using WordView = std::span<const Letter>;

enum class WordClass { Empty, AWord, AInvWord, BWord, BInvWord };

std::string_view to_string(WordClass c) noexcept;

class NotReduced : public std::invalid_argument {
 public:
  NotReduced(std::size_t position, const std::string& what)
      : std::invalid_argument(what), position_(position) {}
  /// Index i such that letters i and i+1 cancel.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A word with no letter adjacent to its own inverse. Only `reduce`,
/// `compose`, `inverse`, `enumerate` and the checked `from_reduced` produce
/// one, so every instance satisfies the invariant.
class ReducedWord {
 public:
  ReducedWord() = default;

  /// Validates `letters`; throws NotReduced on an adjacent inverse pair.
  static ReducedWord from_reduced(Word letters);

  const Word& letters() const noexcept { return letters_; }
  WordView view() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
  friend auto operator<=>(const ReducedWord&, const ReducedWord&) = default;

 private:
  struct Trusted {};
  ReducedWord(Trusted, Word letters) : letters_(std::move(letters)) {}

  friend ReducedWord reduce(WordView);
  friend ReducedWord reduce_tail_first(WordView);
  friend ReducedWord compose(const ReducedWord&, const ReducedWord&);
  friend ReducedWord inverse(const ReducedWord&);
  friend ReducedWord prepend(Letter, const ReducedWord&);
  friend std::vector<ReducedWord> enumerate(std::size_t);

  Word letters_;
};

bool is_reduced(WordView w) noexcept;

WordClass classify(const ReducedWord& w) noexcept;

/// Class of a nonempty reduced word starting with `first`.
WordClass class_of_first(Letter first) noexcept;

/// Canonical form by a single left-to-right stack pass.
ReducedWord reduce(WordView w);

/// Canonical form by tail-first recursion: reduce the tail, then cancel the
/// head against the first letter of the reduced tail if they are inverse.
/// Kept as an independent oracle for `reduce`.
ReducedWord reduce_tail_first(WordView w);

/// Group operation: the reduced form of the concatenation x ++ y.
ReducedWord compose(const ReducedWord& x, const ReducedWord& y);

/// Replaces every letter by its inverse, keeping order.
Word flip(WordView w);

/// Reverse of flip(w). Does not reduce its input.
Word inverse(WordView w);
ReducedWord inverse(const ReducedWord& w);

/// The reduced word l.w. Throws std::invalid_argument if l cancels against
/// the first letter of w.
ReducedWord prepend(Letter l, const ReducedWord& w);

/// All reduced words of length exactly n, lexicographic under
/// GenA < InvA < GenB < InvB. There are 1 for n = 0 and 4*3^(n-1) otherwise.
std::vector<ReducedWord> enumerate(std::size_t n);

/// Number of reduced words of length exactly n.
std::uint64_t reduced_word_count(std::size_t n) noexcept;

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t index, const std::string& what)
      : std::invalid_argument(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// One character per letter from {a, A, b, B}. The empty string is the
/// empty word. Throws ParseError with the offending index otherwise.
Word parse_word(std::string_view text);

std::string format_word(WordView w);
inline std::string format_word(const ReducedWord& w) {
  return format_word(w.view());
}

}  // namespace freerot

template <>
struct std::hash<freerot::ReducedWord> {
  std::size_t operator()(const freerot::ReducedWord& w) const noexcept;
};
