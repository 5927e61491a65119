#include "freerot/words.hpp"

#include <algorithm>
#include <deque>

namespace freerot {

char to_char(Letter l) noexcept {
  switch (l) {
    case Letter::GenA: return 'a';
    case Letter::InvA: return 'A';
    case Letter::GenB: return 'b';
    case Letter::InvB: return 'B';
  }
  return '?';
}

std::optional<Letter> letter_from_char(char c) noexcept {
  switch (c) {
    case 'a': return Letter::GenA;
    case 'A': return Letter::InvA;
    case 'b': return Letter::GenB;
    case 'B': return Letter::InvB;
    default: return std::nullopt;
  }
}

std::string_view to_string(WordClass c) noexcept {
  switch (c) {
    case WordClass::Empty: return "empty";
    case WordClass::AWord: return "a";
    case WordClass::AInvWord: return "a_inv";
    case WordClass::BWord: return "b";
    case WordClass::BInvWord: return "b_inv";
  }
  return "?";
}

namespace {

std::optional<std::size_t> first_cancellation(WordView w) noexcept {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i + 1] == inverse(w[i])) return i;
  }
  return std::nullopt;
}

}  // namespace

ReducedWord ReducedWord::from_reduced(Word letters) {
  if (auto pos = first_cancellation(letters)) {
    throw NotReduced(*pos, "word '" + format_word(letters) +
                               "' is not reduced: letters " +
                               std::to_string(*pos) + " and " +
                               std::to_string(*pos + 1) + " cancel");
  }
  return ReducedWord(Trusted{}, std::move(letters));
}

bool is_reduced(WordView w) noexcept { return !first_cancellation(w); }

WordClass classify(const ReducedWord& w) noexcept {
  return w.empty() ? WordClass::Empty : class_of_first(w.front());
}

WordClass class_of_first(Letter first) noexcept {
  switch (first) {
    case Letter::GenA: return WordClass::AWord;
    case Letter::InvA: return WordClass::AInvWord;
    case Letter::GenB: return WordClass::BWord;
    case Letter::InvB: return WordClass::BInvWord;
  }
  return WordClass::Empty;
}

ReducedWord reduce(WordView w) {
  Word stack;
  stack.reserve(w.size());
  for (Letter l : w) {
    if (!stack.empty() && stack.back() == inverse(l)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return ReducedWord(ReducedWord::Trusted{}, std::move(stack));
}

namespace {

// fix(l : rest) = let t = fix(rest) in
//   t empty            -> [l]
//   head(t) == l^-1    -> tail(t)
//   otherwise          -> l : t
std::deque<Letter> fix_tail_first(WordView w) {
  if (w.empty()) return {};
  std::deque<Letter> fixed = fix_tail_first(w.subspan(1));
  const Letter head = w.front();
  if (fixed.empty()) return {head};
  if (fixed.front() == inverse(head)) {
    fixed.pop_front();
    return fixed;
  }
  fixed.push_front(head);
  return fixed;
}

}  // namespace

ReducedWord reduce_tail_first(WordView w) {
  std::deque<Letter> fixed = fix_tail_first(w);
  return ReducedWord(ReducedWord::Trusted{}, Word(fixed.begin(), fixed.end()));
}

ReducedWord compose(const ReducedWord& x, const ReducedWord& y) {
  // x and y are already reduced, so cancellation only happens at the seam.
  const Word& xs = x.letters();
  const Word& ys = y.letters();
  std::size_t k = 0;
  while (k < xs.size() && k < ys.size() &&
         ys[k] == inverse(xs[xs.size() - 1 - k])) {
    ++k;
  }
  Word out;
  out.reserve(xs.size() + ys.size() - 2 * k);
  out.insert(out.end(), xs.begin(), xs.end() - static_cast<std::ptrdiff_t>(k));
  out.insert(out.end(), ys.begin() + static_cast<std::ptrdiff_t>(k), ys.end());
  return ReducedWord(ReducedWord::Trusted{}, std::move(out));
}

Word flip(WordView w) {
  Word out;
  out.reserve(w.size());
  std::transform(w.begin(), w.end(), std::back_inserter(out),
                 [](Letter l) { return inverse(l); });
  return out;
}

Word inverse(WordView w) {
  Word out = flip(w);
  std::reverse(out.begin(), out.end());
  return out;
}

ReducedWord inverse(const ReducedWord& w) {
  return ReducedWord(ReducedWord::Trusted{}, inverse(w.view()));
}

ReducedWord prepend(Letter l, const ReducedWord& w) {
  if (!w.empty() && w.front() == inverse(l)) {
    throw std::invalid_argument("prepend: letter cancels against word head");
  }
  Word out;
  out.reserve(w.size() + 1);
  out.push_back(l);
  out.insert(out.end(), w.letters().begin(), w.letters().end());
  return ReducedWord(ReducedWord::Trusted{}, std::move(out));
}

std::uint64_t reduced_word_count(std::size_t n) noexcept {
  if (n == 0) return 1;
  std::uint64_t count = 4;
  for (std::size_t i = 1; i < n; ++i) count *= 3;
  return count;
}

std::vector<ReducedWord> enumerate(std::size_t n) {
  std::vector<ReducedWord> out;
  out.reserve(reduced_word_count(n));
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // Odometer over the letters; position i may not be the inverse of i-1.
  Word current(n);
  auto fill_from = [&](std::size_t i) {
    for (; i < n; ++i) {
      // GenA is the smallest letter unless it cancels the one before it.
      current[i] = (i > 0 && current[i - 1] == Letter::InvA) ? Letter::InvA
                                                             : Letter::GenA;
    }
  };
  fill_from(0);
  while (true) {
    out.push_back(ReducedWord(ReducedWord::Trusted{}, current));
    std::size_t i = n;
    bool advanced = false;
    while (i > 0 && !advanced) {
      --i;
      std::size_t next = index_of(current[i]) + 1;
      while (next < 4 && i > 0 && kLetters[next] == inverse(current[i - 1])) {
        ++next;
      }
      if (next < 4) {
        current[i] = kLetters[next];
        fill_from(i + 1);
        advanced = true;
      }
    }
    if (!advanced) break;
  }
  return out;
}

Word parse_word(std::string_view text) {
  Word out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto l = letter_from_char(text[i]);
    if (!l) {
      throw ParseError(i, std::string("invalid letter '") + text[i] +
                              "' at index " + std::to_string(i) +
                              " (expected one of a, A, b, B)");
    }
    out.push_back(*l);
  }
  return out;
}

std::string format_word(WordView w) {
  std::string out;
  out.reserve(w.size());
  for (Letter l : w) out.push_back(to_char(l));
  return out;
}

}  // namespace freerot

std::size_t std::hash<freerot::ReducedWord>::operator()(
    const freerot::ReducedWord& w) const noexcept {
  std::size_t h = w.size();
  for (freerot::Letter l : w.letters()) {
    h = h * 31 + freerot::index_of(l) + 1;
  }
  return h;
}
