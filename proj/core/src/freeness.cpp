#include "freerot/freeness.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <thread>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "freerot/rotmap.hpp"
#include "freerot/sampling.hpp"

namespace freerot {

namespace {

std::uint8_t mod3_of(const mpz_class& v) {
  // mpz_fdiv_ui gives the nonnegative residue.
  return static_cast<std::uint8_t>(mpz_fdiv_ui(v.get_mpz_t(), 3));
}

int tag_rank(const std::optional<Letter>& tag) {
  return tag ? static_cast<int>(index_of(*tag)) : -1;
}

const Vec3& base_point() {
  static const Vec3 p{{QSqrt2(0), QSqrt2(1), QSqrt2(0)}};
  return p;
}

}  // namespace

Mod3Class mod3(const Int3& v) { return {mod3_of(v.x), mod3_of(v.y), mod3_of(v.z)}; }

bool operator<(const Mod3State& a, const Mod3State& b) {
  const int ra = tag_rank(a.tag), rb = tag_rank(b.tag);
  if (ra != rb) return ra < rb;
  return a.cls < b.cls;
}

std::string to_string(const Mod3State& s) {
  std::string out = "(";
  out += s.tag ? std::string(1, to_char(*s.tag)) : std::string("ε");
  out += ", (";
  for (std::size_t i = 0; i < 3; ++i) {
    out += std::to_string(s.cls[i]);
    if (i < 2) out += ",";
  }
  return out + "))";
}

const StepTable& step_table() {
  static const StepTable table = [] {
    StepTable t{};
    t[index_of(Letter::GenA)] = {{{3, 0, 0}, {0, 1, -4}, {0, 2, 1}}};
    t[index_of(Letter::InvA)] = {{{3, 0, 0}, {0, 1, 4}, {0, -2, 1}}};
    t[index_of(Letter::GenB)] = {{{1, -2, 0}, {4, 1, 0}, {0, 0, 3}}};
    t[index_of(Letter::InvB)] = {{{1, 2, 0}, {-4, 1, 0}, {0, 0, 3}}};
    return t;
  }();
  return table;
}

Int3 apply(const IntMat3& m, const Int3& v) {
  Int3 out;
  const std::array<const mpz_class*, 3> in = {&v.x, &v.y, &v.z};
  const std::array<mpz_class*, 3> res = {&out.x, &out.y, &out.z};
  for (std::size_t i = 0; i < 3; ++i) {
    mpz_class acc = 0;
    for (std::size_t k = 0; k < 3; ++k) {
      if (m[i][k] != 0) acc += m[i][k] * *in[k];
    }
    *res[i] = std::move(acc);
  }
  return out;
}

Mod3Class apply_mod3(const IntMat3& m, const Mod3Class& c) {
  Mod3Class out{};
  for (std::size_t i = 0; i < 3; ++i) {
    long acc = 0;
    for (std::size_t k = 0; k < 3; ++k) acc += m[i][k] * c[k];
    out[i] = static_cast<std::uint8_t>(((acc % 3) + 3) % 3);
  }
  return out;
}

InvariantTriple invariant_from_image(const Vec3& image, std::size_t length) {
  const long n = static_cast<long>(length);
  return {{as_integer(scale_pow3(div_exact_sqrt2(image[0]), n)),
           as_integer(scale_pow3(image[1], n)),
           as_integer(scale_pow3(div_exact_sqrt2(image[2]), n))},
          length};
}

InvariantTriple invariant_exact(const ReducedWord& w) {
  return invariant_from_image(apply(rotation(w), base_point()), w.size());
}

InvariantTriple invariant_step(Letter l, const InvariantTriple& t,
                               const StepTable& table) {
  return {apply(table[index_of(l)], t.value), t.length + 1};
}

Mod3State mod3_state(const ReducedWord& w) {
  std::optional<Letter> tag;
  if (!w.empty()) tag = w.front();
  return {tag, mod3(invariant_exact(w).value)};
}

std::uint64_t nonempty_word_count_upto(std::size_t max_len) noexcept {
  std::uint64_t total = 0;
  for (std::size_t n = 1; n <= max_len; ++n) total += reduced_word_count(n);
  return total;
}

namespace {

// Depth-first walk of the subtree of reduced words whose LAST letter is
// `root`, growing words by prepending. `path` holds the letters from last to
// first, so the word itself is `path` reversed and its first letter is
// path.back(). The visitor sees every node once with the exact product
// rotation(word) and returns false to stop the walk.
template <typename Visitor>
class PrependWalker {
 public:
  PrependWalker(std::size_t max_len, Visitor& visit)
      : max_len_(max_len), visit_(visit) {
    products_.reserve(max_len + 1);
  }

  void run(Letter root) {
    path_.clear();
    products_.clear();
    stopped_ = false;
    descend(root, Mat3::identity());
  }

  bool stopped() const { return stopped_; }

 private:
  void descend(Letter l, const Mat3& parent) {
    path_.push_back(l);
    products_.push_back(generator(l) * parent);
    if (!visit_(path_, products_.back())) {
      stopped_ = true;
    } else if (path_.size() < max_len_) {
      for (Letter next : kLetters) {
        if (next == inverse(l)) continue;
        descend(next, products_.back());
        if (stopped_) break;
      }
    }
    path_.pop_back();
    products_.pop_back();
  }

  std::size_t max_len_;
  Visitor& visit_;
  Word path_;
  std::vector<Mat3> products_;
  bool stopped_ = false;
};

std::string word_from_path(const Word& path) {
  std::string out;
  out.reserve(path.size());
  for (auto it = path.rbegin(); it != path.rend(); ++it) out.push_back(to_char(*it));
  return out;
}

// Per-subtree state for check_nonidentity_upto.
struct NonidentityWorker {
  explicit NonidentityWorker(std::size_t max_len)
      : words_checked(max_len + 1, 0), triples(max_len + 1) {
    triples[0] = InvariantTriple{{0, 1, 0}, 0};
  }

  bool operator()(const Word& path, const Mat3& product) {
    const std::size_t n = path.size();
    const Letter first = path.back();
    ++words_checked[n];

    if (product == identity) {
      return fail("identity", path, "rotation(w) = I");
    }

    InvariantTriple exact;
    try {
      exact = invariant_from_image(product.column(1), n);
    } catch (const NonIntegral& e) {
      return fail("non_integral", path, e.what());
    }
    const InvariantTriple stepped = invariant_step(first, triples[n - 1]);
    if (!(stepped == exact)) {
      return fail("recurrence", path,
                  "exact " + to_string(exact.value) + " but step gives " +
                      to_string(stepped.value));
    }
    triples[n] = std::move(exact);

    const Mod3Class cls = mod3(triples[n].value);
    if (is_zero_class(cls)) {
      return fail("zero_class", path,
                  "invariant " + to_string(triples[n].value) + " is 0 mod 3");
    }
    const Mod3State state{first, cls};
    auto [it, inserted] = observed.emplace(state, n);
    if (!inserted) it->second = std::min(it->second, n);
    return true;
  }

  bool fail(std::string kind, const Word& path, std::string detail) {
    violations.push_back({std::move(kind), word_from_path(path), std::move(detail)});
    return false;
  }

  const Mat3 identity = Mat3::identity();
  std::vector<std::uint64_t> words_checked;
  std::vector<InvariantTriple> triples;
  std::vector<Violation> violations;
  std::map<Mod3State, std::size_t> observed;
};

}  // namespace

NonidentityReport check_nonidentity_upto(std::size_t max_len, std::size_t jobs) {
  if (max_len < 1) throw std::invalid_argument("check_nonidentity_upto: max_len must be >= 1");
  if (jobs < 1) throw std::invalid_argument("check_nonidentity_upto: jobs must be >= 1");

  std::vector<NonidentityWorker> results;
  results.reserve(kLetters.size());
  for (std::size_t i = 0; i < kLetters.size(); ++i) results.emplace_back(max_len);

  std::atomic<std::size_t> next{0};
  auto drain = [&] {
    for (std::size_t i = next++; i < kLetters.size(); i = next++) {
      PrependWalker walker(max_len, results[i]);
      walker.run(kLetters[i]);
    }
  };
  const std::size_t threads = std::min(jobs, kLetters.size());
  if (threads == 1) {
    drain();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(drain);
  }

  // Merge in root-letter order.
  NonidentityReport report;
  report.max_len = max_len;
  report.words_checked.assign(max_len + 1, 0);
  for (auto& r : results) {
    for (std::size_t n = 0; n <= max_len; ++n) report.words_checked[n] += r.words_checked[n];
    report.violations.insert(report.violations.end(), r.violations.begin(),
                             r.violations.end());
    for (const auto& [state, len] : r.observed) {
      auto [it, inserted] = report.observed_states.emplace(state, len);
      if (!inserted) it->second = std::min(it->second, len);
    }
  }
  for (auto c : report.words_checked) report.total_words += c;
  return report;
}

Mod3Certificate certify_mod3_machine() { return certify_mod3_machine(step_table()); }

Mod3Certificate certify_mod3_machine(const StepTable& table) {
  Mod3Certificate cert;
  std::deque<Mod3State> queue;

  auto visit = [&](Letter l, const Mod3Class& cls, const ReducedWord& word) {
    const Mod3State state{l, cls};
    if (cert.witness.count(state)) return true;
    cert.witness.emplace(state, word);
    if (is_zero_class(cls)) {
      cert.counterexample = word;
      return false;
    }
    queue.push_back(state);
    return true;
  };

  const Mod3Class start{0, 1, 0};
  for (Letter l : kLetters) {
    if (!visit(l, apply_mod3(table[index_of(l)], start),
               ReducedWord::from_reduced({l}))) {
      break;
    }
  }
  while (cert.ok() && !queue.empty()) {
    const Mod3State state = queue.front();
    queue.pop_front();
    const ReducedWord& word = cert.witness.at(state);
    for (Letter l : kLetters) {
      if (l == inverse(*state.tag)) continue;
      if (!visit(l, apply_mod3(table[index_of(l)], state.cls), prepend(l, word))) {
        break;
      }
    }
  }

  for (const auto& [state, word] : cert.witness) {
    if (!is_zero_class(state.cls)) cert.reachable.push_back(state);
  }
  return cert;
}

std::vector<Mod3State> replay_witnesses(const Mod3Certificate& cert) {
  std::vector<Mod3State> bad;
  for (const auto& [state, word] : cert.witness) {
    if (!(mod3_state(word) == state)) bad.push_back(state);
  }
  return bad;
}

namespace {

// Calls visit(path, product) for the empty word and then every nonempty
// reduced word of length <= max_len.
template <typename Visitor>
void for_each_word_upto(std::size_t max_len, Visitor&& visit) {
  const Word empty;
  visit(empty, Mat3::identity());
  auto keep_going = [&](const Word& path, const Mat3& m) {
    visit(path, m);
    return true;
  };
  for (Letter root : kLetters) {
    PrependWalker walker(max_len, keep_going);
    walker.run(root);
  }
}

}  // namespace

InjectivityReport check_injectivity_upto(std::size_t max_len, std::uint64_t seed,
                                         std::size_t pairs) {
  if (max_len < 1) throw std::invalid_argument("check_injectivity_upto: max_len must be >= 1");
  InjectivityReport report;
  report.max_len = max_len;

  std::unordered_map<std::string, std::string> seen;
  seen.reserve(static_cast<std::size_t>(nonempty_word_count_upto(max_len) + 1));
  for_each_word_upto(max_len, [&](const Word& path, const Mat3& m) {
    ++report.words;
    auto [it, inserted] = seen.emplace(canonical_key(m), word_from_path(path));
    if (!inserted) report.collisions.push_back({it->second, word_from_path(path)});
  });
  report.distinct = seen.size();

  Rng rng(seed);
  for (std::size_t i = 0; i < pairs; ++i) {
    const ReducedWord w1 = random_reduced_word(rng, max_len);
    const ReducedWord w2 = random_reduced_word(rng, max_len);
    if (w1 == w2) continue;
    ++report.pairs_checked;
    const Mat3 quotient = rotation(compose(w1, inverse(w2)));
    if (quotient == Mat3::identity() || rotation(w1) == rotation(w2)) {
      report.pair_failures.push_back({format_word(w1), format_word(w2)});
    }
  }
  return report;
}

PartitionReport partition_census(std::size_t max_len) {
  if (max_len < 1) throw std::invalid_argument("partition_census: max_len must be >= 1");
  PartitionReport report;
  report.max_len = max_len;

  struct Entry {
    WordClass cls;
    std::string word;
  };
  std::unordered_map<std::string, Entry> owner;
  for_each_word_upto(max_len, [&](const Word& path, const Mat3& m) {
    ++report.words;
    const WordClass cls = path.empty() ? WordClass::Empty : class_of_first(path.back());
    ++report.bucket_sizes[static_cast<std::size_t>(cls)];
    auto [it, inserted] = owner.emplace(canonical_key(m), Entry{cls, word_from_path(path)});
    if (!inserted) report.overlaps.push_back({it->second.word, word_from_path(path)});
  });
  report.union_size = owner.size();
  return report;
}

nlohmann::json to_json(const Mod3State& s) {
  return {{"tag", s.tag ? std::string(1, to_char(*s.tag)) : std::string()},
          {"cls", {s.cls[0], s.cls[1], s.cls[2]}}};
}

namespace {

nlohmann::json to_json(const std::vector<Violation>& vs) {
  auto out = nlohmann::json::array();
  for (const auto& v : vs) {
    out.push_back({{"kind", v.kind}, {"word", v.word}, {"detail", v.detail}});
  }
  return out;
}

nlohmann::json to_json(const std::vector<Collision>& cs) {
  auto out = nlohmann::json::array();
  for (const auto& c : cs) out.push_back({c.first, c.second});
  return out;
}

}  // namespace

nlohmann::json to_json(const NonidentityReport& r) {
  nlohmann::json per_length = nlohmann::json::object();
  for (std::size_t n = 1; n < r.words_checked.size(); ++n) {
    per_length[std::to_string(n)] = r.words_checked[n];
  }
  auto states = nlohmann::json::array();
  for (const auto& [state, len] : r.observed_states) {
    auto j = to_json(state);
    j["first_length"] = len;
    states.push_back(std::move(j));
  }
  return {{"max_len", r.max_len},
          {"words_checked", per_length},
          {"total_words", r.total_words},
          {"violations", to_json(r.violations)},
          {"observed_states", std::move(states)}};
}

nlohmann::json to_json(const Mod3Certificate& c) {
  auto states = nlohmann::json::array();
  for (const auto& s : c.reachable) states.push_back(to_json(s));
  nlohmann::json witnesses = nlohmann::json::object();
  for (const auto& [state, word] : c.witness) {
    witnesses[to_string(state)] = format_word(word);
  }
  nlohmann::json out = {{"certified", c.ok()},
                        {"reachable_states", std::move(states)},
                        {"witness_paths", std::move(witnesses)}};
  out["counterexample"] = c.counterexample
                              ? nlohmann::json(format_word(*c.counterexample))
                              : nlohmann::json(nullptr);
  return out;
}

nlohmann::json to_json(const InjectivityReport& r) {
  return {{"max_len", r.max_len},
          {"words", r.words},
          {"distinct_matrices", r.distinct},
          {"collisions", to_json(r.collisions)},
          {"pairs_checked", r.pairs_checked},
          {"pair_failures", to_json(r.pair_failures)}};
}

nlohmann::json to_json(const PartitionReport& r) {
  nlohmann::json buckets = nlohmann::json::object();
  for (std::size_t i = 0; i < r.bucket_sizes.size(); ++i) {
    buckets[std::string(to_string(static_cast<WordClass>(i)))] = r.bucket_sizes[i];
  }
  return {{"max_len", r.max_len},
          {"buckets", std::move(buckets)},
          {"union_size", r.union_size},
          {"words", r.words},
          {"overlaps", to_json(r.overlaps)}};
}

}  // namespace freerot
