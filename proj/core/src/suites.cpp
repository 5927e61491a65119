#include "freerot/suites.hpp"

#include <algorithm>

#include "freerot/freeness.hpp"
#include "freerot/rotmap.hpp"
#include "freerot/sampling.hpp"

namespace freerot {

namespace {

constexpr std::size_t kMaxCounterexamples = 8;

// Word length bounds for the randomized suites.
constexpr std::size_t kGroupWordLen = 40;
constexpr std::size_t kWeakWordLen = 100;
constexpr std::size_t kFusionWordLen = 30;
constexpr std::size_t kHomomorphismWordLen = 15;
constexpr std::size_t kLemmaWordLen = 10;

Word concat(WordView x, WordView y) {
  Word out(x.begin(), x.end());
  out.insert(out.end(), y.begin(), y.end());
  return out;
}

Word reversed(WordView w) { return Word(w.rbegin(), w.rend()); }

std::string show(const ReducedWord& w) { return "'" + format_word(w) + "'"; }
std::string show(WordView w) { return "'" + format_word(w) + "'"; }

// Per-property check counts, for the JSON detail.
class Tally {
 public:
  explicit Tally(SuiteResult& r) : r_(r) {}
  void expect(const char* property, bool holds, const std::string& what) {
    auto& entry = r_.detail["properties"][property];
    if (entry.is_null()) entry = {{"checks", 0}, {"failures", 0}};
    entry["checks"] = entry["checks"].get<std::uint64_t>() + 1;
    if (!holds) entry["failures"] = entry["failures"].get<std::uint64_t>() + 1;
    r_.expect(holds, std::string(property) + ": " + what);
  }

 private:
  SuiteResult& r_;
};

}  // namespace

void SuiteResult::expect(bool holds, const std::string& what) {
  ++checks;
  if (holds) return;
  ++failures;
  if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(what);
}

SuiteResult run_group_suite(const SuiteConfig& config) {
  SuiteResult r;
  r.name = "group";
  Tally t(r);
  Rng rng(config.seed);
  const ReducedWord empty;

  for (std::size_t i = 0; i < config.samples; ++i) {
    const ReducedWord x = random_reduced_word(rng, kGroupWordLen);
    const ReducedWord y = random_reduced_word(rng, kGroupWordLen);
    const ReducedWord z = random_reduced_word(rng, kGroupWordLen);
    const std::string xyz = show(x) + " " + show(y) + " " + show(z);

    t.expect("closure", is_reduced(compose(x, y).view()), xyz);
    t.expect("associativity", compose(compose(x, y), z) == compose(x, compose(y, z)), xyz);
    t.expect("identity", compose(x, empty) == x && compose(empty, x) == x, show(x));
    t.expect("inverse",
             compose(x, inverse(x)).empty() && compose(inverse(x), x).empty(), show(x));
    t.expect("anti_homomorphism",
             inverse(compose(x, y)) == compose(inverse(y), inverse(x)), xyz);
  }

  for (std::size_t i = 0; i < config.samples; ++i) {
    const Word w = random_weak_word(rng, kWeakWordLen);
    const ReducedWord fixed = reduce(w);
    t.expect("oracle_equivalence", fixed == reduce_tail_first(w), show(w));
    t.expect("idempotence", reduce(fixed.view()) == fixed, show(w));
    t.expect("involution", inverse(inverse(w)) == w, show(w));
    t.expect("reversal_commutation",
             reduce(reversed(w)).letters() == reversed(fixed.view()), show(w));
  }

  for (std::size_t i = 0; i < config.samples; ++i) {
    const Word x = random_weak_word(rng, kFusionWordLen);
    const Word y = random_weak_word(rng, kFusionWordLen);
    const Word z = random_weak_word(rng, kFusionWordLen);
    const ReducedWord whole = reduce(concat(concat(x, y), z));
    t.expect("fix_fusion",
             reduce(concat(x, reduce(concat(y, z)).view())) == whole &&
                 reduce(concat(reduce(concat(x, y)).view(), z)) == whole,
             show(x) + " " + show(y) + " " + show(z));
  }
  return r;
}

SuiteResult run_rotation_axioms_suite(const SuiteConfig& config) {
  SuiteResult r;
  r.name = "rotation-axioms";
  Tally t(r);
  const Mat3 id = Mat3::identity();

  std::uint64_t words = 0;
  for (std::size_t n = 0; n <= config.max_len; ++n) {
    for (const ReducedWord& w : enumerate(n)) {
      ++words;
      const Mat3 m = rotation(w);
      const Mat3 mt = transpose(m);
      t.expect("det_one", det(m) == QSqrt2(1), show(w));
      t.expect("orthogonal", mul(mt, m) == id, show(w));
      t.expect("inverse_is_transpose", inverse(m) == mt, show(w));
      t.expect("inverse_compatibility", rotation_of_inverse(w) == mt, show(w));
    }
  }
  r.detail["words_enumerated"] = words;

  Rng rng(config.seed);
  const std::size_t pairs = config.samples;
  for (std::size_t i = 0; i < pairs; ++i) {
    const ReducedWord w1 = random_reduced_word(rng, kHomomorphismWordLen);
    const ReducedWord w2 = random_reduced_word(rng, kHomomorphismWordLen);
    t.expect("homomorphism", rotation(w1) * rotation(w2) == rotation(compose(w1, w2)),
             show(w1) + " " + show(w2));
  }

  // Matrix lemmas. Random rotations come from random words; general
  // matrices are dense random entries in Q(sqrt2).
  const std::size_t lemma_trials = std::max<std::size_t>(1000, config.samples / 10);
  for (std::size_t i = 0; i < lemma_trials; ++i) {
    const ReducedWord w1 = random_reduced_word(rng, kLemmaWordLen);
    const ReducedWord w2 = random_reduced_word(rng, kLemmaWordLen);
    const Mat3 r1 = rotation(w1);
    const Mat3 r2 = rotation(w2);
    const std::string words_shown = show(w1) + " " + show(w2);
    t.expect("rotation_product_closure", is_rotation(r1 * r2), words_shown);
    t.expect("rotation_inverse_closure", is_rotation(inverse(r1)), show(w1));

    const Vec3 p = random_rational_point(rng);
    t.expect("distance_preservation", norm_sq(r1 * p) == norm_sq(p),
             show(w1) + " p=" + to_string(p));

    const Mat3 m1 = random_mat3(rng);
    const Mat3 m2 = random_mat3(rng);
    t.expect("det_multiplicative", det(m1 * m2) == det(m1) * det(m2), "random matrices");
    t.expect("identity_law", m1 * id == m1 && id * m1 == m1, "random matrix");
    t.expect("transpose_anti_homomorphism",
             transpose(m1 * m2) == transpose(m2) * transpose(m1), "random matrices");
    if (!det(m1).is_zero() && !det(m2).is_zero()) {
      const Mat3 i1 = inverse(m1);
      t.expect("inverse_two_sided", m1 * i1 == id && i1 * m1 == id, "random matrix");
      t.expect("inverse_anti_homomorphism", inverse(m1 * m2) == inverse(m2) * i1,
               "random matrices");
    }
  }
  return r;
}

SuiteResult run_freeness_suite(const SuiteConfig& config) {
  SuiteResult r;
  r.name = "freeness";
  const NonidentityReport report = check_nonidentity_upto(config.max_len, config.jobs);
  r.checks += report.total_words;
  const std::uint64_t expected = nonempty_word_count_upto(config.max_len);
  r.expect(report.total_words == expected,
           "visited " + std::to_string(report.total_words) + " words, expected " +
               std::to_string(expected));
  for (const auto& v : report.violations) {
    r.expect(false, v.kind + " at '" + v.word + "': " + v.detail);
  }

  const Mod3Certificate cert = certify_mod3_machine();
  r.expect(cert.ok(), cert.counterexample
                          ? "zero class reached by '" + format_word(*cert.counterexample) + "'"
                          : std::string());
  const auto bad = replay_witnesses(cert);
  r.expect(bad.empty(), std::to_string(bad.size()) + " witness paths do not replay");

  bool subset = true;
  for (const auto& [state, len] : report.observed_states) {
    subset = subset && std::binary_search(cert.reachable.begin(), cert.reachable.end(), state);
  }
  r.expect(subset, "enumeration observed a state outside the certificate");

  r.detail["nonidentity"] = to_json(report);
  r.detail["certificate"] = to_json(cert);
  return r;
}

SuiteResult run_injectivity_suite(const SuiteConfig& config) {
  SuiteResult r;
  r.name = "injectivity";
  const InjectivityReport inj =
      check_injectivity_upto(config.max_len, config.seed, std::min<std::size_t>(config.samples, 1000));
  r.expect(inj.distinct == inj.words,
           std::to_string(inj.distinct) + " distinct matrices for " +
               std::to_string(inj.words) + " words");
  for (const auto& c : inj.collisions) {
    r.expect(false, "collision '" + c.first + "' vs '" + c.second + "'");
  }
  for (const auto& c : inj.pair_failures) {
    r.expect(false, "pair '" + c.first + "', '" + c.second + "'");
  }
  r.checks += inj.pairs_checked;

  const PartitionReport part = partition_census(config.max_len);
  r.expect(part.ok(), std::to_string(part.overlaps.size()) + " overlapping buckets");
  r.detail["injectivity"] = to_json(inj);
  r.detail["partition"] = to_json(part);
  return r;
}

nlohmann::json to_json(const SuiteResult& r) {
  return {{"suite", r.name},
          {"passed", r.ok()},
          {"checks", r.checks},
          {"failures", r.failures},
          {"counterexamples", r.counterexamples},
          {"detail", r.detail}};
}

}  // namespace freerot
