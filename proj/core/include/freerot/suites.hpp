#pragma once

// Verification suites run by `freerot verify`. Each suite counts individual
// checks, keeps the first few counterexamples, and renders itself as JSON.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace freerot {

struct SuiteConfig {
  std::size_t max_len = 8;
  std::size_t jobs = 1;
  std::uint64_t seed = 42;
  /// Random trials per randomized property.
  std::size_t samples = 10000;
};

struct SuiteResult {
  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> counterexamples;
  /// Suite-specific detail (reports, per-property counts).
  nlohmann::json detail = nlohmann::json::object();

  bool ok() const noexcept { return failures == 0; }

  /// Records one check; on failure keeps `what` if fewer than a handful of
  /// counterexamples are stored already.
  void expect(bool holds, const std::string& what);
};

/// Group laws of F2 and the reduction properties, on random words.
SuiteResult run_group_suite(const SuiteConfig& config);

/// Every word up to max_len maps to a rotation (det 1, M^T M = I,
/// inverse = transpose); homomorphism on random pairs; the matrix lemmas on
/// random matrices and points.
SuiteResult run_rotation_axioms_suite(const SuiteConfig& config);

/// Exhaustive non-identity check up to max_len plus the mod-3 certificate.
SuiteResult run_freeness_suite(const SuiteConfig& config);

/// Injectivity up to max_len and the partition census.
SuiteResult run_injectivity_suite(const SuiteConfig& config);

nlohmann::json to_json(const SuiteResult& r);

}  // namespace freerot
