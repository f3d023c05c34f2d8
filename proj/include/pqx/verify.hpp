#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace pqx {

enum class ClaimStatus { pass, fail, skipped };

struct ClaimRecord {
  std::string id;
  std::string suite;
  std::string where;     // which statement the claim checks
  std::string params;
  std::string expected;
  std::string computed;
  ClaimStatus status = ClaimStatus::pass;
  std::string reason;    // for skipped claims
  double elapsed_ms = 0;
};

struct VerifyOptions {
  std::string suite = "paper";  // paper | lemma2 | lemma3 | lemma5 | theorem6 | oracle | kneser | corollary | all
  int max_n = 0;                // 0 = per-suite default
  int max_p = 0;
  uint64_t seed = 99991;
  int workers = 1;
  long long random_instances = 100000;
  bool strip_timing = false;
};

struct VerifyReport {
  std::string suite;
  VerifyOptions options;
  std::vector<ClaimRecord> claims;

  int passed() const;
  int failed() const;
  int skipped() const;
  bool all_passed() const { return failed() == 0; }

  /// Deterministic for fixed options when strip_timing is set: elapsed
  /// fields are zeroed and volatile data (timings, search statistics) never
  /// enter claim records.
  nlohmann::json to_json() const;
  std::string to_table() const;
};

VerifyReport run_verify(const VerifyOptions& options);

}  // namespace pqx
