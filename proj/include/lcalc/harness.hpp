#pragma once

// Bounded machine checks of the calculi's properties: list-algebra laws,
// typing characterization, type preservation of every rewrite rule,
// read/readback correctness and agreement of the pipeline with an
// independent β-normalizer.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "lcalc/result.hpp"
#include "lcalc/term.hpp"

namespace lcalc {

struct CaseRecord {
  std::size_t index;  // position in the suite's deterministic case order
  std::string id;
  bool passed;
  std::string detail;
};

struct CaseFailure {
  std::size_t index;
  std::string id;
  std::string detail;
  std::string counterexample;  // minimized where the suite knows how
};

struct SuiteReport {
  std::string name;
  std::size_t cases = 0;
  std::size_t skipped = 0;
  std::size_t failed = 0;              // all failing cases
  std::vector<CaseFailure> failures;   // the first few of them
  std::map<std::string, std::size_t> counts;  // per law item or per rule
  std::vector<CaseRecord> records;            // only when requested
  double seconds = 0;

  bool passed() const { return failed == 0; }
  std::string text() const;
  // One JSON object per line: {"suite","case","verdict"[,"detail"]}.
  std::string json_lines() const;
};

struct SuiteOptions {
  bool records = false;
  std::size_t shard = 0;  // this worker handles cases with index % shards == shard
  std::size_t shards = 1;
  std::size_t max_failures = 20;  // failures kept in the report
};

// Combines shard reports of the same suite. Records are ordered by case
// index, failures by the index of the case that produced them.
SuiteReport merge_reports(const std::vector<SuiteReport>& parts);

// Runs `suite` once per shard on separate threads and merges the results.
SuiteReport run_sharded(const std::function<SuiteReport(const SuiteOptions&)>& suite,
                        std::size_t shards, SuiteOptions base = {});

// Items a-g over lists drawn from {0..max_elem-1} of length at most
// max_list_len (exhaustive), then `random_cases` seeded cases over larger
// lists. Undefined merges are skipped. Failing random cases are shrunk.
SuiteReport run_lemma_suite(std::size_t max_list_len, std::size_t max_elem, std::uint64_t seed,
                            std::size_t random_cases = 10000, const SuiteOptions& opts = {});

// lin_type(t) = [] exactly when t is closed and linear, plus affineness of
// every typed term, over all plain terms up to max_size (index slack 2).
SuiteReport run_characterization_suite(std::size_t max_size, const SuiteOptions& opts = {});

// Every term reachable from an enumerated closed linear term (size up to
// max_term_size) by the 12 linear rules, every redex in it, one step, same
// L-type.
SuiteReport run_upsilon_preservation_suite(std::size_t max_term_size, const SuiteOptions& opts = {});

// Same over Λ®: reads of plain terms up to max_term_size, the bestiary and
// small closed typed ®-terms, closed under the 12 ⊙/▽ rules.
SuiteReport run_r_preservation_suite(std::size_t max_term_size, const SuiteOptions& opts = {});

// Both of the above, counts and failures merged under one name.
SuiteReport run_preservation_suite(std::size_t max_term_size, const SuiteOptions& opts = {});

// readback(read t) = t, read t typed by its free indices, and
// standardize idempotent, over all plain terms up to max_size (slack 2).
SuiteReport run_roundtrip_suite(std::size_t max_size, const SuiteOptions& opts = {});

// The λυ pipeline against oracle_beta_normalize on every closed linear term
// up to max_size, plus SK through the untyped pipeline. Counts record the
// raw λυ rules used.
SuiteReport run_pipeline_oracle_suite(std::size_t max_size, const SuiteOptions& opts = {});

// Textbook normal-order β-normalization with shifting; shares no code with
// the explicit-substitution engine. Fuel counts β steps.
Result<PlainTerm, FuelExhausted> oracle_beta_normalize(const PlainTerm& t, std::size_t fuel = 10000);

// Names accepted by run_suite_by_name.
const std::vector<std::string>& suite_names();
// Runs a named suite with its default bounds; max_size 0 keeps the default.
SuiteReport run_suite_by_name(const std::string& name, std::size_t max_size, std::uint64_t seed,
                              const SuiteOptions& opts = {});

}  // namespace lcalc
