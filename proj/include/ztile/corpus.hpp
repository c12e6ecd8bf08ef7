#pragma once

// Exhaustive corpus of small normalized sets: every A with 0 in A and
// A inside {0, ..., D}, each with its minimal tiling period and its
// Coven-Meyerowitz report.

#include <cstdint>
#include <ostream>
#include <vector>

#include "ztile/cmcheck.hpp"
#include "ztile/json_io.hpp"
#include "ztile/search.hpp"

namespace ztile {

inline constexpr std::uint64_t kCorpusSafetyLimit = 14;

struct CorpusOptions {
  std::uint64_t max_diameter = 0;
  bool allow_large = false;  // lift kCorpusSafetyLimit
  int jobs = 1;              // sets analysed concurrently; 0 = auto
  SearchConfig search;       // per-set search; its parallelism is ignored
};

struct CorpusRecord {
  IntegerSet set{0};
  PeriodResult min_period;
  CmReport analysis;
  friend bool operator==(const CorpusRecord&, const CorpusRecord&) = default;
};

/// The set encoded by a mask: bit i selects the element i + 1.
IntegerSet corpus_set(std::uint64_t mask);

/// All 2^D records, ordered by mask. Throws std::invalid_argument beyond the
/// safety limit unless allow_large is set.
std::vector<CorpusRecord> build_corpus(const CorpusOptions& options);

void to_json(json& j, const CorpusRecord& r);
void from_json(const json& j, CorpusRecord& r);

/// One compact JSON object per line, in corpus order.
void write_corpus(const std::vector<CorpusRecord>& records, std::ostream& out);

}  // namespace ztile
