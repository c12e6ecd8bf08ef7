#include "ztile/corpus.hpp"

#include <stdexcept>

namespace ztile {

IntegerSet corpus_set(std::uint64_t mask) {
  std::vector<std::uint64_t> v{0};
  for (std::uint64_t i = 0; mask >> i; ++i)
    if (mask >> i & 1) v.push_back(i + 1);
  return IntegerSet(std::move(v));
}

std::vector<CorpusRecord> build_corpus(const CorpusOptions& options) {
  if (options.max_diameter > kCorpusSafetyLimit && !options.allow_large)
    throw std::invalid_argument("max diameter " + std::to_string(options.max_diameter) +
                                " exceeds the safety limit " +
                                std::to_string(kCorpusSafetyLimit));
  if (options.max_diameter >= 63) throw std::invalid_argument("max diameter must be below 63");

  const std::int64_t count = std::int64_t{1} << options.max_diameter;
  std::vector<CorpusRecord> records(count);
  SearchConfig cfg = options.search;
  cfg.parallelism = 1;

  // Each record depends only on its own set, so the schedule cannot change the output.
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1) num_threads(resolve_threads(options.jobs))
  for (std::int64_t mask = 0; mask < count; ++mask) {
    try {
      CorpusRecord r;
      r.set = corpus_set(static_cast<std::uint64_t>(mask));
      r.min_period = minimal_tiling_period(r.set, cfg);
      r.analysis = cm_report(r.set);
      records[mask] = std::move(r);
    } catch (...) {
#pragma omp critical(corpus_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return records;
}

void to_json(json& j, const CorpusRecord& r) {
  j = json{{"set", r.set},
           {"size", r.set.size()},
           {"diameter", r.set.diameter()},
           {"min_period", r.min_period},
           {"analysis", r.analysis}};
}

void from_json(const json& j, CorpusRecord& r) {
  r.set = set_from_json(j.at("set"));
  j.at("min_period").get_to(r.min_period);
  j.at("analysis").get_to(r.analysis);
}

void write_corpus(const std::vector<CorpusRecord>& records, std::ostream& out) {
  for (const auto& r : records) out << json(r).dump() << '\n';
}

}  // namespace ztile
