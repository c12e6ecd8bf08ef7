#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "ztile/corpus.hpp"
#include "ztile/json_io.hpp"

namespace ztile::cli {
namespace {

constexpr const char* kSchemaVersion = "1";

/// Bad arguments detected after CLI11 parsing; the message names the flag.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t parse_uint(const std::string& text, const std::string& flag) {
  std::uint64_t v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end)
    throw UsageError(flag + ": expected a nonnegative integer, got '" + text + "'");
  return v;
}

std::vector<std::uint64_t> parse_list(const std::string& text, const std::string& flag) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_uint(item, flag));
  if (out.empty()) throw UsageError(flag + ": empty list");
  return out;
}

IntegerSet parse_inline_set(const std::string& text, const std::string& flag) {
  try {
    return IntegerSet::from_unsorted(parse_list(text, flag));
  } catch (const std::invalid_argument& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

json read_json_file(const std::string& path) {
  try {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw UsageError("--input: cannot open '" + path + "'");
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError("--input: " + std::string(e.what()));
  }
}

template <class F>
auto from_input(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw UsageError("--input: " + std::string(e.what()));
  } catch (const std::invalid_argument& e) {
    throw UsageError("--input: " + std::string(e.what()));
  }
}

struct SetSource {
  std::string inline_set;
  std::string input_path;
};

// Reads the set, normalizes it and records the translation that was applied.
IntegerSet load_set(const SetSource& src, json& echo) {
  std::optional<IntegerSet> raw;
  if (!src.inline_set.empty()) {
    raw = parse_inline_set(src.inline_set, "--set");
  } else if (!src.input_path.empty()) {
    const json doc = read_json_file(src.input_path);
    raw = from_input([&] { return set_from_json(doc); });
  } else {
    throw UsageError("one of --set or --input is required");
  }
  IntegerSet a = normalize(*raw);
  echo["set"] = a;
  echo["translation"] = raw->min();
  return a;
}

int env_jobs() {
  const char* v = std::getenv("ZTILE_JOBS");
  if (v == nullptr || *v == '\0') return 0;
  return static_cast<int>(parse_uint(v, "ZTILE_JOBS"));
}

// Text rendering: one "path: value" line per scalar, arrays inline.
void render_text(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render_text(v, prefix.empty() ? k : prefix + "." + k, out);
    return;
  }
  if (j.is_array() && j.size() > 24) {
    json head(j.begin(), j.begin() + 8);
    std::string s = head.dump();
    s.pop_back();
    out << prefix << ": " << s << ",... (" << j.size() << " entries)\n";
    return;
  }
  if (j.is_array() && std::any_of(j.begin(), j.end(), [](const json& e) { return e.is_object(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) render_text(j[i], prefix + "[" + std::to_string(i) + "]", out);
    return;
  }
  out << prefix << ": " << j.dump() << '\n';
}

struct Outcome {
  json input;
  json payload;
  int code = kOk;
};

struct Common {
  std::string format = "json";
  SetSource source;
  int jobs = 0;
};

void add_format(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "text"}));
}

void add_set_source(CLI::App* sub, Common& c) {
  auto* s = sub->add_option("--set", c.source.inline_set, "Comma-separated nonnegative integers");
  auto* i = sub->add_option("--input", c.source.input_path,
                            "JSON file with an array or {\"set\": [...]}; '-' reads stdin");
  s->excludes(i);
}

void emit(const std::string& subcommand, const Common& c, const Outcome& r, double ms,
          std::ostream& out) {
  json report{{"schema_version", kSchemaVersion},
              {"subcommand", subcommand},
              {"input", r.input},
              {"payload", r.payload},
              {"timing_ms", ms}};
  if (c.format == "text")
    render_text(report, "", out);
  else
    out << report.dump(2) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integer tilings: verification, minimal periods, Coven-Meyerowitz checks"};
  app.name("ztile");
  app.require_subcommand(1, 1);

  Common common;
  try {
    common.jobs = env_jobs();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Spectrum, (T1), (T2) and diameter bounds of a set");
  add_set_source(analyze, common);
  add_format(analyze, common);

  // check-tiling
  std::string complement_text;
  std::optional<std::uint64_t> modulus;
  auto* check = app.add_subcommand("check-tiling", "Verify A + B = Z_M by both routes");
  auto* ct_set = check->add_option("--set", common.source.inline_set, "Tile A");
  auto* ct_comp = check->add_option("--complement", complement_text, "Complement B");
  auto* ct_mod = check->add_option("--modulus", modulus, "Modulus M")->check(CLI::PositiveNumber);
  auto* ct_in = check->add_option("--input", common.source.input_path,
                                  "JSON {\"tile\", \"complement\", \"modulus\"}; '-' reads stdin");
  ct_in->excludes(ct_set)->excludes(ct_comp)->excludes(ct_mod);
  check->add_option("--jobs", common.jobs, "Worker threads (0 = auto)")->check(CLI::NonNegativeNumber);
  add_format(check, common);

  // min-period
  SearchConfig search;
  std::string mode = "restricted";
  auto* minp = app.add_subcommand("min-period", "Minimal tiling period by exhaustive search");
  add_set_source(minp, common);
  minp->add_option("--cap", search.max_modulus_override, "Largest modulus to try")
      ->check(CLI::PositiveNumber);
  minp->add_option("--mode", mode, "Candidate moduli")
      ->check(CLI::IsMember({"restricted", "unrestricted"}));
  minp->add_option("--jobs", common.jobs, "Worker threads (0 = auto)")->check(CLI::NonNegativeNumber);
  minp->add_option("--budget", search.node_budget, "Search node budget per modulus")
      ->check(CLI::PositiveNumber);
  minp->add_flag("--prune", search.cyclotomic_pruning, "Enable prime-power cyclotomic pruning");
  add_format(minp, common);

  // construct
  std::string family;
  std::string primes_text = "7,11,13";
  LongPeriodParams params;
  auto* construct = app.add_subcommand("construct", "Build and validate the long-period tiling");
  construct->add_option("family", family, "Construction name")
      ->required()
      ->check(CLI::IsMember({"theorem2", "long-period"}));
  construct->add_option("--p", primes_text, "Primes p1,p2,p3 with p1 < p2 < p3 < 2 p1");
  construct->add_option("--n", params.n, "Exponent n >= 2");
  construct->add_option("--beta", params.target_beta, "Target exponent in (0, 3/2)");
  construct->add_option("--epsilon", params.epsilon, "Positive epsilon");
  construct->add_option("--jobs", common.jobs, "Worker threads (0 = auto)")->check(CLI::NonNegativeNumber);
  add_format(construct, common);

  // counterexample
  std::uint64_t cp = 0, cq = 0;
  auto* counter = app.add_subcommand("counterexample", "The Phi_{p^2} Phi_{q^2} diameter example");
  counter->add_option("--p", cp, "Prime p")->required();
  counter->add_option("--q", cq, "Prime q with p < q < 2p")->required();
  add_format(counter, common);

  // corpus
  CorpusOptions corpus;
  std::string corpus_mode = "restricted";
  auto* corp = app.add_subcommand("corpus", "Analyse every normalized set inside {0..D}, one JSON line each");
  corp->add_option("--max-diameter", corpus.max_diameter, "D")->required();
  corp->add_flag("--allow-large", corpus.allow_large, "Permit D above the safety limit");
  corp->add_option("--jobs", common.jobs, "Worker threads (0 = auto)")->check(CLI::NonNegativeNumber);
  corp->add_option("--mode", corpus_mode, "Candidate moduli")
      ->check(CLI::IsMember({"restricted", "unrestricted"}));
  corp->add_option("--budget", corpus.search.node_budget, "Search node budget per modulus")
      ->check(CLI::PositiveNumber);
  corp->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "text"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  const auto elapsed_ms = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  };

  try {
    Outcome r;
    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();

    if (sub == analyze) {
      const IntegerSet a = load_set(common.source, r.input);
      r.payload = cm_report(a);
    } else if (sub == check) {
      std::optional<IntegerSet> a, b;
      std::uint64_t m = 0;
      if (!common.source.input_path.empty()) {
        const json doc = read_json_file(common.source.input_path);
        from_input([&] {
          a = set_from_json(doc.at("tile"));
          b = set_from_json(doc.at("complement"));
          m = doc.at("modulus").get<std::uint64_t>();
          return 0;
        });
        if (m == 0) throw UsageError("--input: modulus must be positive");
      } else {
        if (common.source.inline_set.empty() || complement_text.empty() || !modulus)
          throw UsageError("check-tiling needs --set, --complement and --modulus, or --input");
        a = parse_inline_set(common.source.inline_set, "--set");
        b = parse_inline_set(complement_text, "--complement");
        m = *modulus;
      }
      const IntegerSet na = normalize(*a), nb = normalize(*b);
      r.input = {{"tile", na},
                 {"complement", nb},
                 {"modulus", m},
                 {"tile_translation", a->min()},
                 {"complement_translation", b->min()}};
      r.payload = is_tiling(na, nb, m, common.jobs);
    } else if (sub == minp) {
      const IntegerSet a = load_set(common.source, r.input);
      search.candidate_mode = mode == "restricted" ? CandidateMode::restricted : CandidateMode::unrestricted;
      search.parallelism = common.jobs;
      const PeriodResult result = minimal_tiling_period(a, search);
      r.payload = result;
      if (result.status == PeriodStatus::inconclusive) r.code = kInconclusive;
    } else if (sub == construct) {
      const auto ps = parse_list(primes_text, "--p");
      if (ps.size() != 3) throw UsageError("--p: expected three primes p1,p2,p3");
      params.p1 = ps[0];
      params.p2 = ps[1];
      params.p3 = ps[2];
      try {
        validate(params);
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--p/--n/--beta/--epsilon: ") + e.what());
      }
      r.input = {{"family", family}, {"params", params}};
      const LongPeriodInstance inst = long_period_tiling(params);
      const LongPeriodValidation v = validate_instance(inst, common.jobs);
      r.payload = {{"instance", inst}, {"validation", v}, {"exponent", exponent_report(inst)}};
      const bool all_hold = v.tiles_with_base && v.tiles_with_shifted &&
                            v.least_period_shifted == inst.modulus &&
                            v.base_periodic_each_direction && v.prime_sets_match &&
                            v.diam_bound_holds && v.diam == v.diam_formula;
      if (!all_hold) {
        err << "error: the generated instance failed its own validation\n";
        r.code = kInternalFault;
      }
    } else if (sub == counter) {
      r.input = {{"p", cp}, {"q", cq}};
      try {
        r.payload = cyclotomic_square_counterexample(cp, cq);
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--p/--q: ") + e.what());
      }
    } else if (sub == corp) {
      corpus.jobs = common.jobs;
      corpus.search.candidate_mode =
          corpus_mode == "restricted" ? CandidateMode::restricted : CandidateMode::unrestricted;
      std::vector<CorpusRecord> records;
      try {
        records = build_corpus(corpus);
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--max-diameter: ") + e.what());
      }
      int code = kOk;
      for (const auto& rec : records) {
        if (common.format == "text") {
          out << json(rec.set).dump() << ' ' << json(rec.min_period.status).get<std::string>();
          if (rec.min_period.period) out << ' ' << *rec.min_period.period;
          out << " t1=" << rec.analysis.t1 << " t2=" << rec.analysis.t2 << '\n';
        } else {
          out << json(rec).dump() << '\n';
        }
        if (rec.min_period.status == PeriodStatus::inconclusive) code = kInconclusive;
      }
      return code;
    }

    emit(name, common, r, elapsed_ms(), out);
    return r.code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InconsistentRoutes& e) {
    err << "internal fault: " << e.what() << '\n';
    return kInternalFault;
  } catch (const std::exception& e) {
    err << "internal fault: " << e.what() << '\n';
    return kInternalFault;
  }
}

}  // namespace ztile::cli
