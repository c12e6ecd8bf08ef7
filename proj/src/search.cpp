#include "ztile/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <queue>
#include <set>
#include <unordered_set>

namespace ztile {
namespace {

struct WordsHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ v.size();
    for (const auto w : v) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
  }
};

// Refuted coverage states are kept up to this many 64-bit words in total.
constexpr std::size_t kMemoWordLimit = std::size_t{1} << 23;

class ComplementSolver {
 public:
  enum class Status { solved, refuted, budget };

  ComplementSolver(std::vector<std::uint64_t> residues, std::uint64_t modulus,
                   std::optional<std::uint64_t> budget)
      : a_(std::move(residues)),
        m_(modulus),
        words_((modulus + 63) / 64),
        covered_(words_, 0),
        budget_(budget) {
    // Bits past M count as covered so the scan for the next hole stops at M.
    if (m_ % 64 != 0) covered_.back() = ~std::uint64_t{0} << (m_ % 64);
  }

  bool fits(std::uint64_t b) const {
    for (const auto x : a_)
      if (test(add(x, b))) return false;
    return true;
  }
  void place(std::uint64_t b) {
    for (const auto x : a_) set(add(x, b));
    chosen_.push_back(b);
  }
  void unplace(std::uint64_t b) {
    for (const auto x : a_) clear(add(x, b));
    chosen_.pop_back();
  }

  /// Smallest uncovered residue >= from, or M.
  std::uint64_t next_hole(std::uint64_t from) const {
    std::size_t w = from / 64;
    if (w >= words_) return m_;
    std::uint64_t word = ~covered_[w] & (~std::uint64_t{0} << (from % 64));
    while (word == 0) {
      if (++w == words_) return m_;
      word = ~covered_[w];
    }
    return std::min<std::uint64_t>(w * 64 + std::countr_zero(word), m_);
  }

  std::vector<std::uint64_t> candidates(std::uint64_t t) const {
    std::vector<std::uint64_t> c;
    c.reserve(a_.size());
    for (const auto x : a_) c.push_back(t >= x ? t - x : t + m_ - x);
    std::sort(c.begin(), c.end());
    return c;
  }

  /// Depth-first search from the current coverage state, starting at `hint`.
  Status run(std::uint64_t hint) {
    switch (open(hint)) {
      case Open::solved: return Status::solved;
      case Open::dead: return Status::refuted;
      case Open::pushed: break;
    }
    while (!frames_.empty()) {
      Frame& f = frames_.back();
      if (f.child) {
        unplace(*f.child);
        f.child.reset();
      }
      bool descended = false;
      while (f.next < f.cand.size()) {
        const std::uint64_t b = f.cand[f.next++];
        if (!fits(b)) continue;
        if (budget_ && nodes_ >= *budget_) return Status::budget;
        ++nodes_;
        place(b);
        f.child = b;
        const std::uint64_t t = f.t;
        const Open r = open(t);  // may reallocate frames_; f is dead past here
        if (r == Open::solved) return Status::solved;
        if (r == Open::pushed) {
          descended = true;
          break;
        }
        unplace(b);
        frames_.back().child.reset();
      }
      if (!descended) {
        remember_refuted();
        frames_.pop_back();
      }
    }
    return Status::refuted;
  }

  std::vector<std::uint64_t> chosen_sorted() const {
    auto v = chosen_;
    std::sort(v.begin(), v.end());
    return v;
  }
  std::uint64_t nodes() const { return nodes_; }

 private:
  enum class Open { solved, dead, pushed };
  struct Frame {
    std::uint64_t t;
    std::vector<std::uint64_t> cand;
    std::size_t next = 0;
    std::optional<std::uint64_t> child;
  };

  Open open(std::uint64_t hint) {
    const std::uint64_t t = next_hole(hint);
    if (t == m_) return Open::solved;
    if (memo_.count(covered_) != 0) return Open::dead;
    frames_.push_back(Frame{t, candidates(t), 0, std::nullopt});
    return Open::pushed;
  }

  void remember_refuted() {
    if ((memo_.size() + 1) * words_ > kMemoWordLimit) return;
    memo_.insert(covered_);
  }

  std::uint64_t add(std::uint64_t x, std::uint64_t b) const {
    const std::uint64_t r = x + b;
    return r >= m_ ? r - m_ : r;
  }
  bool test(std::uint64_t i) const { return covered_[i / 64] >> (i % 64) & 1; }
  void set(std::uint64_t i) { covered_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void clear(std::uint64_t i) { covered_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

  std::vector<std::uint64_t> a_;
  std::uint64_t m_;
  std::size_t words_;
  std::vector<std::uint64_t> covered_;
  std::optional<std::uint64_t> budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::uint64_t> chosen_;
  std::vector<Frame> frames_;
  std::unordered_set<std::vector<std::uint64_t>, WordsHash> memo_;
};

// Elementary obstruction. Each Phi_{p^k}, p^k | M, that does not divide A(X)
// must divide B(X); evaluating at 1 shows p^{#such k} must divide |B|.
bool cyclotomic_obstruction(const IntegerSet& a, std::uint64_t modulus) {
  const std::uint64_t b_size = modulus / a.size();
  const IntPolynomial mask = mask_polynomial(normalize(a));
  for (const auto& term : factorize(modulus).terms()) {
    std::uint64_t needed = 1;
    std::uint64_t pk = 1;
    for (unsigned k = 1; k <= term.exponent; ++k) {
      pk *= term.prime;
      const bool in_a = euler_phi(pk) <= a.diameter() && divisible_by_cyclotomic(mask, pk);
      if (!in_a) needed *= term.prime;
    }
    if (b_size % needed != 0) return true;
  }
  return false;
}

ComplementSearch finish(ComplementSolver& solver, ComplementSolver::Status st) {
  ComplementSearch out;
  out.nodes = solver.nodes();
  switch (st) {
    case ComplementSolver::Status::solved:
      out.outcome = ComplementOutcome::found;
      out.complement = IntegerSet(solver.chosen_sorted());
      break;
    case ComplementSolver::Status::refuted:
      out.outcome = ComplementOutcome::no_complement;
      out.refutation = Refutation::exhausted;
      break;
    case ComplementSolver::Status::budget:
      out.outcome = ComplementOutcome::budget_exceeded;
      break;
  }
  return out;
}

ComplementSearch refuted(Refutation why) {
  ComplementSearch out;
  out.outcome = ComplementOutcome::no_complement;
  out.refutation = why;
  return out;
}

unsigned __int128 int_pow(std::uint64_t base, std::size_t exp) {
  unsigned __int128 r = 1;
  const unsigned __int128 limit = std::numeric_limits<std::uint64_t>::max();
  for (std::size_t i = 0; i < exp; ++i) {
    r *= base;
    if (r > limit) return limit + 1;
  }
  return r;
}

}  // namespace

ComplementSearch find_complement(const IntegerSet& a, std::uint64_t modulus,
                                 const ComplementOptions& options) {
  if (!a.is_normalized()) throw std::invalid_argument("find_complement: A must be normalized");
  if (modulus == 0) throw std::invalid_argument("find_complement: modulus must be positive");
  if (modulus % a.size() != 0) return refuted(Refutation::size_not_dividing);
  const auto reduced = a.reduced_mod(modulus);
  if (!reduced) return refuted(Refutation::not_injective);
  if (options.cyclotomic_pruning && cyclotomic_obstruction(a, modulus))
    return refuted(Refutation::cyclotomic);

  const std::vector<std::uint64_t> residues(reduced->elements().begin(),
                                            reduced->elements().end());
  ComplementSolver root(residues, modulus, options.node_budget);
  root.place(0);

  const int threads = resolve_threads(options.parallelism);
  if (threads <= 1 || options.node_budget) return finish(root, root.run(0));

  // Split on the first hole: branch i places the i-th candidate translate.
  const std::uint64_t t = root.next_hole(0);
  if (t == modulus) return finish(root, ComplementSolver::Status::solved);
  const auto cand = root.candidates(t);
  const auto n = static_cast<std::int64_t>(cand.size());
  std::vector<std::optional<std::vector<std::uint64_t>>> solutions(cand.size());
  std::vector<std::uint64_t> nodes(cand.size(), 0);
  // Lowest branch index known to succeed. Higher branches may be abandoned,
  // lower ones always run to completion, so the answer matches the serial order.
  std::atomic<std::int64_t> best{n};

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::int64_t i = 0; i < n; ++i) {
    if (i > best.load() || !root.fits(cand[i])) continue;
    ComplementSolver branch = root;
    branch.place(cand[i]);
    const auto st = branch.run(t);
    nodes[i] = branch.nodes() + 1;
    if (st == ComplementSolver::Status::solved) {
      solutions[i] = branch.chosen_sorted();
      std::int64_t cur = best.load();
      while (i < cur && !best.compare_exchange_weak(cur, i)) {
      }
    }
  }

  ComplementSearch out;
  for (const auto k : nodes) out.nodes += k;
  const std::int64_t winner = best.load();
  if (winner < n) {
    out.outcome = ComplementOutcome::found;
    out.complement = IntegerSet(*solutions[winner]);
  } else {
    out.outcome = ComplementOutcome::no_complement;
    out.refutation = Refutation::exhausted;
  }
  return out;
}

std::uint64_t proof_cap(const IntegerSet& a) {
  const auto d = factorize(a.size()).distinct_primes();
  const auto cap = int_pow(2 * a.diameter(), d);
  if (cap > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(cap);
}

std::vector<std::uint64_t> restricted_candidates(std::uint64_t n, std::uint64_t cap) {
  std::vector<std::uint64_t> out;
  if (n == 0 || n > cap) return out;
  const auto primes = factorize(n).primes();
  // Min-heap of n * (products of the primes of n), streamed in increasing order.
  std::priority_queue<std::uint64_t, std::vector<std::uint64_t>, std::greater<>> heap;
  std::set<std::uint64_t> seen{n};
  heap.push(n);
  while (!heap.empty()) {
    const std::uint64_t x = heap.top();
    heap.pop();
    out.push_back(x);
    for (const auto p : primes) {
      if (x > cap / p) continue;
      if (seen.insert(x * p).second) heap.push(x * p);
    }
  }
  return out;
}

std::vector<std::uint64_t> unrestricted_candidates(std::uint64_t n, std::uint64_t cap) {
  std::vector<std::uint64_t> out;
  if (n == 0) return out;
  for (std::uint64_t m = n; m <= cap; m += n) {
    out.push_back(m);
    if (m > std::numeric_limits<std::uint64_t>::max() - n) break;
  }
  return out;
}

PeriodResult minimal_tiling_period(const IntegerSet& a, const SearchConfig& config) {
  if (!a.is_normalized()) throw std::invalid_argument("minimal_tiling_period: A must be normalized");
  const std::uint64_t bound = proof_cap(a);
  PeriodResult result;
  result.cap_used = config.max_modulus_override.value_or(bound);

  const auto candidates = config.candidate_mode == CandidateMode::restricted
                              ? restricted_candidates(a.size(), result.cap_used)
                              : unrestricted_candidates(a.size(), result.cap_used);

  ComplementOptions opts;
  opts.node_budget = config.node_budget;
  opts.cyclotomic_pruning = config.cyclotomic_pruning;

  // Candidates are explored in waves of `threads`; a wave is only read in
  // order, so the first non-refuted modulus decides regardless of scheduling.
  const int threads = resolve_threads(config.parallelism);
  const std::size_t wave = static_cast<std::size_t>(std::max(threads, 1));
  for (std::size_t start = 0; start < candidates.size(); start += wave) {
    const std::size_t stop = std::min(candidates.size(), start + wave);
    std::vector<ComplementSearch> outcomes(stop - start);
    const auto count = static_cast<std::int64_t>(stop - start);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads) if (count > 1)
    for (std::int64_t i = 0; i < count; ++i)
      outcomes[i] = find_complement(a, candidates[start + i], opts);

    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      const auto& o = outcomes[i];
      result.explored.push_back({candidates[start + i], o.outcome, o.refutation});
      if (o.outcome == ComplementOutcome::found) {
        result.status = PeriodStatus::tiles;
        result.period = candidates[start + i];
        result.complement = o.complement;
        return result;
      }
      if (o.outcome == ComplementOutcome::budget_exceeded) {
        result.status = PeriodStatus::inconclusive;
        result.reason = InconclusiveReason::budget_exhausted;
        return result;
      }
    }
  }
  if (result.cap_used < bound) {
    result.status = PeriodStatus::inconclusive;
    result.reason = InconclusiveReason::cap_below_proof_bound;
  } else {
    result.status = PeriodStatus::does_not_tile;
  }
  return result;
}

std::vector<TopPowerWitness> top_power_witnesses(const CyclicTiling& tiling) {
  const std::uint64_t m = tiling.modulus();
  if (least_period(tiling.complement(), m) != m)
    throw PreconditionFailed("top_power_witnesses: M is not the least period of the complement");
  const auto divs = divisors(m);
  std::vector<TopPowerWitness> out;
  for (const auto& term : factorize(m).terms()) {
    const std::uint64_t top = term.value();
    std::vector<std::uint64_t> cands;
    for (const auto s : divs)
      if (s % top == 0) cands.push_back(s);
    const auto hits = cyclotomic_divisors_among(tiling.tile(), cands);
    if (hits.empty())
      throw WitnessViolation("no cyclotomic divisor of A carries the full power of a prime of M");
    out.push_back({term.prime, term.exponent, hits.front()});
  }
  return out;
}

bool period_bound_holds(const CyclicTiling& tiling) { return period_bound_holds(tiling.tile(), tiling); }

bool period_bound_holds(const IntegerSet& a, const CyclicTiling& tiling) {
  const std::uint64_t m = tiling.modulus();
  if (a.reduced_mod(m) != tiling.tile())
    throw std::invalid_argument("period_bound_holds: A mod M differs from the tiling's tile");
  const auto fm = factorize(m);
  if (fm.primes() != factorize(a.size()).primes())
    throw PreconditionFailed("period_bound_holds: M and |A| have different prime sets");
  if (least_period(tiling.complement(), m) != m)
    throw PreconditionFailed("period_bound_holds: M is not the least period of the complement");
  return m <= int_pow(2 * a.diameter(), fm.distinct_primes());
}

}  // namespace ztile
