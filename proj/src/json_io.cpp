#include "ztile/json_io.hpp"

#include <stdexcept>

namespace ztile {

NLOHMANN_JSON_SERIALIZE_ENUM(PeriodStatus, {
                                               {PeriodStatus::tiles, "Tiles"},
                                               {PeriodStatus::does_not_tile, "DoesNotTile"},
                                               {PeriodStatus::inconclusive, "Inconclusive"},
                                           })

NLOHMANN_JSON_SERIALIZE_ENUM(InconclusiveReason,
                             {
                                 {InconclusiveReason::none, nullptr},
                                 {InconclusiveReason::budget_exhausted, "budget_exhausted"},
                                 {InconclusiveReason::cap_below_proof_bound, "cap_below_proof_bound"},
                             })

NLOHMANN_JSON_SERIALIZE_ENUM(ComplementOutcome,
                             {
                                 {ComplementOutcome::found, "found"},
                                 {ComplementOutcome::no_complement, "no_complement"},
                                 {ComplementOutcome::budget_exceeded, "budget_exceeded"},
                             })

NLOHMANN_JSON_SERIALIZE_ENUM(Refutation, {
                                             {Refutation::none, "none"},
                                             {Refutation::size_not_dividing, "size_not_dividing"},
                                             {Refutation::not_injective, "not_injective"},
                                             {Refutation::cyclotomic, "cyclotomic"},
                                             {Refutation::exhausted, "exhausted"},
                                         })

namespace {

template <class T>
void put_optional(json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

template <class T>
void get_optional(const json& j, const char* key, std::optional<T>& v) {
  if (const auto it = j.find(key); it != j.end() && !it->is_null())
    v = it->get<T>();
  else
    v.reset();
}

}  // namespace

void to_json(json& j, const IntegerSet& s) {
  j = json::array();
  for (const auto x : s.elements()) j.push_back(x);
}

IntegerSet set_from_json(const json& j) {
  const json* arr = &j;
  if (j.is_object()) {
    if (j.contains("set"))
      arr = &j.at("set");
    else if (j.contains("tile"))
      arr = &j.at("tile");
    else
      throw std::invalid_argument("set object needs a \"set\" or \"tile\" array");
  }
  if (!arr->is_array()) throw std::invalid_argument("a set must be a JSON array");
  std::vector<std::uint64_t> v;
  v.reserve(arr->size());
  for (const auto& e : *arr) {
    if (!e.is_number_unsigned() && !(e.is_number_integer() && e.get<std::int64_t>() >= 0))
      throw std::invalid_argument("set elements must be nonnegative integers");
    v.push_back(e.get<std::uint64_t>());
  }
  return IntegerSet(std::move(v));
}

void to_json(json& j, const CyclicTiling& t) {
  j = json{{"tile", t.tile()}, {"complement", t.complement()}, {"modulus", t.modulus()}};
}

CyclicTiling tiling_from_json(const json& j) {
  return CyclicTiling(set_from_json(j.at("tile")), set_from_json(j.at("complement")),
                      j.at("modulus").get<std::uint64_t>());
}

void to_json(json& j, const TilingVerdict& v) {
  j = json{{"tiles", v.tiles},
           {"direct_route", v.direct_route},
           {"cyclotomic_route", v.cyclotomic_route},
           {"size_product_matches", v.size_product_matches}};
  put_optional(j, "first_overcovered", v.first_overcovered);
  put_optional(j, "first_uncovered", v.first_uncovered);
  put_optional(j, "failing_divisor", v.failing_divisor);
}

void from_json(const json& j, TilingVerdict& v) {
  j.at("tiles").get_to(v.tiles);
  j.at("direct_route").get_to(v.direct_route);
  j.at("cyclotomic_route").get_to(v.cyclotomic_route);
  j.at("size_product_matches").get_to(v.size_product_matches);
  get_optional(j, "first_overcovered", v.first_overcovered);
  get_optional(j, "first_uncovered", v.first_uncovered);
  get_optional(j, "failing_divisor", v.failing_divisor);
}

void to_json(json& j, const CmReport& r) {
  j = json{{"spectrum", r.spectrum},
           {"t1", r.t1},
           {"t2", r.t2},
           {"lcm_sa", r.lcm_sa},
           {"phi_lcm_divides", r.phi_lcm_divides},
           {"diam", r.diam}};
  put_optional(j, "half_bound_holds", r.half_bound_holds);
  put_optional(j, "eq3_holds", r.eq3_holds);
}

void from_json(const json& j, CmReport& r) {
  j.at("spectrum").get_to(r.spectrum);
  j.at("t1").get_to(r.t1);
  j.at("t2").get_to(r.t2);
  j.at("lcm_sa").get_to(r.lcm_sa);
  j.at("phi_lcm_divides").get_to(r.phi_lcm_divides);
  j.at("diam").get_to(r.diam);
  get_optional(j, "half_bound_holds", r.half_bound_holds);
  get_optional(j, "eq3_holds", r.eq3_holds);
}

void to_json(json& j, const FiberDecomposition& d) {
  j = json{{"modulus", d.modulus}, {"p", d.p},           {"q", d.q},
           {"p_fibers", d.p_fibers}, {"q_fibers", d.q_fibers}, {"unique", d.unique}};
}

void from_json(const json& j, FiberDecomposition& d) {
  j.at("modulus").get_to(d.modulus);
  j.at("p").get_to(d.p);
  j.at("q").get_to(d.q);
  j.at("p_fibers").get_to(d.p_fibers);
  j.at("q_fibers").get_to(d.q_fibers);
  j.at("unique").get_to(d.unique);
}

void to_json(json& j, const ExploredModulus& e) {
  j = json{{"modulus", e.modulus}, {"outcome", e.outcome}, {"refutation", e.refutation}};
}

void from_json(const json& j, ExploredModulus& e) {
  j.at("modulus").get_to(e.modulus);
  j.at("outcome").get_to(e.outcome);
  j.at("refutation").get_to(e.refutation);
}

void to_json(json& j, const PeriodResult& r) {
  j = json{{"status", r.status}};
  put_optional(j, "period", r.period);
  put_optional(j, "complement", r.complement);
  j["cap_used"] = r.cap_used;
  j["explored"] = r.explored;
  if (r.reason != InconclusiveReason::none) j["reason"] = r.reason;
}

void from_json(const json& j, PeriodResult& r) {
  j.at("status").get_to(r.status);
  get_optional(j, "period", r.period);
  if (j.contains("complement"))
    r.complement = set_from_json(j.at("complement"));
  else
    r.complement.reset();
  j.at("cap_used").get_to(r.cap_used);
  j.at("explored").get_to(r.explored);
  r.reason = j.contains("reason") ? j.at("reason").get<InconclusiveReason>() : InconclusiveReason::none;
}

void to_json(json& j, const TopPowerWitness& w) {
  j = json{{"prime", w.prime}, {"exponent", w.exponent}, {"witness", w.witness}};
}

void from_json(const json& j, TopPowerWitness& w) {
  j.at("prime").get_to(w.prime);
  j.at("exponent").get_to(w.exponent);
  j.at("witness").get_to(w.witness);
}

void to_json(json& j, const LongPeriodParams& p) {
  j = json{{"p1", p.p1}, {"p2", p.p2}, {"p3", p.p3}, {"n", p.n}};
  put_optional(j, "target_beta", p.target_beta);
  put_optional(j, "epsilon", p.epsilon);
}

void from_json(const json& j, LongPeriodParams& p) {
  j.at("p1").get_to(p.p1);
  j.at("p2").get_to(p.p2);
  j.at("p3").get_to(p.p3);
  j.at("n").get_to(p.n);
  get_optional(j, "target_beta", p.target_beta);
  get_optional(j, "epsilon", p.epsilon);
}

void to_json(json& j, const LongPeriodInstance& inst) {
  j = json{{"params", inst.params},
           {"modulus", inst.modulus},
           {"a", inst.shift_a},
           {"b", inst.shift_b},
           {"tile", inst.tile},
           {"base_complement", inst.base_complement},
           {"complement", inst.complement}};
}

void from_json(const json& j, LongPeriodInstance& inst) {
  j.at("params").get_to(inst.params);
  j.at("modulus").get_to(inst.modulus);
  j.at("a").get_to(inst.shift_a);
  j.at("b").get_to(inst.shift_b);
  inst.tile = set_from_json(j.at("tile"));
  inst.base_complement = set_from_json(j.at("base_complement"));
  inst.complement = set_from_json(j.at("complement"));
}

void to_json(json& j, const LongPeriodValidation& v) {
  j = json{{"tiles_with_base", v.tiles_with_base},
           {"tiles_with_shifted", v.tiles_with_shifted},
           {"least_period_shifted", v.least_period_shifted},
           {"least_period_base", v.least_period_base},
           {"base_periodic_each_direction", v.base_periodic_each_direction},
           {"prime_sets_match", v.prime_sets_match},
           {"diam", v.diam},
           {"diam_bound", v.diam_bound},
           {"diam_bound_holds", v.diam_bound_holds},
           {"diam_formula", v.diam_formula}};
}

void from_json(const json& j, LongPeriodValidation& v) {
  j.at("tiles_with_base").get_to(v.tiles_with_base);
  j.at("tiles_with_shifted").get_to(v.tiles_with_shifted);
  j.at("least_period_shifted").get_to(v.least_period_shifted);
  j.at("least_period_base").get_to(v.least_period_base);
  j.at("base_periodic_each_direction").get_to(v.base_periodic_each_direction);
  j.at("prime_sets_match").get_to(v.prime_sets_match);
  j.at("diam").get_to(v.diam);
  j.at("diam_bound").get_to(v.diam_bound);
  j.at("diam_bound_holds").get_to(v.diam_bound_holds);
  j.at("diam_formula").get_to(v.diam_formula);
}

void to_json(json& j, const ExponentReport& r) {
  j = json{{"diam", r.diam},
           {"diam_bound", r.diam_bound},
           {"diam_bound_holds", r.diam_bound_holds},
           {"achieved_exponent", r.achieved_exponent}};
  put_optional(j, "alpha", r.alpha);
  put_optional(j, "beta_below_alpha_below_three_halves", r.beta_below_alpha_below_three_halves);
  put_optional(j, "prime_large_enough", r.prime_large_enough);
  put_optional(j, "final_inequality_holds", r.final_inequality_holds);
}

void from_json(const json& j, ExponentReport& r) {
  j.at("diam").get_to(r.diam);
  j.at("diam_bound").get_to(r.diam_bound);
  j.at("diam_bound_holds").get_to(r.diam_bound_holds);
  j.at("achieved_exponent").get_to(r.achieved_exponent);
  get_optional(j, "alpha", r.alpha);
  get_optional(j, "beta_below_alpha_below_three_halves", r.beta_below_alpha_below_three_halves);
  get_optional(j, "prime_large_enough", r.prime_large_enough);
  get_optional(j, "final_inequality_holds", r.final_inequality_holds);
}

void to_json(json& j, const CounterexampleReport& r) {
  j = json{{"p", r.p},
           {"q", r.q},
           {"tile", r.tile},
           {"modulus", r.modulus},
           {"lcm_spectrum", r.lcm_spectrum},
           {"diam", r.diam},
           {"eq3_rhs_floor", r.eq3_rhs_floor},
           {"diameter_bound_fails", r.diameter_bound_fails},
           {"analysis", r.analysis}};
}

void from_json(const json& j, CounterexampleReport& r) {
  j.at("p").get_to(r.p);
  j.at("q").get_to(r.q);
  r.tile = set_from_json(j.at("tile"));
  j.at("modulus").get_to(r.modulus);
  j.at("lcm_spectrum").get_to(r.lcm_spectrum);
  j.at("diam").get_to(r.diam);
  j.at("eq3_rhs_floor").get_to(r.eq3_rhs_floor);
  j.at("diameter_bound_fails").get_to(r.diameter_bound_fails);
  j.at("analysis").get_to(r.analysis);
}

}  // namespace ztile
