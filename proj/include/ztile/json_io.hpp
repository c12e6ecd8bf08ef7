#pragma once

// JSON encodings of the library's values. Sets are arrays of strictly
// increasing integers; optional fields are omitted when absent. Every
// to_json has a matching from_json so reports re-parse into equal values.

#include <json.hpp>

#include "ztile/cmcheck.hpp"
#include "ztile/constructions.hpp"
#include "ztile/search.hpp"
#include "ztile/tilingset.hpp"

namespace ztile {

using nlohmann::json;

void to_json(json& j, const IntegerSet& s);

void to_json(json& j, const CyclicTiling& t);
CyclicTiling tiling_from_json(const json& j);

void to_json(json& j, const TilingVerdict& v);
void from_json(const json& j, TilingVerdict& v);

void to_json(json& j, const CmReport& r);
void from_json(const json& j, CmReport& r);

void to_json(json& j, const FiberDecomposition& d);
void from_json(const json& j, FiberDecomposition& d);

void to_json(json& j, const ExploredModulus& e);
void from_json(const json& j, ExploredModulus& e);
void to_json(json& j, const PeriodResult& r);
void from_json(const json& j, PeriodResult& r);

void to_json(json& j, const TopPowerWitness& w);
void from_json(const json& j, TopPowerWitness& w);

void to_json(json& j, const LongPeriodParams& p);
void from_json(const json& j, LongPeriodParams& p);
void to_json(json& j, const LongPeriodInstance& inst);
void from_json(const json& j, LongPeriodInstance& inst);
void to_json(json& j, const LongPeriodValidation& v);
void from_json(const json& j, LongPeriodValidation& v);
void to_json(json& j, const ExponentReport& r);
void from_json(const json& j, ExponentReport& r);
void to_json(json& j, const CounterexampleReport& r);
void from_json(const json& j, CounterexampleReport& r);

/// A set given either as an array or as an object with a "set" or "tile"
/// array. Elements must be nonnegative integers, strictly increasing.
IntegerSet set_from_json(const json& j);

}  // namespace ztile

namespace nlohmann {
template <>
struct adl_serializer<ztile::IntegerSet> {
  static ztile::IntegerSet from_json(const json& j) { return ztile::set_from_json(j); }
  static void to_json(json& j, const ztile::IntegerSet& s) { ztile::to_json(j, s); }
};
}  // namespace nlohmann
