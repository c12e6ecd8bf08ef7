#include <doctest.h>

#include <sstream>

#include "ztile/corpus.hpp"

using namespace ztile;

namespace {

std::string corpus_text(std::uint64_t d, int jobs) {
  CorpusOptions o;
  o.max_diameter = d;
  o.jobs = jobs;
  std::ostringstream os;
  write_corpus(build_corpus(o), os);
  return os.str();
}

}  // namespace

TEST_SUITE("corpus") {
  TEST_CASE("diameter 2 has four records in mask order") {
    CorpusOptions o;
    o.max_diameter = 2;
    const auto recs = build_corpus(o);
    REQUIRE(recs.size() == 4);
    CHECK(recs[0].set == IntegerSet{0});
    CHECK(recs[1].set == IntegerSet{0, 1});
    CHECK(recs[2].set == IntegerSet{0, 2});
    CHECK(recs[3].set == IntegerSet{0, 1, 2});
    CHECK(recs[2].min_period.period == 4u);
  }

  TEST_CASE("record for {0,1,3} does not tile") {
    CorpusOptions o;
    o.max_diameter = 3;
    const auto recs = build_corpus(o);
    CHECK(recs[0b101].set == IntegerSet{0, 1, 3});
    CHECK(recs[0b101].min_period.status == PeriodStatus::does_not_tile);
  }

  TEST_CASE("safety limit") {
    CorpusOptions o;
    o.max_diameter = kCorpusSafetyLimit + 1;
    CHECK_THROWS_AS(build_corpus(o), std::invalid_argument);
  }

  TEST_CASE("lines re-parse into equal records") {
    CorpusOptions o;
    o.max_diameter = 6;
    const auto recs = build_corpus(o);
    std::ostringstream os;
    write_corpus(recs, os);
    std::istringstream in(os.str());
    std::string line;
    std::size_t i = 0;
    while (std::getline(in, line)) CHECK(json::parse(line).get<CorpusRecord>() == recs[i++]);
    CHECK(i == recs.size());
  }

  TEST_CASE("output is identical across worker counts") {
    const auto one = corpus_text(8, 1);
    CHECK(corpus_text(8, 2) == one);
    CHECK(corpus_text(8, 8) == one);
  }
}
