#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"

#include "ferenczi/json_io.hpp"
#include "ferenczi/towers.hpp"

using namespace ferenczi;

TEST_CASE("stage validation") {
  CHECK_THROWS_AS(ParameterSchedule({SpacerStage{{}}}, PeriodicTail{{SpacerStage{{0, 1}}}}),
                  ValidationError);
  CHECK_THROWS_AS(ParameterSchedule({SpacerStage{{-1, 2}}}, PeriodicTail{{SpacerStage{{0, 1}}}}),
                  ValidationError);
  try {
    ParameterSchedule({SpacerStage{{0, 1}}, SpacerStage{{}}}, PeriodicTail{{SpacerStage{{0, 1}}}});
    FAIL("expected rejection");
  } catch (const ValidationError& e) {
    CHECK(e.stage_index == 1);
    CHECK(std::string(e.what()).find("stage 1") != std::string::npos);
  }
}

TEST_CASE("stage accessor is total across tail kinds") {
  const auto chacon = chacon_schedule();
  CHECK(chacon.cut(0) == 2);
  CHECK(chacon.cut(17) == 2);
  CHECK(chacon.stage(5).spacers == std::vector<Spacer>{0, 1});

  const auto growth = non_exact_rank_schedule();
  CHECK(growth.cut(0) == 2);
  CHECK(growth.cut(3) == 5);
  CHECK(growth.stage(0).spacers == std::vector<Spacer>{1, 0});
  CHECK(growth.stage(2).spacers == std::vector<Spacer>{1, 0, 0, 0});
  const auto counts = growth.stage_counts(10);
  CHECK(counts.at(1) == 1);
  CHECK(counts.at(0) == growth.cut(10) - 1);
}

TEST_CASE("standardize leaves standard schedules alone") {
  const auto chacon = chacon_schedule();
  CHECK(standardize(chacon) == chacon);
  const auto growth = non_exact_rank_schedule();
  CHECK(standardize(growth) == growth);
}

TEST_CASE("standardize merges a q=1 preperiod stage with its successor") {
  const ParameterSchedule s({SpacerStage{{5}}}, PeriodicTail{{SpacerStage{{0, 1}}}});
  const auto std_s = standardize(s);
  REQUIRE(std_s.standard());
  // Merged stage 0-1 has cut 2*3 - 1 = 5 and the expansion spacers.
  CHECK(std_s.preperiod().size() == 1);
  CHECK(std_s.preperiod()[0].spacers == std::vector<Spacer>{5, 0, 5, 1, 5});
  const auto* p = std::get_if<PeriodicTail>(&std_s.tail());
  REQUIRE(p != nullptr);
  CHECK(p->period.size() == 1);
  CHECK(p->period[0].spacers == std::vector<Spacer>{0, 1});
}

TEST_CASE("standardize handles q=1 stages inside the period") {
  const ParameterSchedule s({}, PeriodicTail{{SpacerStage{{3}}, SpacerStage{{0, 1}}}});
  const auto std_s = standardize(s);
  CHECK(std_s.standard());
  // Same word family: every standardized generating word appears in the
  // original family.
  GeneratingWords orig(s), merged(std_s);
  for (long long k = 0; k <= 5; ++k) {
    const std::string target = merged.word(k);
    bool found = false;
    for (long long n = 0; n <= 12 && !found; ++n) {
      if (orig.length(n) == merged.length(k) && orig.word(n) == target) found = true;
    }
    CHECK_MESSAGE(found, "standardized w_", k, " missing from the original family");
  }
}

TEST_CASE("standardize is idempotent and preserves the word family") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 10; ++trial) {
    const auto s = testutil::random_nonstandard_schedule(rng);
    const auto once = standardize(s);
    CHECK(once.standard());
    CHECK(standardize(once) == once);
    GeneratingWords orig(s), merged(once);
    for (long long k = 0; k <= 4; ++k) {
      bool found = false;
      for (long long n = 0; n <= 14 && !found; ++n)
        if (orig.length(n) == merged.length(k) && orig.word(n) == merged.word(k)) found = true;
      CHECK(found);
    }
  }
}

TEST_CASE("contract with unit stride is the identity") {
  const auto chacon = chacon_schedule();
  CHECK(testutil::schedules_agree(contract(chacon, {0}, 1), chacon));
  std::mt19937_64 rng(7);
  const auto s = testutil::random_periodic_schedule(rng);
  CHECK(testutil::schedules_agree(contract(s, {0, 1, 2}, 1), s));
}

TEST_CASE("contract pairs of chacon stages") {
  const auto c2 = contract(chacon_schedule(), {0}, 2);
  CHECK(c2.cut(0) == 8);
  CHECK(c2.stage(0).spacers == std::vector<Spacer>{0, 1, 0, 0, 1, 1, 0, 1});
  CHECK(c2.stage(1).spacers == c2.stage(0).spacers);
  // Cutting identity: q~_0 + 1 = Q_{0,2} = 9.
  CHECK(q_product(chacon_schedule(), 0, 2) == 9);
}

TEST_CASE("contraction composes") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    const auto s = testutil::random_periodic_schedule(rng);
    // Contracting by (0,2,4,...) then (0,2,4,...) equals contracting by
    // (0,4,8,...).
    const auto twice = contract(contract(s, {0}, 2), {0}, 2);
    const auto direct = contract(s, {0}, 4);
    CHECK(testutil::schedules_agree(twice, direct, 10));
  }
}

TEST_CASE("contract input validation") {
  const auto chacon = chacon_schedule();
  CHECK_THROWS_AS(contract(chacon, {1, 2}, 1), DomainError);
  CHECK_THROWS_AS(contract(chacon, {0, 3, 2}, 1), DomainError);
  CHECK_THROWS_AS(contract(non_exact_rank_schedule(), {0}, 2), DomainError);
}

TEST_CASE("contract preserves the subshift language") {
  std::mt19937_64 rng(13);
  const auto s = testutil::random_periodic_schedule(rng);
  const auto c = contract(s, {0}, 2);
  GeneratingWords ws(s), wc(c);
  CHECK(language(ws, 6).words == language(wc, 6).words);
}

TEST_CASE("alphabets of the chacon schedule") {
  const auto t = alphabets(chacon_schedule());
  CHECK(t.stable == std::vector<Spacer>{0, 1});
  CHECK(t.d == 2);
  CHECK(t.n0 == 1);
}

TEST_CASE("alphabets of the four-letter schedule") {
  const auto t = alphabets(four_letter_schedule());
  CHECK(t.stable == std::vector<Spacer>{1, 2, 3, 4});
  CHECK(t.d == 4);
  CHECK(t.n0 == 1);
}

TEST_CASE("preperiod-only values drop out of the stable alphabet") {
  const ParameterSchedule s({SpacerStage{{7, 7}}}, PeriodicTail{{SpacerStage{{0, 1}}}});
  const auto t = alphabets(s);
  CHECK(t.stable == std::vector<Spacer>{0, 1});
  CHECK(t.n0 == 2);
  CHECK(t.level(1) == std::vector<Spacer>{0, 1, 7});
  CHECK(t.level(2) == std::vector<Spacer>{0, 1});
  CHECK(t.level(5) == std::vector<Spacer>{0, 1});
}

TEST_CASE("spacer_counts") {
  const auto f1 = spacer_counts(chacon_schedule(), 1);
  CHECK(f1.at(0) == 1);
  CHECK(f1.at(1) == 1);

  const ParameterSchedule s({SpacerStage{{2, 2, 4}}}, PeriodicTail{{SpacerStage{{0, 1}}}});
  const auto f = spacer_counts(s, 1);
  CHECK(f.at(2) == 2);
  CHECK(f.at(4) == 1);
  CHECK(f.total() == 3);
  CHECK_THROWS_AS(spacer_counts(s, 0), DomainError);
}

TEST_CASE("spacer count invariants on random schedules") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = testutil::random_periodic_schedule(rng);
    for (long long n = 1; n <= 6; ++n) {
      const auto f = spacer_counts(s, n);
      CHECK(f.total() == Rational(s.cut(n - 1)));
      Rational weighted = 0;
      for (Spacer a : f.symbols()) weighted += f.at(a) * Rational(a);
      CHECK(weighted == Rational(s.stage_sum(n - 1)));
    }
  }
}

TEST_CASE("schedule json round trip") {
  const auto j1 = Json::parse(R"({"preperiod": [[0,1],[2,2,4]], "tail": {"periodic": [[0,1]]}})");
  const auto s1 = schedule_from_json(j1);
  CHECK(s1.preperiod().size() == 2);
  CHECK(schedule_from_json(schedule_to_json(s1)) == s1);

  const auto j2 = Json::parse(
      R"({"preperiod": [], "tail": {"growth": {"cut": {"affine": {"base": 2, "slope": 1}},
          "spacer_pattern": [0,1]}}})");
  const auto s2 = schedule_from_json(j2);
  CHECK(s2.cut(4) == 6);
  CHECK(schedule_from_json(schedule_to_json(s2)) == s2);

  // Named rules survive serialization stage-for-stage.
  const auto dwmu = dwmu_one_schedule();
  const auto dwmu_rt = schedule_from_json(schedule_to_json(dwmu));
  CHECK(testutil::schedules_agree(dwmu, dwmu_rt, 8));
}

TEST_CASE("schedule json validation names the offending stage") {
  const auto j = Json::parse(R"({"preperiod": [[0,1],[]], "tail": {"periodic": [[0,1]]}})");
  try {
    schedule_from_json(j);
    FAIL("expected rejection");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("stage 1") != std::string::npos);
  }
}
