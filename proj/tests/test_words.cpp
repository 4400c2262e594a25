#include <doctest.h>

#include "testutil.hpp"

using namespace ferenczi;

TEST_CASE("chacon generating words") {
  GeneratingWords w(chacon_schedule());
  CHECK(w.word(0) == "0");
  CHECK(w.word(1) == "0010");
  CHECK(w.word(2) == "0010001010010");
  CHECK(w.length(0) == 1);
  CHECK(w.length(1) == 4);
  CHECK(w.length(2) == 13);
  CHECK(w.length(3) == 40);
}

TEST_CASE("all-zero spacers multiply lengths exactly") {
  const ParameterSchedule s({}, PeriodicTail{{SpacerStage{{0, 0, 0}}}});
  GeneratingWords w(s);
  for (long long n = 0; n < 6; ++n) CHECK(w.length(n + 1) == 4 * w.length(n));
}

TEST_CASE("word length matches materialized words") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    const auto s = testutil::random_periodic_schedule(rng, 3, 3);
    GeneratingWords w(s);
    for (long long n = 0; n <= 6; ++n)
      CHECK(w.length(n) == static_cast<long long>(w.word(n).size()));
  }
}

TEST_CASE("word length recursion on 200 random schedules") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = testutil::random_periodic_schedule(rng);
    GeneratingWords w(s);
    for (long long n = 0; n < 30; ++n)
      CHECK(w.length(n + 1) == (s.cut(n) + 1) * w.length(n) + s.stage_sum(n));
    CHECK(w.length(30) > 0);
  }
}

TEST_CASE("chacon language") {
  GeneratingWords w(chacon_schedule());
  CHECK(language(w, 1).words == std::set<std::string>{"0", "1"});
  CHECK(language(w, 2).words == std::set<std::string>{"00", "01", "10"});
  const auto l4 = language(w, 4).words;
  CHECK(l4.count("0010") == 1);
  CHECK(l4.count("0101") == 1);
  CHECK(l4.count("1111") == 0);
  // |L_n| = 2n - 1 for the chacon subshift.
  CHECK(l4.size() == 7);
  CHECK(l4 == testutil::brute_force_language(chacon_schedule(), 4));
}

TEST_CASE("language equals the brute-force factor set") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = testutil::random_periodic_schedule(rng, 3, 3);
    GeneratingWords w(s);
    for (long long ell : {2, 5, 9, 12})
      CHECK(language(w, ell).words == testutil::brute_force_language(s, ell));
  }
}

TEST_CASE("factor statistics") {
  GeneratingWords w(chacon_schedule());
  CHECK(factor_stats(w, 4) == std::pair<BigInt, BigInt>{2, 3});
  CHECK(factor_stats(w, 1) == std::pair<BigInt, BigInt>{0, 1});
  // At window |w_k| the maximum equals the zero count of w_k.
  for (long long k = 1; k <= 3; ++k) {
    const auto [a_n, b_n] = factor_stats(w, static_cast<long long>(w.length(k)));
    CHECK(b_n == w.zero_count(k));
    CHECK(b_n - a_n <= 1);
  }
}

TEST_CASE("factor statistics are superadditive / subadditive") {
  std::mt19937_64 rng(22);
  const auto s = testutil::random_periodic_schedule(rng, 3, 3);
  GeneratingWords w(s);
  std::vector<BigInt> a{0}, b{0};  // index = length
  for (long long ell = 1; ell <= 12; ++ell) {
    const auto [an, bn] = factor_stats(w, ell);
    a.push_back(an);
    b.push_back(bn);
  }
  for (long long m = 1; m <= 6; ++m)
    for (long long n = 1; n + m <= 12; ++n) {
      CHECK(a[static_cast<size_t>(m + n)] >= a[static_cast<size_t>(m)] + a[static_cast<size_t>(n)]);
      CHECK(b[static_cast<size_t>(m + n)] <= b[static_cast<size_t>(m)] + b[static_cast<size_t>(n)]);
    }
}

TEST_CASE("locate on chacon positions") {
  GeneratingWords w(chacon_schedule());
  const auto a0 = locate(w, BigInt(0), 1, 2);
  REQUIRE(a0.size() == 1);
  CHECK(a0[0].level == 1);
  CHECK(a0[0].kind == TowerAddress::Kind::Copy);
  CHECK(a0[0].index == 0);
  CHECK(a0[0].offset == 0);

  const auto a8 = locate(w, BigInt(8), 1, 2);
  REQUIRE(a8.size() == 1);
  CHECK(a8[0].kind == TowerAddress::Kind::Spacer);
  CHECK(a8[0].index == 1);
  CHECK(a8[0].offset == 0);
  CHECK(a8[0].spacer_value == 1);

  const auto a5 = locate(w, BigInt(5), 1, 2);
  REQUIRE(a5.size() == 1);
  CHECK(a5[0].kind == TowerAddress::Kind::Copy);
  CHECK(a5[0].index == 1);
  CHECK(a5[0].offset == 1);

  CHECK_THROWS_AS(locate(w, BigInt(13), 1, 2), DomainError);
}

TEST_CASE("locate segments tile each level exactly") {
  std::mt19937_64 rng(23);
  const auto s = testutil::random_periodic_schedule(rng, 3, 3);
  GeneratingWords w(s);
  for (long long m = 0; m < 4; ++m) {
    BigInt total = (s.cut(m) + 1) * w.length(m) + s.stage_sum(m);
    CHECK(total == w.length(m + 1));
  }
}

TEST_CASE("locate decode-encode is the identity over w_4") {
  std::mt19937_64 rng(24);
  std::vector<ParameterSchedule> cases{chacon_schedule()};
  for (int i = 0; i < 5; ++i) cases.push_back(testutil::random_periodic_schedule(rng, 3, 3));
  for (const auto& s : cases) {
    GeneratingWords w(s);
    const BigInt len = w.length(4);
    for (BigInt j = 0; j < len; ++j) {
      const auto addrs = locate(w, j, 0, 4);
      CHECK(locate_encode(w, addrs, 4) == j);
    }
  }
}

TEST_CASE("locate addresses match the materialized word") {
  GeneratingWords w(chacon_schedule());
  const std::string w3 = w.word(3);
  for (BigInt j = 0; j < w.length(3); ++j) {
    const auto addrs = locate(w, j, 0, 3);
    // A spacer address must sit on a '1'.
    if (addrs.back().kind == TowerAddress::Kind::Spacer)
      CHECK(w3[static_cast<size_t>(static_cast<long long>(j))] == '1');
    // Decoding down to level 0 means the position is a w_0 = "0" copy.
    if (addrs.back().kind == TowerAddress::Kind::Copy && addrs.back().level == 0)
      CHECK(w3[static_cast<size_t>(static_cast<long long>(j))] == '0');
  }
}

TEST_CASE("asymptotic tail of chacon") {
  GeneratingWords w(chacon_schedule());
  CHECK(asymptotic_tail(w, 1) == "0");
  CHECK(asymptotic_tail(w, 5) == "00100");
}

TEST_CASE("asymptotic tail prefixes are consistent") {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 5; ++trial) {
    const auto s = testutil::random_periodic_schedule(rng, 3, 3);
    GeneratingWords w(s);
    const std::string longtail = asymptotic_tail(w, 40);
    for (long long ell : {3, 10, 27})
      CHECK(asymptotic_tail(w, ell) == longtail.substr(0, static_cast<size_t>(ell)));
  }
}
