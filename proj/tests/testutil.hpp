#pragma once

#include "ferenczi/presets.hpp"
#include "ferenczi/words.hpp"

#include <random>
#include <set>
#include <string>

namespace ferenczi::testutil {

/// Deterministic random standardized periodic schedule: small cuts and
/// spacers, at least two distinct spacer values in the period.
inline ParameterSchedule random_periodic_schedule(std::mt19937_64& rng, long long max_spacer = 4,
                                                  long long max_cut = 4) {
  std::uniform_int_distribution<long long> cut_dist(2, max_cut);
  std::uniform_int_distribution<long long> spacer_dist(0, max_spacer);
  std::uniform_int_distribution<int> pre_dist(0, 2), period_dist(1, 3);

  auto make_stage = [&] {
    SpacerStage st;
    const long long q = cut_dist(rng);
    for (long long i = 0; i < q; ++i) st.spacers.push_back(spacer_dist(rng));
    return st;
  };

  while (true) {
    std::vector<SpacerStage> pre;
    const int npre = pre_dist(rng);
    for (int i = 0; i < npre; ++i) pre.push_back(make_stage());
    std::vector<SpacerStage> period;
    const int nper = period_dist(rng);
    for (int i = 0; i < nper; ++i) period.push_back(make_stage());
    std::set<Spacer> values;
    for (const auto& st : period) values.insert(st.spacers.begin(), st.spacers.end());
    if (values.size() < 2) continue;  // aperiodicity needs d_W >= 2
    return ParameterSchedule(std::move(pre), PeriodicTail{std::move(period)});
  }
}

/// Schedule with q_n = 1 stages mixed in, for standardization tests.
inline ParameterSchedule random_nonstandard_schedule(std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> cut_dist(1, 3);
  std::uniform_int_distribution<long long> spacer_dist(0, 3);
  std::uniform_int_distribution<int> pre_dist(1, 3);

  auto make_stage = [&](long long q) {
    SpacerStage st;
    for (long long i = 0; i < q; ++i) st.spacers.push_back(spacer_dist(rng));
    return st;
  };
  std::vector<SpacerStage> pre;
  const int npre = pre_dist(rng);
  for (int i = 0; i < npre; ++i) pre.push_back(make_stage(cut_dist(rng)));
  while (true) {
    std::vector<SpacerStage> period{make_stage(cut_dist(rng)), make_stage(cut_dist(rng))};
    std::set<Spacer> values;
    for (const auto& st : period) values.insert(st.spacers.begin(), st.spacers.end());
    if (values.size() < 2) continue;
    return ParameterSchedule(pre, PeriodicTail{std::move(period)});
  }
}

/// All length-ell factors of a word.
inline std::set<std::string> factors_of(const std::string& w, long long ell) {
  std::set<std::string> out;
  if (static_cast<long long>(w.size()) < ell) return out;
  for (size_t i = 0; i + static_cast<size_t>(ell) <= w.size(); ++i)
    out.insert(w.substr(i, static_cast<size_t>(ell)));
  return out;
}

/// Deep-word brute-force language oracle: factors of w_M for the smallest M
/// whose expansion has seen every recurring junction type.
inline std::set<std::string> brute_force_language(const ParameterSchedule& s, long long ell) {
  GeneratingWords w(s);
  long long N = 0;
  while (w.length(N) < ell) ++N;
  long long extra = 2;
  if (const auto* p = std::get_if<PeriodicTail>(&s.tail()))
    extra += static_cast<long long>(p->period.size());
  const long long M = N + static_cast<long long>(s.preperiod().size()) + extra;
  return factors_of(w.word(M), ell);
}

/// Stage-by-stage semantic equality of schedules up to a horizon.
inline bool schedules_agree(const ParameterSchedule& a, const ParameterSchedule& b,
                            long long horizon = 15) {
  for (long long n = 0; n < horizon; ++n)
    if (a.stage(n).spacers != b.stage(n).spacers) return false;
  return true;
}

}  // namespace ferenczi::testutil
