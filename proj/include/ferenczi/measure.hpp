#pragma once

#include "ferenczi/towers.hpp"

#include <optional>
#include <string>

namespace ferenczi {

/// Per-letter interval vector; exact entries are degenerate intervals.
struct IntervalVector {
  std::vector<Spacer> symbols;
  std::vector<RationalInterval> values;

  const RationalInterval& at(Spacer s) const;
  RationalInterval& at(Spacer s);
  bool all_exact() const;
  RationalInterval total() const;
};

/// Measure vector mu_m for the unique invariant probability measure,
/// exact for periodic tails and certified intervals for growth tails.
struct MeasureVector {
  long long level = 0;
  IntervalVector values;
};

/// v_m = sum_{k >= m} f_k / Q_{m-1,k}: exact geometric-series sum for
/// periodic tails; truncation with the bracket 0 <= tail <= (3/2)/Q_{m-1,K-1}
/// for growth tails. The entries always sum to exactly 1.
IntervalVector v_vector(const ParameterSchedule& s, long long m);

/// mu_m, defined for all m >= 0. For m >= n_0 this is v_m normalized against
/// the heights; for m < n_0 it is the pushforward P_{m,n_0} mu_{n_0}.
MeasureVector measure_vector(const ParameterSchedule& s, long long m);

/// mu(T_n(a)) = h_n(a) mu_n(a); sums to 1.
IntervalVector tower_masses(const ParameterSchedule& s, long long n);

/// Occurrence-count bracket for mu([u]) at a fixed decomposition level:
/// [sum_a occ_u(tau_{[0,n)}(a)) mu_n(a), same + (|u|-1) sum_a mu_n(a)].
RationalInterval cylinder_bracket(const ParameterSchedule& s, const std::string& u,
                                  long long level);

/// Rigorous bracket for mu([u]), refined by raising the decomposition level
/// until the bracket width is at most `width` (when possible). Words outside
/// the language have measure exactly 0.
RationalInterval cylinder_measure(const ParameterSchedule& s, const std::string& u,
                                  const Rational& width = Rational(1, 10000));

enum class LetterVerdict { In, Out, Undetermined };

struct LetterEvidence {
  Spacer letter;
  LetterVerdict verdict = LetterVerdict::Undetermined;
  std::string evidence;                  // the inequality backing the verdict
  std::optional<Rational> lower_bound;   // liminf lower bound when In
};

enum class RankVerdict { Exact, NotExact, Unknown };

/// Exact-finite-rank classification: A_mu plus per-letter evidence.
struct RankReport {
  std::vector<Spacer> a_mu;  // letters with liminf tower mass > 0
  RankVerdict exact_finite_rank = RankVerdict::Unknown;
  std::vector<LetterEvidence> letters;
  long long d_w_mu = 0;  // |A_mu|
};

RankReport rank_report(const ParameterSchedule& s);

}  // namespace ferenczi
