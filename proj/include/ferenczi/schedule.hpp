#pragma once

#include "ferenczi/linalg.hpp"
#include "ferenczi/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace ferenczi {

/// One stage of the cutting/spacer data: the spacer list (a_{n,0}, ...,
/// a_{n,q_n-1}). The cut q_n is the list length.
struct SpacerStage {
  std::vector<Spacer> spacers;

  long long cut() const { return static_cast<long long>(spacers.size()); }
  BigInt spacer_sum() const;
  std::map<Spacer, BigInt> counts() const;

  bool operator==(const SpacerStage&) const = default;
};

/// Cut-count expression for growth tails, as a function of the tail-local
/// stage index k: affine(base, step) = base + step*k, exponential(base,
/// factor) = base * factor^k. Both classes are closed under index shifts.
struct CutExpr {
  enum class Kind { Affine, Exponential };
  Kind kind = Kind::Affine;
  long long base = 2;
  long long step = 1;  // slope (affine) or factor (exponential)

  BigInt eval(long long k) const;
  CutExpr shifted(long long t) const;
  bool unbounded() const {
    return kind == Kind::Affine ? step > 0 : (step > 1 && base > 0);
  }
  bool operator==(const CutExpr&) const = default;
};

/// Spacer layout of a growth-tail stage: a fixed prefix placed at the start
/// of every stage, then the cyclic pattern repeated to fill the cut count.
/// The prefix is what lets a letter appear a bounded number of times per
/// stage while the cut grows.
struct PatternSpacers {
  std::vector<Spacer> prefix;
  std::vector<Spacer> pattern;  // nonempty
  bool operator==(const PatternSpacers&) const = default;
};

/// How often a letter occurs per stage, for the rank classification:
/// either f_n(letter) <= bound for all large n, or f_n(letter) >= c * q_{n-1}
/// for all n with q_{n-1} >= threshold.
struct CountClass {
  Spacer letter;
  bool bounded = false;
  BigInt bound;         // when bounded
  Rational fraction;    // c, when not bounded
  BigInt cut_threshold; // q threshold for the fraction guarantee
};

/// Deterministic per-stage spacer rule given in code. Used for schedules
/// whose stage layout is not a prefix + cyclic pattern (exact stage shapes
/// of some presets). Stage indices are tail-local.
class NamedStageRule {
 public:
  virtual ~NamedStageRule() = default;
  virtual std::string id() const = 0;
  virtual std::string params_json() const = 0;
  virtual BigInt cut(long long k) const = 0;
  virtual std::vector<Spacer> stage(long long k) const = 0;
  virtual std::map<Spacer, BigInt> counts(long long k) const = 0;
  virtual std::set<Spacer> values() const = 0;
  virtual std::set<Spacer> eventual_values() const = 0;
  virtual std::vector<CountClass> count_classes() const = 0;
  virtual bool cut_unbounded() const = 0;
  virtual std::shared_ptr<const NamedStageRule> shifted(long long t) const = 0;
};

struct GrowthTail {
  CutExpr cut;
  PatternSpacers spacers;
  std::shared_ptr<const NamedStageRule> named;  // overrides cut+spacers when set

  bool operator==(const GrowthTail& o) const {
    if (named || o.named) return named == o.named;
    return cut == o.cut && spacers == o.spacers;
  }
};

struct PeriodicTail {
  std::vector<SpacerStage> period;  // nonempty
  bool operator==(const PeriodicTail&) const = default;
};

using Tail = std::variant<PeriodicTail, GrowthTail>;

/// Alphabets A_n of the directive sequence: A_0 = {0,1} and, for n >= 1,
/// A_n = set of spacer values occurring at stages >= n-1. The sequence
/// decreases (n >= 1) and stabilizes to A_W at level n_0.
struct AlphabetTower {
  std::vector<Spacer> stable;  // A_W, sorted
  long long d = 0;             // d_W = |A_W|
  long long n0 = 1;            // minimal stabilization level, >= 1

  std::vector<Spacer> level(long long n) const;  // A_n
  std::vector<std::vector<Spacer>> prestable;    // A_1 .. A_{n0} explicitly
};

/// The cutting/spacer parameters of a Ferenczi subshift: finitely many
/// explicit preperiod stages followed by an infinite tail, either periodic
/// or given by a growth rule. Immutable after construction; the stage
/// accessor is total and deterministic.
class ParameterSchedule {
 public:
  ParameterSchedule(std::vector<SpacerStage> preperiod, Tail tail);

  const std::vector<SpacerStage>& preperiod() const { return preperiod_; }
  const Tail& tail() const { return tail_; }

  /// q_n for any stage index n >= 0.
  BigInt cut(long long n) const;
  /// Materialized spacer list of stage n; throws CapExceeded for huge stages.
  SpacerStage stage(long long n) const;
  /// Per-value spacer multiplicities of stage n, without materializing.
  std::map<Spacer, BigInt> stage_counts(long long n) const;
  /// Sum of the spacers of stage n.
  BigInt stage_sum(long long n) const;
  /// Set of spacer values used by stage n.
  std::set<Spacer> stage_values(long long n) const;

  /// All spacer values over all stages (finite by construction).
  std::set<Spacer> all_values() const;
  /// Values occurring at infinitely many stages.
  std::set<Spacer> eventual_values() const;
  /// Largest index of a stage holding a value outside eventual_values();
  /// -1 when every stage uses eventual values only.
  long long last_stray_stage() const;

  /// Maximum spacer value (the minimality bound).
  Spacer max_spacer() const;
  bool standard() const;  // q_n >= 2 for all n

  /// Count classification per eventual letter, for the rank report.
  std::vector<CountClass> count_classes() const;
  bool cut_unbounded() const;

  bool operator==(const ParameterSchedule&) const = default;

 private:
  void validate() const;
  std::vector<SpacerStage> preperiod_;
  Tail tail_;
};

/// --- params operations -----------------------------------------------

/// Restores q_n >= 2 everywhere by merging each q_n = 1 stage with its
/// successor (a contraction), preserving the generating-word family.
ParameterSchedule standardize(const ParameterSchedule& s);

/// Contraction along cut points n_0 = 0 < n_1 < n_2 < ...; the points are
/// the explicit list, continued forever with the given stride. New stage k
/// spans [n_k, n_{k+1}) and has cut Q_{n_k, n_{k+1}} - 1.
ParameterSchedule contract(const ParameterSchedule& s, const std::vector<long long>& cut_points,
                           long long stride = 1);

/// Spacer sequence read off when w_hi is written as a concatenation of
/// w_lo-copies separated by 1-blocks (the merged stage of a contraction).
std::vector<Spacer> merged_spacers(const ParameterSchedule& s, long long lo, long long hi);

AlphabetTower alphabets(const ParameterSchedule& s);

/// f_n(a) = #{0 <= i < q_{n-1} : a_{n-1,i} = a}, indexed by A_n. Requires
/// n >= 1.
RationalVector spacer_counts(const ParameterSchedule& s, long long n);

}  // namespace ferenczi
