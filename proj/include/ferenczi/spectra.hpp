#pragma once

#include "ferenczi/measure.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ferenczi {

struct EigenvalueCandidate {
  long long q = 1;
  bool passes = false;
  long long witness_level = -1;  // n with q | |w_n| + a_{m,i} for all m >= n
  std::string note;
};

/// Continuous eigenvalues exp(2 pi i p/q): the group is cyclic, generated by
/// the maximal passing denominator q_max. Irrational continuous eigenvalues
/// never exist for these subshifts.
struct EigenvalueReport {
  std::vector<long long> rational_denominators;  // divisor-closed, contains 1
  long long q_max = 1;
  bool weakly_mixing = true;
  bool irrational_continuous = false;
  long long diff_gcd = 0;  // g = gcd{a - b : a, b in A_W}; candidates divide g
  long long diff_max = 0;  // max |a - b|, the a priori bound on q_max
  std::vector<EigenvalueCandidate> candidates;
};

EigenvalueReport continuous_eigenvalues(const ParameterSchedule& s);

struct EquicontinuousFactor {
  long long q_max = 1;
  std::string description;  // the finite rotation Z/q_max Z
  long long bound = 0;      // q_max <= max |a - b|
};

EquicontinuousFactor max_equicontinuous_factor(const ParameterSchedule& s);

struct MixingSample {
  long long k;
  BigInt window;  // n_k = |w_k|
  BigInt a_n, b_n;
};

/// Non-mixing certificate: b(|w_k|) - a(|w_k|) <= max spacer for every k,
/// so b(n) - a(n) cannot tend to infinity.
struct MixingCertificate {
  Spacer bound = 0;
  std::vector<MixingSample> samples;
  bool samples_truncated = false;
  std::string conclusion = "not topologically mixing";
};

MixingCertificate mixing_certificate(const ParameterSchedule& s, long long k_max);

/// alpha = approx +- error; error 0 means alpha is the exact rational.
struct AlphaValue {
  Rational approx;
  Rational error;
};

struct VeechEntry {
  long long level;
  Spacer letter;
  Rational value;  // ||approx * h_level(letter)||
  Rational error;  // propagated |h| * alpha error
};

enum class VeechVerdict { Excluded, Consistent, Inconclusive };

struct VeechTrace {
  AlphaValue alpha;
  std::vector<VeechEntry> table;
  VeechVerdict verdict = VeechVerdict::Inconclusive;
  std::string witness;
  std::vector<Spacer> tested_letters;
  std::vector<Spacer> skipped_letters;  // undetermined rank verdicts, with warning
};

/// Necessary-condition test ||alpha h_n(a)|| -> 0 over A_mu.
VeechTrace veech_test(const ParameterSchedule& s, const AlphaValue& alpha, long long max_level);

/// Exact evaluation of | sum_{w in W_{m,n}(a,b)} lambda^{<l(w), h_m>} | /
/// |tau_{[m,n)}(b)|_a for lambda = exp(2 pi i p/q): the phases are bucketed
/// modulo q, so the sum is an integer combination of q-th roots of unity.
struct SufficiencySum {
  long long modulus = 1;
  std::vector<BigInt> coefficients;  // bucket counts per residue class
  BigInt occurrences = 0;            // number of terms
  double magnitude = 0.0;
  double ratio = 0.0;
  double error_bound = 0.0;  // floating-point evaluation error on the ratio
};

SufficiencySum sufficiency_sum(const ParameterSchedule& s, long long m, long long n, Spacer a,
                               Spacer b, long long p, long long q);

struct RationalCandidateVerdict {
  long long q;
  VeechVerdict verdict;
  std::string note;
};

struct KnownMeasurableEigenvalue {
  long long p;
  std::string description;
};

/// Measurable-eigenvalue report, keyed on the exact-finite-rank verdict.
struct MeasurableReport {
  RankReport rank;
  EigenvalueReport continuous;
  enum class Scope {
    EqualsContinuous,        // exact finite rank
    NoIrrational,            // d_{W_mu} >= 2: rationals per candidate
    IrrationalUndetermined,  // d_{W_mu} = 1: open question for irrationals
    Unknown,                 // rank classification inconclusive
  } scope = Scope::Unknown;
  std::vector<RationalCandidateVerdict> rational_candidates;
  std::optional<KnownMeasurableEigenvalue> known;
  std::vector<std::string> notes;
};

MeasurableReport measurable_eigenvalue_report(
    const ParameterSchedule& s,
    const std::optional<KnownMeasurableEigenvalue>& known = std::nullopt);

/// |w_n| mod q along n = start, start+1, ...; returns the values for the
/// pre-cycle and exactly one full cycle, plus the index where the cycle
/// begins. Exact: the tail's modular state space is finite.
struct ModularOrbit {
  long long start = 0;
  std::vector<long long> values;  // |w_{start + i}| mod q
  size_t cycle_begin = 0;         // index into values
};

ModularOrbit word_length_orbit(const ParameterSchedule& s, long long q, long long start);

}  // namespace ferenczi
