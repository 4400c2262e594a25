#pragma once

#include "ferenczi/measure.hpp"

#include <map>
#include <optional>
#include <string>

namespace ferenczi {

/// Finitely described base sequence (q_n + 1)_{n >= n0 - 1} of the group
/// Z[(q_n+1)]. Exact preperiod/period for periodic schedules; growth
/// schedules carry a preview of leading terms instead.
struct TailBase {
  bool periodic = true;
  std::vector<BigInt> preperiod;
  std::vector<BigInt> period;   // nonempty when periodic
  std::vector<BigInt> preview;  // leading terms, for display
};

enum class Valuation { Finite, Infinite };

struct ValuationProfile {
  Valuation kind = Valuation::Finite;
  long long value = 0;  // eventual p-adic valuation of the partial products
};

/// Eventual p-adic valuation of the partial products a_0 a_1 ... a_n of an
/// eventually periodic positive integer sequence.
ValuationProfile valuation_profile(const std::vector<BigInt>& preperiod,
                                   const std::vector<BigInt>& period, const BigInt& p);

/// Membership of a rational in Z[(a_n)] = { m / (a_0 ... a_n) }. Decided by
/// comparing denominator valuations against the profile; requires a periodic
/// base and a factorable denominator.
bool tail_group_contains(const TailBase& base, const Rational& x);

/// The dimension-group data of a minimal Ferenczi subshift:
/// G = Z^{B_W} x Z[(q_n+1)], cone {x : x.z > 0} u {0}, unit u_W.
struct DimensionGroupDescriptor {
  std::vector<Spacer> a_w;      // stable alphabet, sorted
  Spacer a_prime = 0;           // min of A_W
  std::vector<Spacer> b_w;      // A_W minus a'
  long long n0 = 1;
  TailBase tail_base;
  IntervalVector z;             // z(b) = mu^(b) for b in B_W, z(a') = 1
  std::map<Spacer, BigInt> u_w; // u(b) = b - a', u(a') = a' + |w_{n0-1}|
  long long topological_rank = 0;  // d_W
  bool aperiodicity_certified = false;  // primitive + invertible hypothesis

  /// Sign of x . z for an integer vector indexed by A_W. Nullopt when the
  /// interval entries straddle zero.
  std::optional<bool> cone_positive(const std::map<Spacer, Rational>& x) const;
};

DimensionGroupDescriptor dimension_group(const ParameterSchedule& s);

/// J_W = { x . z~ : x in G_W } with z~ = c z, u_W . z~ = 1: the orbit
/// equivalence invariant (dimension group modulo infinitesimals).
struct OrbitEquivalenceDescriptor {
  RationalInterval c;                        // 1 / (u_W . z)
  IntervalVector z_tilde;                    // c z
  std::vector<RationalInterval> generators;  // z~(b), b in B_W
  RationalInterval coset_scale;              // z~(a'): J contains z~(a') Z[base]
  TailBase tail_base;
  bool exact = true;  // false for growth tails (interval data, with warning)
  std::optional<bool> rationally_independent;  // false when z is rational
  std::string relation_note;
};

OrbitEquivalenceDescriptor orbit_equivalence(const ParameterSchedule& s);

/// Input data of a Ferenczi-type dimension group: alphabet B, base sequence
/// r (eventually periodic, r_n >= 2), z in the open simplex, unit (v, w).
struct FerencziTypeData {
  std::vector<std::string> letters;
  std::map<std::string, Rational> z;
  std::map<std::string, long long> v;
  long long w = 1;
  std::vector<long long> r_pre;
  std::vector<long long> r_period;
};

struct RealizeInfeasible : FerencziError {
  using FerencziError::FerencziError;
};

struct RealizeResult {
  ParameterSchedule schedule;
  Spacer a_prime;
  std::map<std::string, Spacer> letter_to_spacer;  // s(b) = a' + v(b)
  std::vector<std::string> notes;
};

/// Builds a schedule whose dimension group realizes the data: q_n = r_n and
/// the per-letter digit expansions of z(b) in the base (q_k + 1) become the
/// spacer multiplicities. Digit selection is greedy with deterministic
/// borrowing when the joint stage budget overflows; inputs with no
/// admissible joint digit stream are rejected with the blocking reason.
RealizeResult realize(const FerencziTypeData& data);

}  // namespace ferenczi
