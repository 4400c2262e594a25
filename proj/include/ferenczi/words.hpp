#pragma once

#include "ferenczi/schedule.hpp"

#include <mutex>
#include <set>
#include <shared_mutex>
#include <string>
#include <vector>

namespace ferenczi {

/// Lazy view of the generating words w_n of a schedule, with a shared
/// length memo (|w_n| via the recursion, never by materializing). Safe for
/// concurrent readers with single-writer insertion.
class GeneratingWords {
 public:
  explicit GeneratingWords(ParameterSchedule schedule);

  const ParameterSchedule& schedule() const { return schedule_; }

  /// |w_n| as a big integer.
  BigInt length(long long n) const;
  /// The word w_n as an ASCII string of '0'/'1'. Throws CapExceeded when
  /// |w_n| exceeds the materialization cap.
  std::string word(long long n) const;
  /// Number of zeros in w_n (one per w_{n-1}-copy recursion, no
  /// materialization).
  BigInt zero_count(long long n) const;

 private:
  ParameterSchedule schedule_;
  mutable std::shared_mutex mutex_;
  mutable std::vector<BigInt> lengths_;  // lengths_[n] = |w_n|
};

/// Position of an index inside the decomposition
/// w_{level+1} = w_level 1^{a_0} w_level ... 1^{a_{q-1}} w_level:
/// either inside the copy_index-th w_level copy, or inside the gap after
/// copy gap_index.
struct TowerAddress {
  long long level;
  enum class Kind { Copy, Spacer } kind;
  BigInt index;   // copy index (0..q) or gap index (0..q-1)
  BigInt offset;  // offset within the copy or within the 1-block
  Spacer spacer_value = 0;  // gap length, Spacer kind only

  bool operator==(const TowerAddress&) const = default;
};

/// The set of length-ell factors with the certificate of the extraction:
/// the base level N and the spacer set used.
struct FactorSet {
  long long length = 0;
  std::set<std::string> words;
  long long base_level = 0;
  std::set<Spacer> spacer_set;
};

std::string generating_word(const GeneratingWords& w, long long n);
BigInt word_length(const GeneratingWords& w, long long n);

/// Exact language L_ell(X_W): pick N minimal with |w_N| >= ell and collect
/// the factors of w_N 1^alpha w_N over the spacer values alpha occurring at
/// stages >= N. A factor of length <= |w_N| meets at most one spacer block
/// of the w_N-decomposition of any deeper generating word, so the union is
/// the whole language.
FactorSet language(const GeneratingWords& w, long long ell);

/// (a(ell), b(ell)): min and max number of '0' over L_ell(X_W).
std::pair<BigInt, BigInt> factor_stats(const GeneratingWords& w, long long ell);

/// Decode position j of w_N down to the given target level: one address per
/// level from N-1 down to target (stopping early when j falls inside a
/// spacer block, below which no further decomposition exists).
std::vector<TowerAddress> locate(const GeneratingWords& w, const BigInt& j, long long target_level,
                                 long long ambient_level);

/// Re-encode an address list produced by locate back to a position in w_N.
BigInt locate_encode(const GeneratingWords& w, const std::vector<TowerAddress>& addresses,
                     long long ambient_level);

/// First ell letters of the common right tail shared by the unique
/// asymptotic class, via the R_{1,n} recursion.
std::string asymptotic_tail(const GeneratingWords& w, long long ell);

}  // namespace ferenczi
