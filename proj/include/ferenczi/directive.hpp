#pragma once

#include "ferenczi/morphism.hpp"
#include "ferenczi/words.hpp"

#include <map>
#include <shared_mutex>

namespace ferenczi {

/// Which directive sequence of the subshift a handle exposes: the natural
/// right-permutative sequence tau~, the proper rotated sequence tau, or the
/// shifted sequence (tau_{n+1})_n of the induced Toeplitz system.
enum class Variant { Tilde, Proper, Shifted };

/// Level access to the directive sequence of a schedule, with a
/// reader-safe memo of built levels.
class DirectiveSequence {
 public:
  DirectiveSequence(ParameterSchedule schedule, Variant variant);

  const ParameterSchedule& schedule() const { return words_.schedule(); }
  const GeneratingWords& words() const { return words_; }
  Variant variant() const { return variant_; }

  /// The level-n morphism: tau_0(a) = 0 1^a at n = 0 (both families), and
  /// for n >= 1 the stage n-1 images. Requires a standard schedule for the
  /// proper family.
  const Morphism& level(long long n) const;

  /// tau_{[m,n)} by repeated composition; the identity when m = n.
  Morphism telescope(long long m, long long n) const;

  std::vector<Spacer> alphabet(long long n) const;  // A_n (A_0 = {0,1})

 private:
  GeneratingWords words_;
  Variant variant_;
  AlphabetTower tower_;
  mutable std::shared_mutex mutex_;
  mutable std::map<long long, Morphism> cache_;
};

/// Builds the requested level morphism without a handle.
Morphism build(const ParameterSchedule& schedule, Variant variant, long long n);

/// The words L_{1,n}, R_{1,n} over A_1 with tau_{[1,n+1)}(a) = L_{1,n} a R_{1,n}.
std::pair<SymbolWord, SymbolWord> lr_words(const ParameterSchedule& schedule, long long n);

struct CommonPrefix {
  std::string word;           // p_n, over {0,1}
  Rational certified_bound;   // (min a + 1) / (3 (max a + 1)) * <tau_{[0,n)}>
  BigInt min_image_length;    // <tau_{[0,n)}>
};

/// A common prefix p_n of all tau_{[0,n)}(a) with a certified length bound.
CommonPrefix common_prefix(const ParameterSchedule& schedule, long long n);

struct DecodeResult {
  /// Offset of window position 0 inside the level-n image covering it.
  BigInt cut_offset;
  /// Level-n letters whose images are determined by the window, starting
  /// with the covering image. Undetermined trailing letters are dropped.
  std::vector<Spacer> letters;
};

struct WindowTooShort : FerencziError {
  explicit WindowTooShort(const std::string& msg, BigInt required)
      : FerencziError(msg), required_length(std::move(required)) {}
  BigInt required_length;
};

struct NotInLanguage : FerencziError {
  using FerencziError::FerencziError;
};

/// Recognizability decoder: the unique centered representation of a window
/// at the given level. Parses {0 1^a} blocks at level 1, then lifts through
/// the constant-length levels by phase search.
DecodeResult decode_centered(const std::string& window, const DirectiveSequence& handle,
                             long long level);

}  // namespace ferenczi
