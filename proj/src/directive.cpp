#include "ferenczi/directive.hpp"

#include <algorithm>

namespace ferenczi {

Morphism build(const ParameterSchedule& schedule, Variant variant, long long n) {
  if (n < 0) throw DomainError("morphism levels start at 0");
  if (variant == Variant::Shifted) return build(schedule, Variant::Proper, n + 1);
  const AlphabetTower tower = alphabets(schedule);
  if (n == 0) {
    // tau_0(a) = 0 1^a over the word alphabet {0,1}.
    std::map<Spacer, SymbolWord> images;
    for (Spacer a : tower.level(1)) {
      SymbolWord img{0};
      img.insert(img.end(), static_cast<size_t>(a), Spacer(1));
      images[a] = std::move(img);
    }
    return Morphism(tower.level(1), {0, 1}, std::move(images));
  }
  const SpacerStage st = schedule.stage(n - 1);
  const auto& sp = st.spacers;
  if (variant == Variant::Proper && sp.size() < 2)
    throw DomainError("proper morphism needs a standard schedule (q_{n-1} >= 2) at level " +
                      std::to_string(n));
  std::map<Spacer, SymbolWord> images;
  for (Spacer a : tower.level(n + 1)) {
    SymbolWord img;
    img.reserve(sp.size() + 1);
    if (variant == Variant::Tilde) {
      // a_{n-1,0} a_{n-1,1} ... a_{n-1,q-1} a
      img.assign(sp.begin(), sp.end());
      img.push_back(a);
    } else {
      // a_{n-1,1} ... a_{n-1,q-1} a a_{n-1,0}
      img.assign(sp.begin() + 1, sp.end());
      img.push_back(a);
      img.push_back(sp.front());
    }
    images[a] = std::move(img);
  }
  return Morphism(tower.level(n + 1), tower.level(n), std::move(images));
}

DirectiveSequence::DirectiveSequence(ParameterSchedule schedule, Variant variant)
    : words_(std::move(schedule)), variant_(variant), tower_(alphabets(words_.schedule())) {}

const Morphism& DirectiveSequence::level(long long n) const {
  {
    std::shared_lock lock(mutex_);
    const auto it = cache_.find(n);
    if (it != cache_.end()) return it->second;
  }
  Morphism m = build(words_.schedule(), variant_, n);
  std::unique_lock lock(mutex_);
  return cache_.emplace(n, std::move(m)).first->second;
}

Morphism DirectiveSequence::telescope(long long m, long long n) const {
  if (m > n) throw DomainError("telescope requires m <= n");
  Morphism acc = Morphism::identity(alphabet(n));
  for (long long k = n - 1; k >= m; --k) acc = compose(level(k), acc);
  return acc;
}

std::vector<Spacer> DirectiveSequence::alphabet(long long n) const {
  const long long shift = variant_ == Variant::Shifted ? 1 : 0;
  if (n + shift == 0) return {0, 1};
  return tower_.level(n + shift);
}

std::pair<SymbolWord, SymbolWord> lr_words(const ParameterSchedule& schedule, long long n) {
  if (n < 1) throw DomainError("lr_words requires n >= 1");
  DirectiveSequence seq(schedule, Variant::Proper);
  // L_n = a_{n-1,1} ... a_{n-1,q-2}... precisely the letters of tau_n before
  // the variable slot; R_n = a_{n-1,0}.
  auto level_parts = [&](long long k) -> std::pair<SymbolWord, SymbolWord> {
    const SpacerStage st = schedule.stage(k - 1);
    SymbolWord L(st.spacers.begin() + 1, st.spacers.end());
    SymbolWord R{st.spacers.front()};
    return {L, R};
  };
  auto [L, R] = level_parts(1);
  for (long long k = 2; k <= n; ++k) {
    auto [Lk, Rk] = level_parts(k);
    const Morphism t = seq.telescope(1, k);
    SymbolWord Lnew = t.apply(Lk);
    Lnew.insert(Lnew.end(), L.begin(), L.end());
    SymbolWord Rnew = R;
    const SymbolWord rimg = t.apply(Rk);
    Rnew.insert(Rnew.end(), rimg.begin(), rimg.end());
    L = std::move(Lnew);
    R = std::move(Rnew);
  }
  return {L, R};
}

CommonPrefix common_prefix(const ParameterSchedule& schedule, long long n) {
  if (n < 1) throw DomainError("common_prefix requires n >= 1");
  const AlphabetTower tower = alphabets(schedule);
  const auto a1 = tower.level(1);
  const Spacer lo = *std::min_element(a1.begin(), a1.end());
  const Spacer hi = *std::max_element(a1.begin(), a1.end());

  CommonPrefix out;
  if (n == 1) {
    out.word = "0" + std::string(static_cast<size_t>(lo), '1');
  } else {
    auto [L, R] = lr_words(schedule, n - 1);
    (void)R;
    std::string p;
    for (Spacer a : L) {
      p += '0';
      p.append(static_cast<size_t>(a), '1');
    }
    out.word = std::move(p);
  }
  // <tau_{[0,n)}> = min_a h_n(a) = min(A_n) + |w_{n-1}|.
  const auto an = tower.level(n);
  const GeneratingWords gw(schedule);
  out.min_image_length = BigInt(*std::min_element(an.begin(), an.end())) + gw.length(n - 1);
  out.certified_bound = Rational(lo + 1, 3 * (hi + 1)) * Rational(out.min_image_length);
  return out;
}

namespace {

struct Level1Parse {
  BigInt cut_offset;
  std::vector<Spacer> letters;
};

Level1Parse parse_level1(const std::string& window, const std::vector<Spacer>& a1,
                         const BigInt& suggested) {
  for (char c : window)
    if (c != '0' && c != '1') throw DomainError("window letters must be '0' or '1'");
  std::vector<long long> zeros;
  for (size_t i = 0; i < window.size(); ++i)
    if (window[i] == '0') zeros.push_back(static_cast<long long>(i));

  const Spacer max_a = a1.back();
  if (zeros.empty()) {
    if (static_cast<long long>(window.size()) > max_a)
      throw NotInLanguage("1-run longer than every spacer value");
    throw WindowTooShort("window lies inside a single 1-block; cannot anchor", suggested);
  }

  Level1Parse out;
  const long long lead = zeros.front();
  if (lead == 0) {
    out.cut_offset = 0;
  } else {
    std::vector<Spacer> candidates;
    for (Spacer a : a1)
      if (a >= lead) candidates.push_back(a);
    if (candidates.empty()) throw NotInLanguage("leading 1-run longer than every spacer value");
    if (candidates.size() > 1)
      throw WindowTooShort("covering letter of position 0 is ambiguous", suggested);
    const Spacer a = candidates.front();
    out.letters.push_back(a);
    out.cut_offset = (a + 1) - lead;
  }
  for (size_t i = 0; i + 1 < zeros.size(); ++i) {
    const Spacer a = zeros[i + 1] - zeros[i] - 1;
    if (!std::binary_search(a1.begin(), a1.end(), a))
      throw NotInLanguage("1-run of length " + std::to_string(a) + " is not a spacer value");
    out.letters.push_back(a);
  }
  const long long trail = static_cast<long long>(window.size()) - zeros.back() - 1;
  std::vector<Spacer> candidates;
  for (Spacer a : a1)
    if (a >= trail) candidates.push_back(a);
  if (candidates.empty()) throw NotInLanguage("trailing 1-run longer than every spacer value");
  if (candidates.size() == 1) out.letters.push_back(candidates.front());
  // Otherwise the final block is an undetermined carry and is dropped.
  return out;
}

}  // namespace

DecodeResult decode_centered(const std::string& window, const DirectiveSequence& handle,
                             long long level) {
  if (level < 1) throw DomainError("decode_centered requires level >= 1");
  if (handle.variant() == Variant::Shifted)
    throw DomainError("decode_centered operates on the tau/tau~ families over {0,1}");

  const ParameterSchedule& s = handle.schedule();
  // Margin heuristic: one full level image plus the common-prefix margin.
  const auto a_level = handle.alphabet(level);
  const BigInt max_image = BigInt(a_level.back()) + handle.words().length(level - 1);
  const BigInt suggested =
      max_image * 2 + BigInt(static_cast<long long>(common_prefix(s, level).word.size()));

  Level1Parse cur = parse_level1(window, handle.alphabet(1), suggested);
  BigInt k = cur.cut_offset;
  std::vector<Spacer> letters = std::move(cur.letters);

  for (long long m = 1; m < level; ++m) {
    if (letters.empty())
      throw WindowTooShort("no determined letters at level " + std::to_string(m), suggested);
    const SpacerStage st = s.stage(m - 1);
    const long long L = static_cast<long long>(st.spacers.size()) + 1;
    const long long var_slot = handle.variant() == Variant::Tilde ? L - 1 : L - 2;
    // Fixed letters by slot (Proper: a_{m-1,1}, ..., a_{m-1,q-1}, *, a_{m-1,0};
    // Tilde: a_{m-1,0}, ..., a_{m-1,q-1}, *).
    std::vector<Spacer> slot_letter(static_cast<size_t>(L), -1);
    if (handle.variant() == Variant::Tilde) {
      for (long long i = 0; i + 1 < L; ++i) slot_letter[static_cast<size_t>(i)] = st.spacers[static_cast<size_t>(i)];
    } else {
      for (long long i = 0; i + 2 < L; ++i) slot_letter[static_cast<size_t>(i)] = st.spacers[static_cast<size_t>(i) + 1];
      slot_letter[static_cast<size_t>(L - 1)] = st.spacers.front();
    }

    std::vector<long long> phases;
    for (long long r = 0; r < L; ++r) {
      bool ok = true;
      for (size_t i = 0; i < letters.size() && ok; ++i) {
        const long long slot = (r + static_cast<long long>(i)) % L;
        if (slot != var_slot && letters[i] != slot_letter[static_cast<size_t>(slot)]) ok = false;
      }
      if (ok) phases.push_back(r);
    }
    if (phases.empty()) throw NotInLanguage("letter sequence matches no cut phase at level " + std::to_string(m));
    if (phases.size() > 1)
      throw WindowTooShort("cut phase ambiguous at level " + std::to_string(m), suggested);
    const long long r = phases.front();
    if (var_slot - r < 0)
      throw WindowTooShort("variable slot of the covering image lies left of the window", suggested);

    // Accumulate the cut offset over the fixed letters preceding the window
    // inside the covering image: h_m(letter) = letter + |w_{m-1}|.
    const BigInt base = handle.words().length(m - 1);
    for (long long j = 0; j < r; ++j) k += BigInt(slot_letter[static_cast<size_t>(j)]) + base;

    std::vector<Spacer> next;
    for (size_t i = 0; i < letters.size(); ++i)
      if ((r + static_cast<long long>(i)) % L == var_slot) next.push_back(letters[i]);
    letters = std::move(next);
    if (letters.empty())
      throw WindowTooShort("window determines no complete level-" + std::to_string(m + 1) + " letter",
                           suggested);
    // Validate the determined letters against the next domain.
    const auto dom = handle.alphabet(m + 1);
    for (Spacer a : letters)
      if (!std::binary_search(dom.begin(), dom.end(), a))
        throw NotInLanguage("decoded letter " + std::to_string(a) + " not in level alphabet");
  }
  return DecodeResult{std::move(k), std::move(letters)};
}

}  // namespace ferenczi
