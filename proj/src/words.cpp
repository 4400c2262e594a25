#include "ferenczi/words.hpp"

#include <algorithm>

namespace ferenczi {

GeneratingWords::GeneratingWords(ParameterSchedule schedule) : schedule_(std::move(schedule)) {
  lengths_.push_back(BigInt(1));  // w_0 = "0"
}

BigInt GeneratingWords::length(long long n) const {
  if (n < 0) throw DomainError("negative word level");
  {
    std::shared_lock lock(mutex_);
    if (static_cast<size_t>(n) < lengths_.size()) return lengths_[static_cast<size_t>(n)];
  }
  std::unique_lock lock(mutex_);
  while (static_cast<size_t>(n) >= lengths_.size()) {
    const long long m = static_cast<long long>(lengths_.size()) - 1;
    lengths_.push_back((schedule_.cut(m) + 1) * lengths_.back() + schedule_.stage_sum(m));
  }
  return lengths_[static_cast<size_t>(n)];
}

std::string GeneratingWords::word(long long n) const {
  check_cap(length(n), "generating word");
  std::string w = "0";
  for (long long m = 0; m < n; ++m) {
    const SpacerStage st = schedule_.stage(m);
    std::string next;
    next.reserve(static_cast<size_t>(static_cast<unsigned long long>(length(m + 1))));
    next += w;
    for (Spacer a : st.spacers) {
      next.append(static_cast<size_t>(a), '1');
      next += w;
    }
    w = std::move(next);
  }
  return w;
}

BigInt GeneratingWords::zero_count(long long n) const {
  BigInt z = 1;
  for (long long m = 0; m < n; ++m) z *= schedule_.cut(m) + 1;
  return z;
}

std::string generating_word(const GeneratingWords& w, long long n) { return w.word(n); }
BigInt word_length(const GeneratingWords& w, long long n) { return w.length(n); }

namespace {

void collect_factors(const std::string& text, long long ell, std::set<std::string>& out) {
  if (static_cast<long long>(text.size()) < ell) return;
  for (size_t i = 0; i + static_cast<size_t>(ell) <= text.size(); ++i)
    out.insert(text.substr(i, static_cast<size_t>(ell)));
}

}  // namespace

FactorSet language(const GeneratingWords& w, long long ell) {
  if (ell < 1) throw DomainError("language requires ell >= 1");
  long long N = 0;
  while (w.length(N) < ell) ++N;

  // Spacer values occurring at stages >= N separate consecutive w_N copies
  // in every deeper generating word. Early growth-tail stages may use only
  // part of the pattern, but the preperiod is the only source of values
  // missing from the eventual set.
  const ParameterSchedule& s = w.schedule();
  std::set<Spacer> spacer_set = s.eventual_values();
  for (long long m = N; m < static_cast<long long>(s.preperiod().size()); ++m) {
    const auto sv = s.stage_values(m);
    spacer_set.insert(sv.begin(), sv.end());
  }

  const std::string wn = w.word(N);
  FactorSet fs;
  fs.length = ell;
  fs.base_level = N;
  fs.spacer_set = spacer_set;
  for (Spacer alpha : spacer_set) {
    std::string doubled;
    doubled.reserve(2 * wn.size() + static_cast<size_t>(alpha));
    doubled += wn;
    doubled.append(static_cast<size_t>(alpha), '1');
    doubled += wn;
    collect_factors(doubled, ell, fs.words);
  }
  return fs;
}

std::pair<BigInt, BigInt> factor_stats(const GeneratingWords& w, long long ell) {
  const FactorSet fs = language(w, ell);
  BigInt lo = -1, hi = -1;
  for (const auto& word : fs.words) {
    const BigInt zeros = static_cast<long long>(std::count(word.begin(), word.end(), '0'));
    if (lo < 0 || zeros < lo) lo = zeros;
    if (zeros > hi) hi = zeros;
  }
  return {lo, hi};
}

std::vector<TowerAddress> locate(const GeneratingWords& w, const BigInt& j, long long target_level,
                                 long long ambient_level) {
  if (target_level > ambient_level) throw DomainError("locate: target level above ambient level");
  if (j < 0 || j >= w.length(ambient_level)) throw DomainError("locate: position out of range");

  std::vector<TowerAddress> out;
  BigInt pos = j;
  for (long long m = ambient_level - 1; m >= target_level; --m) {
    const SpacerStage st = w.schedule().stage(m);
    const BigInt L = w.length(m);
    // Segments of w_{m+1}: copy 0, gap 0, copy 1, ..., gap q-1, copy q.
    BigInt cursor = 0;
    TowerAddress addr;
    addr.level = m;
    bool found = false;
    for (size_t i = 0; i <= st.spacers.size(); ++i) {
      if (pos < cursor + L) {
        addr.kind = TowerAddress::Kind::Copy;
        addr.index = static_cast<long long>(i);
        addr.offset = pos - cursor;
        found = true;
        break;
      }
      cursor += L;
      if (i < st.spacers.size()) {
        const Spacer gap = st.spacers[i];
        if (pos < cursor + gap) {
          addr.kind = TowerAddress::Kind::Spacer;
          addr.index = static_cast<long long>(i);
          addr.offset = pos - cursor;
          addr.spacer_value = gap;
          found = true;
          break;
        }
        cursor += gap;
      }
    }
    if (!found) throw DomainError("locate: internal decomposition error");
    out.push_back(addr);
    if (addr.kind == TowerAddress::Kind::Spacer) break;  // no structure below a 1-block
    pos = addr.offset;
  }
  return out;
}

BigInt locate_encode(const GeneratingWords& w, const std::vector<TowerAddress>& addresses,
                     long long ambient_level) {
  BigInt pos = 0;
  long long expected = ambient_level - 1;
  for (const auto& addr : addresses) {
    if (addr.level != expected) throw DomainError("locate_encode: level gap in address list");
    const SpacerStage st = w.schedule().stage(addr.level);
    const BigInt L = w.length(addr.level);
    BigInt cursor = 0;
    const long long idx = static_cast<long long>(addr.index);
    for (long long i = 0; i < idx; ++i) {
      cursor += L;
      cursor += st.spacers[static_cast<size_t>(i)];
    }
    if (addr.kind == TowerAddress::Kind::Spacer) cursor += L;
    pos += cursor + addr.offset;
    if (addr.kind == TowerAddress::Kind::Spacer) return pos;
    --expected;
  }
  return pos;
}

namespace {

/// tau_k applied to a word over A_{k+1}, for k >= 1: x -> a_{k-1,1} ...
/// a_{k-1,q-1} x a_{k-1,0}.
std::vector<Spacer> apply_level(const ParameterSchedule& s, long long k,
                                const std::vector<Spacer>& word) {
  const SpacerStage st = s.stage(k - 1);
  const size_t q = st.spacers.size();
  std::vector<Spacer> out;
  out.reserve(word.size() * (q + 1));
  for (Spacer x : word) {
    for (size_t i = 1; i < q; ++i) out.push_back(st.spacers[i]);
    out.push_back(x);
    out.push_back(st.spacers[0]);
  }
  return out;
}

std::string apply_tau0(const std::vector<Spacer>& word) {
  std::string out;
  for (Spacer a : word) {
    out += '0';
    out.append(static_cast<size_t>(a), '1');
  }
  return out;
}

}  // namespace

std::string asymptotic_tail(const GeneratingWords& w, long long ell) {
  if (ell < 1) throw DomainError("asymptotic_tail requires ell >= 1");
  check_cap(BigInt(ell), "asymptotic tail");
  const ParameterSchedule& s = w.schedule();
  // R_{1,1} = a_{0,0};  R_{1,n+1} = R_{1,n} tau_{[1,n+1)}(a_{n,0}).
  std::vector<Spacer> r{s.stage(0).spacers[0]};
  long long n = 1;
  std::string tail = apply_tau0(r);
  while (static_cast<long long>(tail.size()) < ell) {
    check_cap(BigInt(static_cast<long long>(tail.size())), "asymptotic tail");
    std::vector<Spacer> img{s.stage(n).spacers[0]};
    for (long long k = n; k >= 1; --k) img = apply_level(s, k, img);
    r.insert(r.end(), img.begin(), img.end());
    tail = apply_tau0(r);
    ++n;
  }
  return tail.substr(0, static_cast<size_t>(ell));
}

}  // namespace ferenczi
