#include "ferenczi/schedule.hpp"

#include <algorithm>
#include <cassert>

namespace ferenczi {

BigInt SpacerStage::spacer_sum() const {
  BigInt s = 0;
  for (Spacer a : spacers) s += a;
  return s;
}

std::map<Spacer, BigInt> SpacerStage::counts() const {
  std::map<Spacer, BigInt> c;
  for (Spacer a : spacers) ++c[a];
  return c;
}

BigInt CutExpr::eval(long long k) const {
  if (kind == Kind::Affine) return BigInt(base) + BigInt(step) * k;
  BigInt q = base;
  for (long long i = 0; i < k; ++i) q *= step;
  return q;
}

CutExpr CutExpr::shifted(long long t) const {
  CutExpr e = *this;
  if (kind == Kind::Affine) {
    e.base = base + step * t;
  } else {
    BigInt b = eval(t);
    check_cap(b, "cut shift");
    e.base = static_cast<long long>(b);
  }
  return e;
}

ParameterSchedule::ParameterSchedule(std::vector<SpacerStage> preperiod, Tail tail)
    : preperiod_(std::move(preperiod)), tail_(std::move(tail)) {
  validate();
}

void ParameterSchedule::validate() const {
  auto check_stage = [](const SpacerStage& st, long long idx) {
    if (st.spacers.empty()) throw ValidationError("empty stage (q_n = 0 is not allowed)", idx);
    for (Spacer a : st.spacers)
      if (a < 0) throw ValidationError("negative spacer value", idx);
  };
  long long idx = 0;
  for (const auto& st : preperiod_) check_stage(st, idx++);
  if (const auto* p = std::get_if<PeriodicTail>(&tail_)) {
    if (p->period.empty()) throw ValidationError("periodic tail with empty period");
    for (const auto& st : p->period) check_stage(st, idx++);
  } else {
    const auto& g = std::get<GrowthTail>(tail_);
    if (g.named) return;
    if (g.spacers.pattern.empty())
      throw ValidationError("growth tail needs a nonempty spacer pattern");
    for (Spacer a : g.spacers.pattern)
      if (a < 0) throw ValidationError("negative spacer value in pattern");
    for (Spacer a : g.spacers.prefix)
      if (a < 0) throw ValidationError("negative spacer value in stage prefix");
    if (g.cut.kind == CutExpr::Kind::Affine) {
      if (g.cut.base < 1 || g.cut.step < 0)
        throw ValidationError("affine cut must have base >= 1 and slope >= 0");
    } else {
      if (g.cut.base < 1 || g.cut.step < 1)
        throw ValidationError("exponential cut must have base >= 1 and factor >= 1");
    }
  }
}

BigInt ParameterSchedule::cut(long long n) const {
  if (n < 0) throw DomainError("negative stage index");
  const long long pre = static_cast<long long>(preperiod_.size());
  if (n < pre) return preperiod_[static_cast<size_t>(n)].cut();
  const long long k = n - pre;
  if (const auto* p = std::get_if<PeriodicTail>(&tail_))
    return p->period[static_cast<size_t>(k % static_cast<long long>(p->period.size()))].cut();
  const auto& g = std::get<GrowthTail>(tail_);
  if (g.named) return g.named->cut(k);
  return g.cut.eval(k);
}

SpacerStage ParameterSchedule::stage(long long n) const {
  if (n < 0) throw DomainError("negative stage index");
  const long long pre = static_cast<long long>(preperiod_.size());
  if (n < pre) return preperiod_[static_cast<size_t>(n)];
  const long long k = n - pre;
  if (const auto* p = std::get_if<PeriodicTail>(&tail_))
    return p->period[static_cast<size_t>(k % static_cast<long long>(p->period.size()))];
  const auto& g = std::get<GrowthTail>(tail_);
  if (g.named) {
    check_cap(g.named->cut(k), "stage materialization");
    return SpacerStage{g.named->stage(k)};
  }
  const BigInt q_big = g.cut.eval(k);
  check_cap(q_big, "stage materialization");
  const long long q = static_cast<long long>(q_big);
  SpacerStage st;
  st.spacers.reserve(static_cast<size_t>(q));
  const long long npre = static_cast<long long>(g.spacers.prefix.size());
  const long long pat = static_cast<long long>(g.spacers.pattern.size());
  for (long long i = 0; i < q; ++i)
    st.spacers.push_back(i < npre ? g.spacers.prefix[static_cast<size_t>(i)]
                                  : g.spacers.pattern[static_cast<size_t>((i - npre) % pat)]);
  return st;
}

std::map<Spacer, BigInt> ParameterSchedule::stage_counts(long long n) const {
  if (n < 0) throw DomainError("negative stage index");
  const long long pre = static_cast<long long>(preperiod_.size());
  if (n < pre) return preperiod_[static_cast<size_t>(n)].counts();
  const long long k = n - pre;
  if (const auto* p = std::get_if<PeriodicTail>(&tail_))
    return p->period[static_cast<size_t>(k % static_cast<long long>(p->period.size()))].counts();
  const auto& g = std::get<GrowthTail>(tail_);
  if (g.named) return g.named->counts(k);
  const BigInt q = g.cut.eval(k);
  std::map<Spacer, BigInt> c;
  const BigInt npre = static_cast<long long>(g.spacers.prefix.size());
  const long long pat = static_cast<long long>(g.spacers.pattern.size());
  BigInt in_prefix = q < npre ? q : npre;
  for (long long i = 0; i < in_prefix; ++i) ++c[g.spacers.prefix[static_cast<size_t>(i)]];
  BigInt rest = q - in_prefix;
  if (rest > 0) {
    const BigInt full = rest / pat;
    const long long partial = static_cast<long long>(rest % pat);
    for (long long i = 0; i < pat; ++i) {
      BigInt cnt = full + (i < partial ? 1 : 0);
      if (cnt > 0) c[g.spacers.pattern[static_cast<size_t>(i)]] += cnt;
    }
  }
  return c;
}

BigInt ParameterSchedule::stage_sum(long long n) const {
  BigInt s = 0;
  for (const auto& [v, cnt] : stage_counts(n)) s += BigInt(v) * cnt;
  return s;
}

std::set<Spacer> ParameterSchedule::stage_values(long long n) const {
  std::set<Spacer> vals;
  for (const auto& [v, cnt] : stage_counts(n)) vals.insert(v);
  return vals;
}

std::set<Spacer> ParameterSchedule::all_values() const {
  std::set<Spacer> vals;
  for (const auto& st : preperiod_)
    for (Spacer a : st.spacers) vals.insert(a);
  if (const auto* p = std::get_if<PeriodicTail>(&tail_)) {
    for (const auto& st : p->period)
      for (Spacer a : st.spacers) vals.insert(a);
    return vals;
  }
  const auto& g = std::get<GrowthTail>(tail_);
  if (g.named) {
    const auto nv = g.named->values();
    vals.insert(nv.begin(), nv.end());
    return vals;
  }
  // Early growth stages may be too short to reach the whole prefix/pattern;
  // scan until the cut covers both, which happens by monotonicity.
  const long long span = static_cast<long long>(g.spacers.prefix.size() + g.spacers.pattern.size());
  const long long pre = static_cast<long long>(preperiod_.size());
  long long k = 0;
  while (true) {
    const auto sv = stage_values(pre + k);
    vals.insert(sv.begin(), sv.end());
    if (cut(pre + k) >= span) break;
    if (!g.cut.unbounded()) break;  // constant cut: stages repeat from here
    ++k;
  }
  return vals;
}

std::set<Spacer> ParameterSchedule::eventual_values() const {
  if (const auto* p = std::get_if<PeriodicTail>(&tail_)) {
    std::set<Spacer> vals;
    for (const auto& st : p->period)
      for (Spacer a : st.spacers) vals.insert(a);
    return vals;
  }
  const auto& g = std::get<GrowthTail>(tail_);
  if (g.named) return g.named->eventual_values();
  std::set<Spacer> vals;
  if (g.cut.unbounded()) {
    for (Spacer a : g.spacers.prefix) vals.insert(a);
    for (Spacer a : g.spacers.pattern) vals.insert(a);
  } else {
    // Constant cut: every tail stage is identical.
    const long long pre = static_cast<long long>(preperiod_.size());
    return stage_values(pre);
  }
  return vals;
}

long long ParameterSchedule::last_stray_stage() const {
  // Tail stages only ever use eventual values, so strays live in the
  // preperiod.
  const auto eventual = eventual_values();
  long long last = -1;
  const long long pre = static_cast<long long>(preperiod_.size());
  for (long long n = 0; n < pre; ++n)
    for (Spacer a : preperiod_[static_cast<size_t>(n)].spacers)
      if (!eventual.count(a)) last = std::max(last, n);
  return last;
}

Spacer ParameterSchedule::max_spacer() const {
  const auto vals = all_values();
  return vals.empty() ? 0 : *vals.rbegin();
}

bool ParameterSchedule::standard() const {
  for (const auto& st : preperiod_)
    if (st.cut() < 2) return false;
  if (const auto* p = std::get_if<PeriodicTail>(&tail_)) {
    for (const auto& st : p->period)
      if (st.cut() < 2) return false;
    return true;
  }
  const auto& g = std::get<GrowthTail>(tail_);
  if (g.named) return g.named->cut(0) >= 2;  // preset rules have monotone cuts
  if (g.cut.kind == CutExpr::Kind::Affine) return g.cut.base >= 2;
  return g.cut.base >= 2;
}

bool ParameterSchedule::cut_unbounded() const {
  if (std::holds_alternative<PeriodicTail>(tail_)) return false;
  const auto& g = std::get<GrowthTail>(tail_);
  return g.named ? g.named->cut_unbounded() : g.cut.unbounded();
}

std::vector<CountClass> ParameterSchedule::count_classes() const {
  std::vector<CountClass> out;
  if (const auto* p = std::get_if<PeriodicTail>(&tail_)) {
    // Every letter of the period recurs with a fixed positive count within
    // each period pass.
    std::map<Spacer, long long> per_period;
    long long qmax = 0;
    for (const auto& st : p->period) {
      qmax = std::max(qmax, st.cut());
      for (Spacer a : st.spacers) ++per_period[a];
    }
    for (const auto& [a, cnt] : per_period) {
      CountClass c;
      c.letter = a;
      c.bounded = false;
      c.fraction = Rational(1, (qmax + 1));  // crude but positive; refined by rank_report
      c.cut_threshold = 0;
      out.push_back(c);
    }
    return out;
  }
  const auto& g = std::get<GrowthTail>(tail_);
  if (g.named) return g.named->count_classes();
  std::map<Spacer, long long> in_prefix, in_pattern;
  for (Spacer a : g.spacers.prefix) ++in_prefix[a];
  for (Spacer a : g.spacers.pattern) ++in_pattern[a];
  const long long L = static_cast<long long>(g.spacers.pattern.size());
  const long long P = static_cast<long long>(g.spacers.prefix.size());
  for (const auto v : eventual_values()) {
    CountClass c;
    c.letter = v;
    const long long cnt = in_pattern.count(v) ? in_pattern[v] : 0;
    if (cnt > 0) {
      // f_n(v) >= floor((q - P)/L) * cnt >= (cnt / 2L) q once q >= 2(P + L).
      c.bounded = false;
      c.fraction = Rational(cnt, 2 * L);
      c.cut_threshold = 2 * (P + L);
    } else {
      c.bounded = true;
      c.bound = in_prefix[v];
    }
    out.push_back(c);
  }
  return out;
}

/// --- operations -------------------------------------------------------

std::vector<Spacer> merged_spacers(const ParameterSchedule& s, long long lo, long long hi) {
  if (lo >= hi) throw DomainError("merged_spacers: need lo < hi");
  // Expansion of w_hi over w_lo copies: recursively
  //   spacers(lo, m+1) = spacers(lo, m) a_{m,0} spacers(lo, m) a_{m,1} ...
  BigInt total = 1;
  for (long long j = lo; j < hi; ++j) total *= s.cut(j) + 1;
  check_cap(total, "contracted stage");
  std::vector<Spacer> acc;  // spacers(lo, m), starts empty for m = lo
  for (long long m = lo; m < hi; ++m) {
    const SpacerStage st = s.stage(m);
    std::vector<Spacer> next;
    next.reserve(acc.size() * (st.spacers.size() + 1) + st.spacers.size());
    next.insert(next.end(), acc.begin(), acc.end());
    for (Spacer a : st.spacers) {
      next.push_back(a);
      next.insert(next.end(), acc.begin(), acc.end());
    }
    acc = std::move(next);
  }
  return acc;
}

namespace {

/// Stage source that walks a schedule from a given index; used to rebuild
/// tails after grouping.
struct GroupWalk {
  const ParameterSchedule& s;
  long long next = 0;

  // Consume one group: a single stage when q >= 2, else two stages.
  std::pair<long long, long long> take_group() {
    const long long start = next;
    if (s.cut(start) >= 2) {
      next = start + 1;
    } else {
      next = start + 2;
    }
    return {start, next};
  }
};

}  // namespace

ParameterSchedule standardize(const ParameterSchedule& s) {
  if (s.standard()) return s;

  if (const auto* g = std::get_if<GrowthTail>(&s.tail())) {
    // Unbounded cuts are eventually >= 2; merge the finitely many early
    // q = 1 stages into the preperiod, then shift the tail start.
    long long safe = static_cast<long long>(s.preperiod().size());
    if (!g->named) {
      long long k = 0;
      while (g->cut.eval(k) < 2) {
        if (!g->cut.unbounded())
          throw ValidationError("growth tail stuck at q_n = 1");  // blocked by validate()
        ++k;
      }
      safe = static_cast<long long>(s.preperiod().size()) + k;
    }
    GroupWalk walk{s, 0};
    std::vector<SpacerStage> pre;
    while (walk.next < safe) {
      auto [lo, hi] = walk.take_group();
      pre.push_back(SpacerStage{merged_spacers(s, lo, hi)});
    }
    GrowthTail tail = *g;
    const long long shift = walk.next - static_cast<long long>(s.preperiod().size());
    if (shift > 0) {
      if (tail.named)
        tail.named = tail.named->shifted(shift);
      else
        tail.cut = tail.cut.shifted(shift);
      // Pattern layouts restart per stage, so only the cut shifts.
    }
    return ParameterSchedule(std::move(pre), tail);
  }

  // Periodic tail: group greedily and detect when the grouping becomes
  // periodic in the period offset.
  const auto& p = std::get<PeriodicTail>(s.tail());
  const long long pre_len = static_cast<long long>(s.preperiod().size());
  const long long P = static_cast<long long>(p.period.size());
  GroupWalk walk{s, 0};
  std::vector<SpacerStage> pre;
  // Consume groups until the group start lies in the tail.
  while (walk.next < pre_len) {
    auto [lo, hi] = walk.take_group();
    pre.push_back(SpacerStage{merged_spacers(s, lo, hi)});
  }
  // Now track period offsets of group starts until one repeats.
  std::map<long long, size_t> seen;  // offset -> index into groups
  std::vector<SpacerStage> groups;
  while (true) {
    const long long offset = (walk.next - pre_len) % P;
    auto it = seen.find(offset);
    if (it != seen.end()) {
      pre.insert(pre.end(), groups.begin(), groups.begin() + static_cast<long long>(it->second));
      std::vector<SpacerStage> period(groups.begin() + static_cast<long long>(it->second),
                                      groups.end());
      return ParameterSchedule(std::move(pre), PeriodicTail{std::move(period)});
    }
    seen[offset] = groups.size();
    auto [lo, hi] = walk.take_group();
    groups.push_back(SpacerStage{merged_spacers(s, lo, hi)});
  }
}

ParameterSchedule contract(const ParameterSchedule& s, const std::vector<long long>& cut_points,
                           long long stride) {
  if (cut_points.empty() || cut_points.front() != 0)
    throw DomainError("contract: cut points must start at 0");
  for (size_t i = 1; i < cut_points.size(); ++i)
    if (cut_points[i] <= cut_points[i - 1])
      throw DomainError("contract: cut points must be strictly increasing");
  if (stride < 1) throw DomainError("contract: stride must be >= 1");

  std::vector<SpacerStage> pre;
  for (size_t i = 0; i + 1 < cut_points.size(); ++i)
    pre.push_back(SpacerStage{merged_spacers(s, cut_points[i], cut_points[i + 1])});
  const long long tail_start = cut_points.back();

  if (const auto* g = std::get_if<GrowthTail>(&s.tail())) {
    if (stride != 1)
      throw DomainError(
          "contract: growth tails support stride 1 only (merged growth cuts leave the "
          "affine/exponential class)");
    const long long pre_len = static_cast<long long>(s.preperiod().size());
    GrowthTail tail = *g;
    std::vector<SpacerStage> pre2 = pre;
    if (tail_start < pre_len) {
      for (long long n = tail_start; n < pre_len; ++n) pre2.push_back(s.stage(n));
    } else if (tail_start > pre_len) {
      if (tail.named)
        tail.named = tail.named->shifted(tail_start - pre_len);
      else
        tail.cut = tail.cut.shifted(tail_start - pre_len);
    }
    return ParameterSchedule(std::move(pre2), tail);
  }

  const auto& p = std::get<PeriodicTail>(s.tail());
  const long long pre_len = static_cast<long long>(s.preperiod().size());
  const long long P = static_cast<long long>(p.period.size());
  if (stride == 1 && tail_start <= pre_len) {
    std::vector<SpacerStage> pre2 = pre;
    for (long long n = tail_start; n < pre_len; ++n) pre2.push_back(s.stage(n));
    return ParameterSchedule(std::move(pre2), p);
  }
  // Merged groups of `stride` stages; group content depends on the start
  // offset modulo the period once past the preperiod.
  std::map<long long, size_t> seen;
  std::vector<SpacerStage> groups;
  long long start = tail_start;
  while (true) {
    if (start >= pre_len) {
      const long long offset = (start - pre_len) % P;
      auto it = seen.find(offset);
      if (it != seen.end()) {
        pre.insert(pre.end(), groups.begin(), groups.begin() + static_cast<long long>(it->second));
        std::vector<SpacerStage> period(groups.begin() + static_cast<long long>(it->second),
                                        groups.end());
        return ParameterSchedule(std::move(pre), PeriodicTail{std::move(period)});
      }
      seen[offset] = groups.size();
    }
    groups.push_back(SpacerStage{merged_spacers(s, start, start + stride)});
    if (start < pre_len) pre.push_back(groups.back()), groups.pop_back();
    start += stride;
  }
}

AlphabetTower alphabets(const ParameterSchedule& s) {
  AlphabetTower t;
  const auto eventual = s.eventual_values();
  t.stable.assign(eventual.begin(), eventual.end());
  t.d = static_cast<long long>(t.stable.size());
  const long long stray = s.last_stray_stage();
  t.n0 = std::max<long long>(1, stray + 2);
  for (long long n = 1; n <= t.n0; ++n) {
    std::set<Spacer> an(eventual.begin(), eventual.end());
    const long long pre = static_cast<long long>(s.preperiod().size());
    for (long long m = n - 1; m < pre; ++m) {
      const auto sv = s.stage_values(m);
      an.insert(sv.begin(), sv.end());
    }
    t.prestable.emplace_back(an.begin(), an.end());
  }
  return t;
}

std::vector<Spacer> AlphabetTower::level(long long n) const {
  if (n < 1) throw DomainError("alphabet levels start at 1 (A_0 = {0,1} is the word alphabet)");
  if (n >= n0) return stable;
  return prestable[static_cast<size_t>(n - 1)];
}

RationalVector spacer_counts(const ParameterSchedule& s, long long n) {
  if (n < 1) throw DomainError("spacer_counts requires n >= 1");
  const auto tower = alphabets(s);
  RationalVector f(tower.level(n));
  for (const auto& [v, cnt] : s.stage_counts(n - 1)) f.at(v) = Rational(cnt);
  return f;
}

}  // namespace ferenczi
