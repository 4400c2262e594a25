#include "ferenczi/measure.hpp"

#include <algorithm>

namespace ferenczi {

const RationalInterval& IntervalVector::at(Spacer s) const {
  const auto it = std::lower_bound(symbols.begin(), symbols.end(), s);
  if (it == symbols.end() || *it != s)
    throw DomainError("interval vector has no entry for symbol " + std::to_string(s));
  return values[static_cast<size_t>(it - symbols.begin())];
}

RationalInterval& IntervalVector::at(Spacer s) {
  return const_cast<RationalInterval&>(static_cast<const IntervalVector&>(*this).at(s));
}

bool IntervalVector::all_exact() const {
  for (const auto& v : values)
    if (!v.exact()) return false;
  return true;
}

RationalInterval IntervalVector::total() const {
  RationalInterval t(Rational(0));
  for (const auto& v : values) t = t + v;
  return t;
}

namespace {

constexpr long long kGrowthTailDigits = 40;  // target width 10^-40 for truncations

Rational growth_target_width() {
  BigInt d = 1;
  for (int i = 0; i < kGrowthTailDigits; ++i) d *= 10;
  return Rational(1, d);
}

IntervalVector zero_vector(const std::vector<Spacer>& symbols) {
  IntervalVector v;
  v.symbols = symbols;
  v.values.assign(symbols.size(), RationalInterval(Rational(0)));
  return v;
}

}  // namespace

IntervalVector v_vector(const ParameterSchedule& s, long long m) {
  const AlphabetTower tower = alphabets(s);
  if (m < tower.n0)
    throw DomainError("v_vector requires m >= n0 = " + std::to_string(tower.n0));
  IntervalVector v = zero_vector(tower.stable);

  if (const auto* p = std::get_if<PeriodicTail>(&s.tail())) {
    const long long pre_len = static_cast<long long>(s.preperiod().size());
    const long long P = static_cast<long long>(p->period.size());
    // First k >= m whose stage k-1 is tail-aligned to a period boundary.
    long long K = std::max(m, pre_len + 1);
    while ((K - 1 - pre_len) % P != 0) ++K;

    BigInt q = 1;  // Q_{m-1, k}, advanced as k grows
    for (long long k = m; k < K; ++k) {
      q *= s.cut(k - 1) + 1;
      for (const auto& [val, cnt] : s.stage_counts(k - 1))
        v.at(val).lower += Rational(cnt, q);
    }
    // One full period block T_0 = sum_{i=0}^{P-1} f_{K+i}(a) / Q_{K-1,K+i};
    // blocks repeat scaled by 1/B with B the period product of (q+1).
    IntervalVector block = zero_vector(tower.stable);
    BigInt qb = 1;  // Q_{K-1, k}
    BigInt B = 1;
    for (long long i = 0; i < P; ++i) {
      const long long k = K + i;
      qb *= s.cut(k - 1) + 1;
      B *= s.cut(k - 1) + 1;
      for (const auto& [val, cnt] : s.stage_counts(k - 1))
        block.at(val).lower += Rational(cnt, qb);
    }
    const Rational geometric = Rational(B) / Rational(B - 1);
    const Rational prefix_scale = Rational(1) / Rational(q);  // 1 / Q_{m-1,K-1}
    for (size_t i = 0; i < v.values.size(); ++i) {
      const Rational exact =
          v.values[i].lower + block.values[i].lower * geometric * prefix_scale;
      v.values[i] = RationalInterval(exact);
    }
    return v;
  }

  // Growth tail: exact partial sum to K, then the bracket
  // 0 <= tail(a) <= (3/2) / Q_{m-1,K-1}.
  const Rational target = growth_target_width();
  BigInt q = 1;  // Q_{m-1,k}
  long long k = m;
  while (true) {
    // Invariant entering the loop body: q = Q_{m-1,k-1}.
    const Rational tail_bound = Rational(3, 2) / Rational(q);
    if (tail_bound <= target && k > m) {
      for (auto& val : v.values) val = RationalInterval(val.lower, val.lower + tail_bound);
      return v;
    }
    q *= s.cut(k - 1) + 1;
    for (const auto& [val, cnt] : s.stage_counts(k - 1)) v.at(val).lower += Rational(cnt, q);
    ++k;
  }
}

MeasureVector measure_vector(const ParameterSchedule& s, long long m) {
  if (m < 0) throw DomainError("measure_vector requires m >= 0");
  const AlphabetTower tower = alphabets(s);
  if (m >= tower.n0) {
    const IntervalVector v = v_vector(s, m);
    const RationalVector h = heights(s, m);
    RationalInterval denom(Rational(0));
    for (size_t i = 0; i < v.symbols.size(); ++i)
      denom = denom + v.values[i].scaled(h.at(v.symbols[i]));
    MeasureVector mu;
    mu.level = m;
    mu.values = v;
    for (auto& val : mu.values.values) val = val.divided_by(denom);
    return mu;
  }
  // Below stabilization: push forward with P_{m,n0}.
  const MeasureVector base = measure_vector(s, tower.n0);
  const RationalMatrix pmn = product_direct(s, m, tower.n0);
  MeasureVector mu;
  mu.level = m;
  mu.values = zero_vector(std::vector<Spacer>(pmn.row_symbols()));
  for (Spacer row : pmn.row_symbols()) {
    RationalInterval acc(Rational(0));
    for (Spacer col : pmn.col_symbols()) acc = acc + base.values.at(col).scaled(pmn.at(row, col));
    mu.values.at(row) = acc;
  }
  return mu;
}

IntervalVector tower_masses(const ParameterSchedule& s, long long n) {
  const MeasureVector mu = measure_vector(s, n);
  const RationalVector h = heights(s, n);
  IntervalVector masses = mu.values;
  for (size_t i = 0; i < masses.symbols.size(); ++i)
    masses.values[i] = masses.values[i].scaled(h.at(masses.symbols[i]));
  return masses;
}

namespace {

long long count_occurrences(const std::string& text, const std::string& pattern) {
  long long n = 0;
  size_t pos = text.find(pattern);
  while (pos != std::string::npos) {
    ++n;
    pos = text.find(pattern, pos + 1);
  }
  return n;
}

}  // namespace

RationalInterval cylinder_bracket(const ParameterSchedule& s, const std::string& u,
                                  long long level) {
  DirectiveSequence seq(s, Variant::Proper);
  const Morphism tau = seq.telescope(0, level);
  const MeasureVector mu = measure_vector(s, level);
  const Rational boundary_letters = Rational(static_cast<long long>(u.size()) - 1);
  RationalInterval inside(Rational(0));
  RationalInterval musum(Rational(0));
  for (Spacer a : tau.domain()) {
    std::string img;
    for (Spacer c : tau.image(a)) img += static_cast<char>('0' + c);
    inside = inside + mu.values.at(a).scaled(Rational(count_occurrences(img, u)));
    musum = musum + mu.values.at(a);
  }
  return RationalInterval(inside.lower, inside.upper + boundary_letters * musum.upper);
}

RationalInterval cylinder_measure(const ParameterSchedule& s, const std::string& u,
                                  const Rational& width) {
  if (u.empty()) return RationalInterval(Rational(1));
  for (char c : u)
    if (c != '0' && c != '1') throw DomainError("cylinder word letters must be '0' or '1'");
  GeneratingWords w(s);
  const FactorSet lang = language(w, static_cast<long long>(u.size()));
  if (!lang.words.count(u)) return RationalInterval(Rational(0));

  const AlphabetTower tower = alphabets(s);
  RationalInterval best(Rational(0), Rational(1));
  for (long long n = tower.n0;; ++n) {
    const BigInt max_img = BigInt(alphabets(s).level(n).back()) + w.length(n - 1);
    if (max_img > materialization_cap()) return best;
    const RationalInterval bracket = cylinder_bracket(s, u, n);
    if (bracket.width() < best.width()) best = bracket;
    if (best.width() <= width) return best;
  }
}

RankReport rank_report(const ParameterSchedule& s) {
  if (!s.standard())
    throw DomainError("rank_report requires a standardized schedule (apply standardize first)");
  const AlphabetTower tower = alphabets(s);
  RankReport report;

  const bool periodic = std::holds_alternative<PeriodicTail>(s.tail());
  std::map<Spacer, CountClass> classes;
  for (const auto& c : s.count_classes()) classes[c.letter] = c;

  for (Spacer a : tower.stable) {
    LetterEvidence e;
    e.letter = a;
    if (periodic) {
      const auto& p = std::get<PeriodicTail>(s.tail());
      const long long P = static_cast<long long>(p.period.size());
      long long qmax = 0;
      for (const auto& st : p.period) qmax = std::max(qmax, st.cut());
      for (const auto& st : s.preperiod()) qmax = std::max(qmax, st.cut());
      BigInt denom = 1;
      for (long long i = 0; i <= P; ++i) denom *= qmax + 1;
      e.verdict = LetterVerdict::In;
      e.lower_bound = Rational(1, denom);
      e.evidence = "letter occurs in every full period pass, so for every m past the preperiod "
                   "sum_{k>=m} f_k(" + std::to_string(a) + ")/Q_{m-1,k} >= 1/(q_max+1)^(P+1) = " +
                   to_string(*e.lower_bound);
    } else if (classes.count(a)) {
      const CountClass& c = classes[a];
      if (!c.bounded) {
        e.verdict = LetterVerdict::In;
        e.lower_bound = c.fraction;
        e.evidence = "f_k(" + std::to_string(a) + ") >= " + to_string(c.fraction) +
                     " q_{k-1} once q_{k-1} >= " + c.cut_threshold.str() +
                     ", and sum_k q_{k-1}/Q_{m-1,k} = 1, so the per-letter sums stay >= " +
                     to_string(c.fraction);
      } else if (s.cut_unbounded()) {
        e.verdict = LetterVerdict::Out;
        e.evidence = "f_k(" + std::to_string(a) + ") + 1 <= " + BigInt(c.bound + 1).str() +
                     " for all tail stages while q_k grows without bound, so the tower mass "
                     "mu(T_n(" + std::to_string(a) + ")) <= C K/(q_{n-1}+1) -> 0";
      } else {
        // Constant cut: the bounded count recurs every stage.
        e.verdict = LetterVerdict::In;
        const BigInt q0 = s.cut(static_cast<long long>(s.preperiod().size()));
        e.lower_bound = Rational(1, q0 + 1);
        e.evidence = "letter occurs at every tail stage with constant cut, so the per-letter "
                     "sums stay >= 1/(q+1)";
      }
    } else {
      e.verdict = LetterVerdict::Undetermined;
      e.evidence = "no applicable sufficient condition for this growth rule";
    }
    report.letters.push_back(e);
    if (e.verdict == LetterVerdict::In) report.a_mu.push_back(a);
  }

  bool any_undetermined = false, all_in = true;
  for (const auto& e : report.letters) {
    if (e.verdict == LetterVerdict::Undetermined) any_undetermined = true;
    if (e.verdict != LetterVerdict::In) all_in = false;
  }
  report.exact_finite_rank = all_in             ? RankVerdict::Exact
                             : any_undetermined ? RankVerdict::Unknown
                                                : RankVerdict::NotExact;
  report.d_w_mu = static_cast<long long>(report.a_mu.size());
  return report;
}

}  // namespace ferenczi
