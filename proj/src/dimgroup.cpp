#include "ferenczi/dimgroup.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <set>

namespace ferenczi {

ValuationProfile valuation_profile(const std::vector<BigInt>& preperiod,
                                   const std::vector<BigInt>& period, const BigInt& p) {
  if (p < 2 || !boost::multiprecision::miller_rabin_test(p, 32))
    throw DomainError("valuation base must be prime");
  for (const auto& a : period)
    if (a % p == 0) return {Valuation::Infinite, 0};
  long long v = 0;
  for (BigInt a : preperiod) {
    if (a <= 0) throw DomainError("base terms must be positive");
    while (a % p == 0) {
      a /= p;
      ++v;
    }
  }
  return {Valuation::Finite, v};
}

namespace {

std::vector<BigInt> prime_factors(BigInt n) {
  std::vector<BigInt> out;
  for (BigInt d = 2; d * d <= n && d < 1000000; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) {
    if (!boost::multiprecision::miller_rabin_test(n, 32))
      throw DomainError("cannot factor denominator " + n.str() + " for membership test");
    out.push_back(n);
  }
  return out;
}

}  // namespace

bool tail_group_contains(const TailBase& base, const Rational& x) {
  if (!base.periodic)
    throw DomainError("membership test needs an eventually periodic base sequence");
  const BigInt den = denominator(x);
  for (const BigInt& p : prime_factors(den)) {
    const ValuationProfile prof = valuation_profile(base.preperiod, base.period, p);
    if (prof.kind == Valuation::Infinite) continue;
    BigInt d = den;
    long long v = 0;
    while (d % p == 0) {
      d /= p;
      ++v;
    }
    if (v > prof.value) return false;
  }
  return true;
}

namespace {

TailBase make_tail_base(const ParameterSchedule& s, long long n0) {
  TailBase base;
  const long long start = n0 - 1;
  if (const auto* p = std::get_if<PeriodicTail>(&s.tail())) {
    const long long pre_len = static_cast<long long>(s.preperiod().size());
    const long long P = static_cast<long long>(p->period.size());
    for (long long n = start; n < pre_len; ++n) base.preperiod.push_back(s.cut(n) + 1);
    const long long tail_from = std::max(start, pre_len);
    const long long phase = (tail_from - pre_len) % P;
    for (long long i = 0; i < P; ++i)
      base.period.push_back(
          p->period[static_cast<size_t>((phase + i) % P)].cut() + 1);
    // Rotate-canonical: absorb nothing further; preperiod + rotated period
    // is already exact.
  } else {
    base.periodic = false;
  }
  for (long long n = start; n < start + 8; ++n) base.preview.push_back(s.cut(n) + 1);
  return base;
}

}  // namespace

DimensionGroupDescriptor dimension_group(const ParameterSchedule& s) {
  if (!s.standard())
    throw DomainError("dimension_group requires a standardized schedule");
  const AlphabetTower tower = alphabets(s);
  if (tower.d < 2) throw DomainError("dimension_group requires d_W >= 2");

  DimensionGroupDescriptor d;
  d.a_w = tower.stable;
  d.a_prime = tower.stable.front();
  d.b_w.assign(tower.stable.begin() + 1, tower.stable.end());
  d.n0 = tower.n0;
  d.tail_base = make_tail_base(s, tower.n0);
  d.topological_rank = tower.d;

  d.z = v_vector(s, tower.n0);
  d.z.at(d.a_prime) = RationalInterval(Rational(1));

  GeneratingWords w(s);
  for (Spacer b : d.b_w) d.u_w[b] = BigInt(b - d.a_prime);
  d.u_w[d.a_prime] = BigInt(d.a_prime) + w.length(tower.n0 - 1);

  // Aperiodicity hypothesis: the directive sequence is primitive by
  // construction and every stable-level matrix has det = q_{n-1} + 1 != 0.
  d.aperiodicity_certified = true;

  // Invariant checks on the computed data.
  RationalInterval bsum(Rational(0));
  for (Spacer b : d.b_w) {
    const auto& zb = d.z.at(b);
    if (!(zb.lower > 0 && zb.upper < 1))
      throw DomainError("z(b) escaped (0,1); measure data inconsistent");
    bsum = bsum + zb;
  }
  if (!(bsum.upper < 1)) throw DomainError("sum of z over B_W is not < 1");
  return d;
}

std::optional<bool> DimensionGroupDescriptor::cone_positive(
    const std::map<Spacer, Rational>& x) const {
  RationalInterval dot(Rational(0));
  for (const auto& [sym, coeff] : x) {
    const RationalInterval& zi = z.at(sym);
    if (coeff >= 0)
      dot = dot + RationalInterval(zi.lower * coeff, zi.upper * coeff);
    else
      dot = dot + RationalInterval(zi.upper * coeff, zi.lower * coeff);
  }
  if (dot.lower > 0) return true;
  if (dot.upper <= 0) return false;
  return std::nullopt;
}

OrbitEquivalenceDescriptor orbit_equivalence(const ParameterSchedule& s) {
  const DimensionGroupDescriptor d = dimension_group(s);
  OrbitEquivalenceDescriptor oe;
  oe.tail_base = d.tail_base;
  oe.exact = d.z.all_exact();

  RationalInterval dot(Rational(0));
  for (Spacer a : d.a_w) dot = dot + d.z.at(a).scaled(Rational(d.u_w.at(a)));
  oe.c = RationalInterval(Rational(1)).divided_by(dot);

  oe.z_tilde = d.z;
  for (size_t i = 0; i < oe.z_tilde.symbols.size(); ++i) {
    const auto& zi = d.z.values[i];
    oe.z_tilde.values[i] =
        RationalInterval(zi.lower * oe.c.lower, zi.upper * oe.c.upper);
  }
  for (Spacer b : d.b_w) oe.generators.push_back(oe.z_tilde.at(b));
  oe.coset_scale = oe.z_tilde.at(d.a_prime);

  if (oe.exact) {
    oe.rationally_independent = false;
    oe.relation_note =
        "all generators are exact rationals, so every Z-linear relation among them is "
        "decidable by exact arithmetic; the group J_W lies in Q";
  } else {
    oe.relation_note =
        "growth tail: generators carry certified interval enclosures only (warning: "
        "rational-relation report unavailable)";
  }
  return oe;
}

namespace {

struct DigitState {
  std::vector<Rational> x;  // per-letter remainders
  long long r_phase;        // position in the r period (-1 while in r preperiod)
  auto operator<=>(const DigitState&) const = default;
};

}  // namespace

RealizeResult realize(const FerencziTypeData& data) {
  // --- validation
  if (data.letters.empty()) throw ValidationError("B must be nonempty");
  if (data.w < 1) throw ValidationError("unit component w must be a positive integer");
  if (data.r_period.empty()) throw ValidationError("r must be eventually periodic (nonempty period)");
  for (long long r : data.r_pre)
    if (r < 2) throw ValidationError("r_n >= 2 required");
  for (long long r : data.r_period)
    if (r < 2) throw ValidationError("r_n >= 2 required");
  Rational zsum = 0;
  std::set<long long> vseen;
  for (const auto& b : data.letters) {
    if (!data.z.count(b) || !data.v.count(b))
      throw ValidationError("letter " + b + " missing z or v entry");
    const Rational& zb = data.z.at(b);
    if (!(zb > 0 && zb < 1)) throw ValidationError("z(" + b + ") must lie in (0,1)");
    zsum += zb;
    const long long vb = data.v.at(b);
    if (vb < 1) throw ValidationError("v(" + b + ") must be a positive integer");
    if (!vseen.insert(vb).second) throw ValidationError("v entries must be pairwise distinct");
  }
  if (!(zsum < 1)) throw ValidationError("sum of z over B must be < 1");

  const Spacer a_prime = data.w - 1;
  std::vector<std::string> letters = data.letters;
  std::sort(letters.begin(), letters.end(),
            [&](const std::string& l, const std::string& r) { return data.v.at(l) < data.v.at(r); });
  std::map<std::string, Spacer> spacer_of;
  for (const auto& b : letters) spacer_of[b] = a_prime + data.v.at(b);

  auto r_at = [&](long long k) -> long long {
    const long long pre = static_cast<long long>(data.r_pre.size());
    if (k < pre) return data.r_pre[static_cast<size_t>(k)];
    return data.r_period[static_cast<size_t>((k - pre) % static_cast<long long>(data.r_period.size()))];
  };

  // --- digit stream with cycle detection
  const long long kMaxSteps = 4096;
  std::vector<Rational> x;
  for (const auto& b : letters) x.push_back(data.z.at(b));
  std::vector<SpacerStage> stages;
  std::map<DigitState, size_t> seen;
  std::optional<std::pair<size_t, size_t>> cycle;  // [first, last) stage range

  for (long long step = 1; step <= kMaxSteps; ++step) {
    const long long k = step - 1;  // stage index = digit position - 1
    const long long pre = static_cast<long long>(data.r_pre.size());
    const long long phase = k < pre ? -1 : (k - pre) % static_cast<long long>(data.r_period.size());
    if (phase >= 0) {
      DigitState state{x, phase};
      const auto it = seen.find(state);
      if (it != seen.end()) {
        cycle = {it->second, stages.size()};
        break;
      }
      seen.emplace(std::move(state), stages.size());
    }

    const long long p = r_at(k) + 1;
    const long long budget = p - 1;  // q_k
    Rational xsum = 0;
    for (const auto& xb : x) xsum += xb;

    std::vector<long long> digit(letters.size());
    long long total = 0;
    for (size_t i = 0; i < letters.size(); ++i) {
      const Rational t = x[i] * p;
      const BigInt fl = numerator(t) / denominator(t);
      digit[i] = static_cast<long long>(fl);
      total += digit[i];
    }
    // Borrow downward when the greedy digits overflow the stage budget.
    while (total > budget) {
      size_t pick = 0;
      for (size_t i = 1; i < letters.size(); ++i)
        if (digit[i] > digit[pick]) pick = i;
      if (digit[pick] == 0)
        throw RealizeInfeasible("stage budget overflow cannot be repaired at position " +
                                std::to_string(step));
      --digit[pick];
      --total;
    }
    // Joint representability of what remains: sum of remainders <= 1.
    Rational rem_sum = xsum * p - total;
    if (rem_sum > 1)
      throw RealizeInfeasible(
          "no admissible joint digit sequence: remainder mass " + to_string(rem_sum) +
          " exceeds the future stage capacity at position " + std::to_string(step));

    SpacerStage st;
    st.spacers.insert(st.spacers.end(), static_cast<size_t>(budget - total), a_prime);
    for (size_t i = 0; i < letters.size(); ++i)
      st.spacers.insert(st.spacers.end(), static_cast<size_t>(digit[i]), spacer_of[letters[i]]);
    std::sort(st.spacers.begin(), st.spacers.end());
    stages.push_back(std::move(st));

    for (size_t i = 0; i < letters.size(); ++i) x[i] = x[i] * p - digit[i];
  }
  if (!cycle)
    throw RealizeInfeasible("digit stream found no cycle within " + std::to_string(kMaxSteps) +
                            " positions (remainder state space too large)");

  // --- liveness on the cycle: every letter and a' must recur forever.
  const auto [c_begin, c_end] = *cycle;
  std::set<Spacer> live;
  bool slack = false;
  for (size_t i = c_begin; i < c_end; ++i) {
    for (Spacer a : stages[i].spacers) live.insert(a);
    for (Spacer a : stages[i].spacers)
      if (a == a_prime) slack = true;
  }
  for (const auto& b : letters)
    if (!live.count(spacer_of[b]))
      throw RealizeInfeasible("expansion of z(" + b +
                              ") terminates: the letter would leave the stable alphabet "
                              "(no admissible non-terminating digit stream)");
  if (!slack)
    throw RealizeInfeasible(
        "digit stream saturates every stage: the minimum letter a' would leave the stable "
        "alphabet");

  std::vector<SpacerStage> preperiod(stages.begin(), stages.begin() + static_cast<long long>(c_begin));
  std::vector<SpacerStage> period(stages.begin() + static_cast<long long>(c_begin),
                                  stages.begin() + static_cast<long long>(c_end));
  RealizeResult result{
      ParameterSchedule(std::move(preperiod), PeriodicTail{std::move(period)}),
      a_prime,
      spacer_of,
      {}};
  result.notes.push_back("digit cycle of length " + std::to_string(c_end - c_begin) +
                         " after " + std::to_string(c_begin) + " preperiodic stages");

  const AlphabetTower tower = alphabets(result.schedule);
  if (tower.n0 != 1)
    throw RealizeInfeasible("realized schedule failed to stabilize at n0 = 1");
  return result;
}

}  // namespace ferenczi
