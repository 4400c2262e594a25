#include "ferenczi/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numeric>
#include <tuple>

namespace ferenczi {

namespace {

long long mod_of(const BigInt& x, long long q) {
  BigInt r = x % q;
  if (r < 0) r += q;
  return static_cast<long long>(r);
}

/// Modular state identifying the future of the stage stream mod q at index n.
struct TailPhase {
  long long phase = 0;
  long long cut_mod = 0;
  auto operator<=>(const TailPhase&) const = default;
};

struct TailStepper {
  const ParameterSchedule& s;
  long long q;
  long long pattern_modulus = 1;  // L*q for pattern growth tails

  /// Smallest stage index from which the modular state machinery is valid.
  long long modular_start() const {
    const long long pre = static_cast<long long>(s.preperiod().size());
    if (std::holds_alternative<PeriodicTail>(s.tail())) return pre;
    const auto& g = std::get<GrowthTail>(s.tail());
    if (g.named) return pre;
    // Pattern rule: wait until the cut covers the whole stage prefix so the
    // per-stage counts become a function of the cut modulo L*q.
    const long long need = static_cast<long long>(g.spacers.prefix.size());
    long long k = 0;
    while (g.cut.eval(k) < need) ++k;
    return pre + k;
  }

  TailPhase state(long long n) const {
    const long long pre = static_cast<long long>(s.preperiod().size());
    const long long k = n - pre;
    if (const auto* p = std::get_if<PeriodicTail>(&s.tail()))
      return {k % static_cast<long long>(p->period.size()), 0};
    const auto& g = std::get<GrowthTail>(s.tail());
    if (g.named) return {k % q, 0};
    return {0, mod_of(g.cut.eval(k), pattern_modulus)};
  }
};

}  // namespace

ModularOrbit word_length_orbit(const ParameterSchedule& s, long long q, long long start) {
  if (q < 1) throw DomainError("modulus must be positive");
  TailStepper stepper{s, q};
  if (const auto* g = std::get_if<GrowthTail>(&s.tail()); g && !g->named)
    stepper.pattern_modulus = static_cast<long long>(g->spacers.pattern.size()) * q;

  const long long mod_start = std::max(start, stepper.modular_start());
  GeneratingWords words(s);

  ModularOrbit orbit;
  orbit.start = start;
  long long wn = mod_of(words.length(start), q);

  // Direct values before the state machinery applies.
  long long n = start;
  std::map<std::pair<long long, TailPhase>, size_t> seen;
  while (true) {
    if (n >= mod_start) {
      const auto key = std::make_pair(wn, stepper.state(n));
      const auto it = seen.find(key);
      if (it != seen.end()) {
        orbit.cycle_begin = it->second;
        return orbit;
      }
      if (seen.size() > 2000000) throw DomainError("modulus too large for cycle analysis");
      seen.emplace(key, orbit.values.size());
    }
    orbit.values.push_back(wn);
    const long long mult = mod_of(s.cut(n) + 1, q);
    const long long add = mod_of(s.stage_sum(n), q);
    wn = (wn * mult + add) % q;
    ++n;
  }
}

namespace {

std::vector<long long> divisors(long long g) {
  std::vector<long long> out;
  for (long long d = 1; d * d <= g; ++d) {
    if (g % d == 0) {
      out.push_back(d);
      if (d != g / d) out.push_back(g / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// First stage index from which every spacer is congruent to r mod q, or
/// nullopt when no such index exists.
std::optional<long long> residue_settling_stage(const ParameterSchedule& s, long long q,
                                                long long r) {
  for (Spacer a : s.eventual_values())
    if (mod_of(BigInt(a), q) != r) return std::nullopt;
  long long settle = 0;
  const long long pre = static_cast<long long>(s.preperiod().size());
  for (long long m = 0; m < pre; ++m)
    for (Spacer a : s.preperiod()[static_cast<size_t>(m)].spacers)
      if (mod_of(BigInt(a), q) != r) settle = std::max(settle, m + 1);
  return settle;
}

}  // namespace

EigenvalueReport continuous_eigenvalues(const ParameterSchedule& s) {
  const AlphabetTower tower = alphabets(s);
  if (tower.d < 2)
    throw DomainError("continuous_eigenvalues requires d_W >= 2 (aperiodic subshift)");

  EigenvalueReport report;
  const Spacer lo = tower.stable.front();
  long long g = 0, diff_max = 0;
  for (Spacer a : tower.stable) {
    g = std::gcd(g, static_cast<long long>(a - lo));
    diff_max = std::max(diff_max, static_cast<long long>(a - lo));
  }
  report.diff_gcd = g;
  report.diff_max = diff_max;

  for (long long q : divisors(g)) {
    EigenvalueCandidate cand;
    cand.q = q;
    const long long r = mod_of(BigInt(lo), q);
    const auto settle = residue_settling_stage(s, q, r);
    if (!settle) {
      cand.note = "spacer residues mod " + std::to_string(q) + " never become constant";
    } else {
      const ModularOrbit orbit = word_length_orbit(s, q, *settle);
      const long long want = (q - r) % q;  // |w_n| = -r mod q
      for (size_t i = 0; i < orbit.values.size(); ++i) {
        if (orbit.values[i] == want) {
          cand.passes = true;
          cand.witness_level = orbit.start + static_cast<long long>(i);
          break;
        }
      }
      if (cand.passes)
        cand.note = "q divides |w_n| + a_{m,i} for all m >= n = " +
                    std::to_string(cand.witness_level);
      else
        cand.note = "|w_n| mod " + std::to_string(q) + " never reaches " + std::to_string(want) +
                    " past the settling stage";
    }
    if (cand.passes) report.rational_denominators.push_back(q);
    report.candidates.push_back(cand);
  }

  report.q_max = report.rational_denominators.empty() ? 1 : report.rational_denominators.back();
  report.weakly_mixing = report.q_max == 1;
  return report;
}

EquicontinuousFactor max_equicontinuous_factor(const ParameterSchedule& s) {
  const EigenvalueReport r = continuous_eigenvalues(s);
  EquicontinuousFactor f;
  f.q_max = r.q_max;
  f.bound = r.diff_max;
  f.description = r.q_max == 1 ? "trivial (one point)"
                               : "finite rotation Z/" + std::to_string(r.q_max) + "Z";
  return f;
}

MixingCertificate mixing_certificate(const ParameterSchedule& s, long long k_max) {
  MixingCertificate cert;
  cert.bound = s.max_spacer();
  GeneratingWords w(s);
  for (long long k = 0; k <= k_max; ++k) {
    const BigInt nk = w.length(k);
    // Enumerating L_{|w_k|} stores O(|w_k|^2) characters; bail out before
    // that outgrows the cap.
    if (nk * nk > materialization_cap()) {
      cert.samples_truncated = true;
      break;
    }
    const auto [a_n, b_n] = factor_stats(w, static_cast<long long>(nk));
    cert.samples.push_back(MixingSample{k, nk, a_n, b_n});
  }
  return cert;
}

namespace {

Rational nearest_integer_distance(const Rational& x) {
  const BigInt num = numerator(x), den = denominator(x);
  BigInt r = num % den;
  if (r < 0) r += den;
  const Rational frac(r, den);
  return std::min(frac, Rational(1) - frac);
}

}  // namespace

VeechTrace veech_test(const ParameterSchedule& s, const AlphaValue& alpha, long long max_level) {
  if (alpha.error < 0) throw DomainError("alpha error bound must be nonnegative");
  const RankReport rank = rank_report(s);
  VeechTrace trace;
  trace.alpha = alpha;
  for (const auto& e : rank.letters) {
    if (e.verdict == LetterVerdict::In)
      trace.tested_letters.push_back(e.letter);
    else if (e.verdict == LetterVerdict::Undetermined)
      trace.skipped_letters.push_back(e.letter);
  }
  if (trace.tested_letters.empty()) {
    trace.verdict = VeechVerdict::Inconclusive;
    trace.witness = "no letters with certified positive tower mass";
    return trace;
  }

  GeneratingWords words(s);
  for (long long n = 1; n <= max_level; ++n) {
    const BigInt base = words.length(n - 1);
    for (Spacer a : trace.tested_letters) {
      VeechEntry entry;
      entry.level = n;
      entry.letter = a;
      entry.value = nearest_integer_distance(alpha.approx * Rational(BigInt(a) + base));
      entry.error = alpha.error * Rational(BigInt(a) + base);
      trace.table.push_back(entry);
    }
  }

  if (alpha.error == 0) {
    const Rational& x = alpha.approx;
    if (x == 0) {
      trace.verdict = VeechVerdict::Consistent;
      trace.witness = "alpha = 0: every ||alpha h_n(a)|| vanishes";
      return trace;
    }
    const long long q = static_cast<long long>(denominator(x));
    // ||alpha h_n(a)|| -> 0 with values in (1/q)Z means h_n(a) = 0 mod q
    // eventually; decide by the modular cycle of |w_{n-1}|.
    const ModularOrbit orbit = word_length_orbit(s, q, 0);
    for (size_t i = orbit.cycle_begin; i < orbit.values.size(); ++i) {
      for (Spacer a : trace.tested_letters) {
        const long long h_mod = (orbit.values[i] + mod_of(BigInt(a), q)) % q;
        if (h_mod != 0) {
          const long long level = orbit.start + static_cast<long long>(i) + 1;
          trace.verdict = VeechVerdict::Excluded;
          trace.witness = "||alpha h_n(" + std::to_string(a) + ")|| >= 1/" + std::to_string(q) +
                          " at level " + std::to_string(level) +
                          " and at infinitely many further levels (modular cycle)";
          return trace;
        }
      }
    }
    trace.verdict = VeechVerdict::Consistent;
    const long long witness_level = orbit.start + static_cast<long long>(orbit.cycle_begin) + 1;
    trace.witness = "q | h_n(a) for all tested letters and all n >= " +
                    std::to_string(witness_level) + " (exact zeros beyond the witness level)";
    return trace;
  }

  // Certified inexact alpha: exclude through a fixed height difference.
  if (trace.tested_letters.size() >= 2) {
    for (size_t i = 0; i < trace.tested_letters.size(); ++i) {
      for (size_t j = i + 1; j < trace.tested_letters.size(); ++j) {
        const Spacer a = trace.tested_letters[j], b = trace.tested_letters[i];
        const Rational diff = Rational(a - b);
        const Rational lower = nearest_integer_distance(alpha.approx * diff) - alpha.error * diff;
        if (lower > 0) {
          trace.verdict = VeechVerdict::Excluded;
          trace.witness = "h_n(" + std::to_string(a) + ") - h_n(" + std::to_string(b) + ") = " +
                          std::to_string(a - b) + " at every level, and ||alpha (a-b)|| >= " +
                          to_string(lower) + " > 0";
          return trace;
        }
      }
    }
  }
  trace.verdict = VeechVerdict::Inconclusive;
  trace.witness = "certificate too weak to separate ||alpha (a-b)|| from 0";
  return trace;
}

SufficiencySum sufficiency_sum(const ParameterSchedule& s, long long m, long long n, Spacer a,
                               Spacer b, long long p, long long q) {
  if (q < 1) throw DomainError("lambda must be exp(2 pi i p/q) with q >= 1");
  if (m < 1 || m >= n) throw DomainError("sufficiency_sum requires 1 <= m < n");
  DirectiveSequence seq(s, Variant::Proper);
  const Morphism tau = seq.telescope(m, n);
  if (!std::binary_search(tau.domain().begin(), tau.domain().end(), b))
    throw DomainError("letter b not in the level-" + std::to_string(n) + " alphabet");
  const SymbolWord word = tau.image(b);
  check_cap(BigInt(static_cast<long long>(word.size())), "sufficiency sum word");

  GeneratingWords words(s);
  const BigInt hbase = words.length(m - 1);
  std::map<Spacer, long long> h_mod;
  for (Spacer c : seq.alphabet(m)) h_mod[c] = mod_of(BigInt(c) + hbase, q);

  SufficiencySum out;
  out.modulus = q;
  out.coefficients.assign(static_cast<size_t>(q), BigInt(0));
  long long suffix = 0;  // <l(suffix), h_m> mod q, scanned right to left
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    suffix = (suffix + h_mod[*it]) % q;
    if (*it == a) {
      const long long residue = mod_of(BigInt(suffix) * p, q);
      out.coefficients[static_cast<size_t>(residue)] += 1;
      out.occurrences += 1;
    }
  }
  if (out.occurrences == 0)
    throw DomainError("letter a never occurs in tau_{[m,n)}(b)");

  std::complex<double> sum(0.0, 0.0);
  for (long long r = 0; r < q; ++r) {
    const double angle = 2.0 * M_PI * static_cast<double>(r) / static_cast<double>(q);
    sum += static_cast<double>(out.coefficients[static_cast<size_t>(r)]) *
           std::complex<double>(std::cos(angle), std::sin(angle));
  }
  const double occ = static_cast<double>(out.occurrences);
  out.magnitude = std::abs(sum);
  out.ratio = out.magnitude / occ;
  out.error_bound = 1e-14 * static_cast<double>(q);
  return out;
}

MeasurableReport measurable_eigenvalue_report(const ParameterSchedule& s,
                                              const std::optional<KnownMeasurableEigenvalue>& known) {
  MeasurableReport report;
  report.rank = rank_report(s);
  report.continuous = continuous_eigenvalues(s);
  report.known = known;

  auto veech_candidates = [&](const std::vector<long long>& qs) {
    for (long long q : qs) {
      if (q < 2) continue;
      const VeechTrace t = veech_test(s, AlphaValue{Rational(1, q), Rational(0)}, 1);
      std::string note = t.witness;
      report.rational_candidates.push_back(RationalCandidateVerdict{q, t.verdict, note});
    }
  };

  switch (report.rank.exact_finite_rank) {
    case RankVerdict::Exact: {
      report.scope = MeasurableReport::Scope::EqualsContinuous;
      report.notes.push_back(
          "exact finite rank: every measurable eigenvalue is continuous, so the measurable "
          "eigenvalue group equals the continuous one");
      break;
    }
    case RankVerdict::NotExact: {
      if (report.rank.d_w_mu >= 2) {
        report.scope = MeasurableReport::Scope::NoIrrational;
        report.notes.push_back(
            "d_{W_mu} >= 2: no irrational measurable eigenvalues; rational candidates tested "
            "against the necessary condition");
        long long g = 0;
        const Spacer lo = report.rank.a_mu.front();
        for (Spacer a : report.rank.a_mu) g = std::gcd(g, static_cast<long long>(a - lo));
        veech_candidates(divisors(g == 0 ? 1 : g));
      } else {
        report.scope = MeasurableReport::Scope::IrrationalUndetermined;
        report.notes.push_back(
            "d_{W_mu} = 1: rational candidates tested against the necessary condition; whether "
            "irrational measurable eigenvalues can occur is an open question");
        std::vector<long long> qs;
        for (long long q = 2; q <= 32; ++q) qs.push_back(q);
        report.notes.push_back("rational candidates scanned for q <= 32");
        veech_candidates(qs);
      }
      break;
    }
    case RankVerdict::Unknown: {
      report.scope = MeasurableReport::Scope::Unknown;
      report.notes.push_back("rank classification inconclusive; no measurable verdict");
      break;
    }
  }
  return report;
}

}  // namespace ferenczi
