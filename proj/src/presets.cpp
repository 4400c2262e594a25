#include "ferenczi/presets.hpp"

#include <algorithm>

namespace ferenczi {

namespace {

/// Shared base for the preset stage rules: tail-local index shifting.
class OffsetRule : public NamedStageRule {
 public:
  explicit OffsetRule(long long offset) : offset_(offset) {}

 protected:
  long long offset_ = 0;
};

/// Stage s: q_s = 2s+2, letter b once at slot min(s+2, q_s-1), letter a
/// elsewhere. Gives M_{tau_n} = [[2n, 2n-1], [1, 2]] on {a, b} with a > b.
class DwmuOneRule : public OffsetRule {
 public:
  DwmuOneRule(Spacer a, Spacer b, long long offset) : OffsetRule(offset), a_(a), b_(b) {}

  std::string id() const override { return "dwmu-one"; }
  std::string params_json() const override {
    return "{\"a\":" + std::to_string(a_) + ",\"b\":" + std::to_string(b_) +
           ",\"offset\":" + std::to_string(offset_) + "}";
  }
  BigInt cut(long long k) const override { return 2 * (k + offset_) + 2; }
  std::vector<Spacer> stage(long long k) const override {
    const long long s = k + offset_;
    const long long q = 2 * s + 2;
    std::vector<Spacer> st(static_cast<size_t>(q), a_);
    st[static_cast<size_t>(std::min(s + 2, q - 1))] = b_;
    return st;
  }
  std::map<Spacer, BigInt> counts(long long k) const override {
    const long long s = k + offset_;
    return {{a_, BigInt(2 * s + 1)}, {b_, BigInt(1)}};
  }
  std::set<Spacer> values() const override { return {a_, b_}; }
  std::set<Spacer> eventual_values() const override { return {a_, b_}; }
  std::vector<CountClass> count_classes() const override {
    CountClass ca{a_, false, BigInt(0), Rational(1, 2), BigInt(2)};
    CountClass cb{b_, true, BigInt(1), Rational(0), BigInt(0)};
    return {ca, cb};
  }
  bool cut_unbounded() const override { return true; }
  std::shared_ptr<const NamedStageRule> shifted(long long t) const override {
    return std::make_shared<DwmuOneRule>(a_, b_, offset_ + t);
  }

 private:
  Spacer a_, b_;
};

/// Stage s: [b] a^{s+1} b^{2s+1}, so M_{tau_n} = [[n+1, n], [2n, 2n+1]]
/// on {a, b}: exact finite rank without linear recurrence.
class ExactNotLrRule : public OffsetRule {
 public:
  ExactNotLrRule(Spacer a, Spacer b, long long offset) : OffsetRule(offset), a_(a), b_(b) {}

  std::string id() const override { return "exact-not-lr"; }
  std::string params_json() const override {
    return "{\"a\":" + std::to_string(a_) + ",\"b\":" + std::to_string(b_) +
           ",\"offset\":" + std::to_string(offset_) + "}";
  }
  BigInt cut(long long k) const override { return 3 * (k + offset_) + 3; }
  std::vector<Spacer> stage(long long k) const override {
    const long long s = k + offset_;
    std::vector<Spacer> st;
    st.reserve(static_cast<size_t>(3 * s + 3));
    st.push_back(b_);
    st.insert(st.end(), static_cast<size_t>(s + 1), a_);
    st.insert(st.end(), static_cast<size_t>(2 * s + 1), b_);
    return st;
  }
  std::map<Spacer, BigInt> counts(long long k) const override {
    const long long s = k + offset_;
    return {{a_, BigInt(s + 1)}, {b_, BigInt(2 * s + 2)}};
  }
  std::set<Spacer> values() const override { return {a_, b_}; }
  std::set<Spacer> eventual_values() const override { return {a_, b_}; }
  std::vector<CountClass> count_classes() const override {
    CountClass ca{a_, false, BigInt(0), Rational(1, 3), BigInt(3)};
    CountClass cb{b_, false, BigInt(0), Rational(2, 3), BigInt(3)};
    return {ca, cb};
  }
  bool cut_unbounded() const override { return true; }
  std::shared_ptr<const NamedStageRule> shifted(long long t) const override {
    return std::make_shared<ExactNotLrRule>(a_, b_, offset_ + t);
  }

 private:
  Spacer a_, b_;
};

/// Stage s (morphism level n = s+1): [v] U^{p g(n)} W^p v^{p-1} with
/// g(n) = (n+1)^2, realizing prescribed d, d' and the measurable eigenvalue
/// exp(2 pi i / p) on a topologically weakly-mixing subshift.
class MeasurableRealizationRule : public OffsetRule {
 public:
  MeasurableRealizationRule(long long p, std::vector<Spacer> u_letters,
                            std::vector<Spacer> w_letters, Spacer v, long long offset)
      : OffsetRule(offset), p_(p), u_(std::move(u_letters)), w_(std::move(w_letters)), v_(v) {}

  std::string id() const override { return "measurable-realization"; }
  std::string params_json() const override {
    auto list = [](const std::vector<Spacer>& xs) {
      std::string s = "[";
      for (size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
      return s + "]";
    };
    return "{\"p\":" + std::to_string(p_) + ",\"u\":" + list(u_) + ",\"w\":" + list(w_) +
           ",\"v\":" + std::to_string(v_) + ",\"offset\":" + std::to_string(offset_) + "}";
  }
  BigInt g(long long k) const {
    const BigInt n = k + offset_ + 2;  // g(n) with n = s + 1, evaluated as (n+1)^2
    return n * n;
  }
  BigInt cut(long long k) const override {
    return BigInt(p_) * (g(k) * static_cast<long long>(u_.size()) +
                         static_cast<long long>(w_.size())) +
           BigInt(p_);
  }
  std::vector<Spacer> stage(long long k) const override {
    check_cap(cut(k), "stage materialization");
    const long long reps = static_cast<long long>(p_ * g(k));
    std::vector<Spacer> st;
    st.push_back(v_);
    for (long long r = 0; r < reps; ++r) st.insert(st.end(), u_.begin(), u_.end());
    for (long long r = 0; r < p_; ++r) st.insert(st.end(), w_.begin(), w_.end());
    st.insert(st.end(), static_cast<size_t>(p_ - 1), v_);
    return st;
  }
  std::map<Spacer, BigInt> counts(long long k) const override {
    std::map<Spacer, BigInt> c;
    for (Spacer a : u_) c[a] += BigInt(p_) * g(k);
    for (Spacer a : w_) c[a] += p_;
    c[v_] += p_;
    return c;
  }
  std::set<Spacer> values() const override {
    std::set<Spacer> vals(u_.begin(), u_.end());
    vals.insert(w_.begin(), w_.end());
    vals.insert(v_);
    return vals;
  }
  std::set<Spacer> eventual_values() const override { return values(); }
  std::vector<CountClass> count_classes() const override {
    std::vector<CountClass> out;
    const long long dp = static_cast<long long>(u_.size());
    for (Spacer a : u_)
      out.push_back(CountClass{a, false, BigInt(0), Rational(1, 2 * dp), cut(3)});
    for (Spacer a : w_) out.push_back(CountClass{a, true, BigInt(p_), Rational(0), BigInt(0)});
    out.push_back(CountClass{v_, true, BigInt(p_), Rational(0), BigInt(0)});
    return out;
  }
  bool cut_unbounded() const override { return true; }
  std::shared_ptr<const NamedStageRule> shifted(long long t) const override {
    return std::make_shared<MeasurableRealizationRule>(p_, u_, w_, v_, offset_ + t);
  }

 private:
  long long p_;
  std::vector<Spacer> u_, w_;
  Spacer v_;
};

ParameterSchedule named_growth(std::shared_ptr<const NamedStageRule> rule) {
  GrowthTail tail;
  tail.named = std::move(rule);
  return ParameterSchedule({}, Tail{std::move(tail)});
}

}  // namespace

ParameterSchedule chacon_schedule() {
  return ParameterSchedule({}, PeriodicTail{{SpacerStage{{0, 1}}}});
}

ParameterSchedule four_letter_schedule(Spacer a, Spacer b, Spacer c, Spacer d) {
  if (!(0 < a && a < b && b < c && c < d))
    throw ValidationError("four-letter preset needs 0 < a < b < c < d");
  return ParameterSchedule({}, PeriodicTail{{SpacerStage{{a, b}}, SpacerStage{{c, d}}}});
}

ParameterSchedule non_exact_rank_schedule() {
  GrowthTail tail;
  tail.cut = CutExpr{CutExpr::Kind::Affine, 2, 1};
  tail.spacers = PatternSpacers{{1}, {0}};
  return ParameterSchedule({}, Tail{std::move(tail)});
}

ParameterSchedule exact_not_lr_schedule() {
  return named_growth(std::make_shared<ExactNotLrRule>(0, 1, 0));
}

ParameterSchedule dwmu_one_schedule(Spacer a, Spacer b) {
  if (!(b >= 0 && a > b)) throw ValidationError("dwmu-one preset needs a > b >= 0");
  return named_growth(std::make_shared<DwmuOneRule>(a, b, 0));
}

ParameterSchedule measurable_realization_schedule(long long p, long long d, long long d_prime) {
  if (p < 2) throw ValidationError("p must be a prime >= 2");
  for (long long f = 2; f * f <= p; ++f)
    if (p % f == 0) throw ValidationError("p must be prime");
  if (!(1 <= d_prime && d_prime < d)) throw ValidationError("need 1 <= d' < d");

  // Letters: a_i = p i - 1 for i <= d' (so p | a_i + 1); a_d = p d' (so
  // a_d - a_{d'} = 1); intermediate letters avoid both collisions and
  // p | a_i + 1.
  std::vector<Spacer> u_letters;
  for (long long i = 1; i <= d_prime; ++i) u_letters.push_back(p * i - 1);
  const Spacer a_d = p * d_prime;
  std::vector<Spacer> w_letters;
  Spacer next = a_d + 1;
  while (static_cast<long long>(w_letters.size()) < d - d_prime - 1) {
    if ((next + 1) % p != 0) w_letters.push_back(next);
    ++next;
  }
  return named_growth(
      std::make_shared<MeasurableRealizationRule>(p, u_letters, w_letters, a_d, 0));
}

std::shared_ptr<const NamedStageRule> make_named_rule(
    const std::string& id, const std::map<std::string, long long>& scalars,
    const std::map<std::string, std::vector<Spacer>>& lists) {
  auto scalar = [&](const std::string& key, long long fallback) {
    const auto it = scalars.find(key);
    return it == scalars.end() ? fallback : it->second;
  };
  const long long offset = scalar("offset", 0);
  if (id == "dwmu-one")
    return std::make_shared<DwmuOneRule>(scalar("a", 2), scalar("b", 1), offset);
  if (id == "exact-not-lr")
    return std::make_shared<ExactNotLrRule>(scalar("a", 0), scalar("b", 1), offset);
  if (id == "measurable-realization") {
    const auto u = lists.find("u"), w = lists.find("w");
    if (u == lists.end() || w == lists.end())
      throw ValidationError("measurable-realization rule needs letter lists u and w");
    return std::make_shared<MeasurableRealizationRule>(scalar("p", 3), u->second, w->second,
                                                       scalar("v", 3), offset);
  }
  throw DomainError("unknown named stage rule: " + id);
}

std::vector<std::string> preset_names() {
  return {"chacon",   "four-letter", "non-exact-rank",
          "exact-not-lr", "dwmu-one", "measurable-realization"};
}

Preset preset(const std::string& name, const std::map<std::string, long long>& params) {
  auto get = [&](const std::string& key, long long fallback) {
    const auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  };
  if (name == "chacon")
    return Preset{name, "cutting 2 with spacers (0,1) at every stage", chacon_schedule(), {}};
  if (name == "four-letter")
    return Preset{name,
                  "alternating stages (a,b) and (c,d); topological rank 4",
                  four_letter_schedule(get("a", 1), get("b", 2), get("c", 3), get("d", 4)),
                  {}};
  if (name == "non-exact-rank")
    return Preset{name, "growing cuts with one isolated spacer value per stage",
                  non_exact_rank_schedule(), {}};
  if (name == "exact-not-lr")
    return Preset{name, "exact finite rank without linear recurrence", exact_not_lr_schedule(), {}};
  if (name == "dwmu-one")
    return Preset{name, "single letter of positive tower mass (d_{W_mu} = 1)",
                  dwmu_one_schedule(get("a", 2), get("b", 1)), {}};
  if (name == "measurable-realization") {
    const long long p = get("p", 3);
    return Preset{
        name,
        "weakly-mixing subshift with the prescribed measurable eigenvalue exp(2 pi i/p)",
        measurable_realization_schedule(p, get("d", 3), get("dp", 1)),
        KnownMeasurableEigenvalue{
            p, "exp(2 pi i/" + std::to_string(p) +
                   ") is a measurable eigenvalue of this construction (not continuous; the "
                   "subshift is topologically weakly mixing)"}};
  }
  throw DomainError("unknown preset: " + name);
}

}  // namespace ferenczi
