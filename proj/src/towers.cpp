#include "ferenczi/towers.hpp"

namespace ferenczi {

BigInt q_product(const ParameterSchedule& s, long long m, long long n) {
  if (m >= n) throw DomainError("q_product requires m < n");
  if (m < 0) throw DomainError("q_product requires m >= 0");
  BigInt q = 1;
  for (long long j = m; j < n; ++j) q *= s.cut(j) + 1;
  return q;
}

RationalVector heights(const ParameterSchedule& s, long long n) {
  if (n < 0) throw DomainError("heights requires n >= 0");
  if (n == 0) {
    RationalVector h(std::vector<Spacer>{0, 1});
    h.at(0) = 1;
    h.at(1) = 1;
    return h;
  }
  const GeneratingWords w(s);
  const BigInt base = w.length(n - 1);
  RationalVector h(alphabets(s).level(n));
  for (Spacer a : h.symbols()) h.at(a) = Rational(BigInt(a) + base);
  return h;
}

static void require_stable(const ParameterSchedule& s, long long m, const char* op) {
  const auto tower = alphabets(s);
  if (m < tower.n0)
    throw DomainError(std::string(op) + ": level " + std::to_string(m) +
                      " is below the alphabet stabilization level n0 = " + std::to_string(tower.n0) +
                      "; use the direct product instead");
}

RationalVector f_range(const ParameterSchedule& s, long long m, long long n) {
  if (m >= n) throw DomainError("f_range requires m < n");
  require_stable(s, m, "f_range");
  const auto stable = alphabets(s).stable;
  RationalVector f(stable);
  BigInt q = 1;  // Q_{k, n-1}, built downward from k = n-1
  for (long long k = n - 1; k >= m; --k) {
    for (const auto& [v, cnt] : s.stage_counts(k - 1)) f.at(v) += Rational(cnt * q);
    if (k > m) q *= s.cut(k - 1) + 1;
  }
  return f;
}

RationalMatrix product_closed_form(const ParameterSchedule& s, long long m, long long n) {
  if (m >= n) throw DomainError("product_closed_form requires m < n");
  require_stable(s, m, "product_closed_form");
  const auto stable = alphabets(s).stable;
  return RationalMatrix::identity(stable) +
         RationalMatrix::rank_one(f_range(s, m, n), stable);
}

RationalMatrix inverse_closed_form(const ParameterSchedule& s, long long m, long long n) {
  if (m >= n) throw DomainError("inverse_closed_form requires m < n");
  require_stable(s, m, "inverse_closed_form");
  const auto stable = alphabets(s).stable;
  const RationalVector f = f_range(s, m, n);
  const Rational scale = Rational(-1) / Rational(q_product(s, m - 1, n - 1));
  return RationalMatrix::identity(stable) +
         RationalMatrix::rank_one(f.scaled(scale), stable);
}

RationalMatrix product_direct(const ParameterSchedule& s, long long m, long long n) {
  if (m > n) throw DomainError("product_direct requires m <= n");
  DirectiveSequence seq(s, Variant::Proper);
  RationalMatrix acc = RationalMatrix::identity(seq.alphabet(m));
  for (long long k = m; k < n; ++k) acc = acc * composition_matrix(seq.level(k));
  return acc;
}

}  // namespace ferenczi
