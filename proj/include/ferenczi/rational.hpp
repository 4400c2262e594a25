#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace ferenczi {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Spacer values and alphabet symbols. The alphabet of a Ferenczi subshift
/// consists of the spacer integers themselves, so one integer type serves
/// both roles.
using Spacer = long long;

struct FerencziError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input rejected by validation; carries the offending stage when known.
struct ValidationError : FerencziError {
  explicit ValidationError(const std::string& msg, long long stage = -1)
      : FerencziError(stage >= 0 ? "stage " + std::to_string(stage) + ": " + msg : msg),
        stage_index(stage) {}
  long long stage_index;
};

/// A materialization would exceed the configured cap (FERENCZI_CAP).
struct CapExceeded : FerencziError {
  using FerencziError::FerencziError;
};

/// Requested quantity is undefined for the given arguments.
struct DomainError : FerencziError {
  using FerencziError::FerencziError;
};

/// Materialization cap in letters. Reads FERENCZI_CAP from the environment,
/// defaulting to 10^7.
BigInt materialization_cap();

inline void check_cap(const BigInt& n, const char* what) {
  if (n > materialization_cap())
    throw CapExceeded(std::string(what) + ": size " + n.str() + " exceeds cap " +
                      materialization_cap().str());
}

std::string to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

/// Closed rational interval [lower, upper]. Exact values are degenerate
/// intervals. Used to bracket truncated series for growth-tail schedules.
struct RationalInterval {
  Rational lower;
  Rational upper;

  RationalInterval() = default;
  explicit RationalInterval(Rational exact) : lower(exact), upper(std::move(exact)) {}
  RationalInterval(Rational lo, Rational hi) : lower(std::move(lo)), upper(std::move(hi)) {
    if (lower > upper) throw DomainError("interval bounds out of order");
  }

  bool exact() const { return lower == upper; }
  Rational width() const { return upper - lower; }
  bool contains(const Rational& x) const { return lower <= x && x <= upper; }

  RationalInterval operator+(const RationalInterval& o) const {
    return {lower + o.lower, upper + o.upper};
  }
  RationalInterval operator-(const RationalInterval& o) const {
    return {lower - o.upper, upper - o.lower};
  }
  /// Scale by a nonnegative rational.
  RationalInterval scaled(const Rational& c) const {
    if (c < 0) throw DomainError("scaled: negative factor");
    return {lower * c, upper * c};
  }
  /// Divide by an interval of positive rationals.
  RationalInterval divided_by(const RationalInterval& o) const {
    if (o.lower <= 0) throw DomainError("divided_by: divisor not positive");
    return {lower / o.upper, upper / o.lower};
  }
};

}  // namespace ferenczi
