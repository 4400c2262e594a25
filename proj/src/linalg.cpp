#include "ferenczi/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace ferenczi {

BigInt materialization_cap() {
  if (const char* env = std::getenv("FERENCZI_CAP")) {
    try {
      BigInt cap(env);
      if (cap > 0) return cap;
    } catch (...) {
    }
  }
  return BigInt(10000000);
}

std::string to_string(const Rational& r) {
  const BigInt num = numerator(r);
  const BigInt den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational rational_from_string(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw DomainError("rational with zero denominator: " + s);
    return Rational(num, den);
  } catch (const FerencziError&) {
    throw;
  } catch (...) {
    throw DomainError("malformed rational: " + s);
  }
}

std::vector<Spacer> sorted_symbols(std::vector<Spacer> syms) {
  std::sort(syms.begin(), syms.end());
  syms.erase(std::unique(syms.begin(), syms.end()), syms.end());
  return syms;
}

RationalVector::RationalVector(std::vector<Spacer> symbols)
    : syms_(sorted_symbols(std::move(symbols))), v_(syms_.size(), Rational(0)) {}

size_t RationalVector::index_of(Spacer s) const {
  const auto it = std::lower_bound(syms_.begin(), syms_.end(), s);
  if (it == syms_.end() || *it != s)
    throw DomainError("vector has no entry for symbol " + std::to_string(s));
  return static_cast<size_t>(it - syms_.begin());
}

bool RationalVector::has_symbol(Spacer s) const {
  return std::binary_search(syms_.begin(), syms_.end(), s);
}

const Rational& RationalVector::at(Spacer s) const { return v_[index_of(s)]; }
Rational& RationalVector::at(Spacer s) { return v_[index_of(s)]; }

Rational RationalVector::total() const {
  Rational t = 0;
  for (const auto& x : v_) t += x;
  return t;
}

Rational RationalVector::dot(const RationalVector& o) const {
  if (syms_ != o.syms_) throw DomainError("dot: symbol sets differ");
  Rational t = 0;
  for (size_t i = 0; i < v_.size(); ++i) t += v_[i] * o.v_[i];
  return t;
}

RationalVector RationalVector::operator+(const RationalVector& o) const {
  if (syms_ != o.syms_) throw DomainError("operator+: symbol sets differ");
  RationalVector r = *this;
  for (size_t i = 0; i < v_.size(); ++i) r.v_[i] += o.v_[i];
  return r;
}

RationalVector RationalVector::scaled(const Rational& c) const {
  RationalVector r = *this;
  for (auto& x : r.v_) x *= c;
  return r;
}

RationalMatrix::RationalMatrix(std::vector<Spacer> row_syms, std::vector<Spacer> col_syms)
    : rows_(sorted_symbols(std::move(row_syms))),
      cols_(sorted_symbols(std::move(col_syms))),
      a_(rows_.size() * cols_.size(), Rational(0)) {}

RationalMatrix RationalMatrix::identity(const std::vector<Spacer>& syms) {
  RationalMatrix m(syms, syms);
  for (Spacer s : m.rows_) m.at(s, s) = 1;
  return m;
}

RationalMatrix RationalMatrix::letter_identity(const std::vector<Spacer>& row_syms,
                                               const std::vector<Spacer>& col_syms) {
  RationalMatrix m(row_syms, col_syms);
  for (Spacer r : m.rows_)
    for (Spacer c : m.cols_)
      if (r == c) m.at(r, c) = 1;
  return m;
}

RationalMatrix RationalMatrix::rank_one(const RationalVector& f,
                                        const std::vector<Spacer>& col_syms) {
  RationalMatrix m(f.symbols(), col_syms);
  for (Spacer r : m.rows_)
    for (Spacer c : m.cols_) m.at(r, c) = f.at(r);
  return m;
}

size_t RationalMatrix::row_index(Spacer s) const {
  const auto it = std::lower_bound(rows_.begin(), rows_.end(), s);
  if (it == rows_.end() || *it != s)
    throw DomainError("matrix has no row for symbol " + std::to_string(s));
  return static_cast<size_t>(it - rows_.begin());
}

size_t RationalMatrix::col_index(Spacer s) const {
  const auto it = std::lower_bound(cols_.begin(), cols_.end(), s);
  if (it == cols_.end() || *it != s)
    throw DomainError("matrix has no column for symbol " + std::to_string(s));
  return static_cast<size_t>(it - cols_.begin());
}

const Rational& RationalMatrix::at(Spacer r, Spacer c) const {
  return a_[row_index(r) * cols_.size() + col_index(c)];
}

Rational& RationalMatrix::at(Spacer r, Spacer c) {
  return a_[row_index(r) * cols_.size() + col_index(c)];
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (cols_ != o.rows_) throw DomainError("matrix product: inner symbol sets differ");
  RationalMatrix m(rows_, o.cols_);
  const size_t n = rows_.size(), k = cols_.size(), p = o.cols_.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < k; ++j) {
      const Rational& x = a_[i * k + j];
      if (x == 0) continue;
      for (size_t l = 0; l < p; ++l) m.a_[i * p + l] += x * o.a_[j * p + l];
    }
  return m;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix sum: symbol sets differ");
  RationalMatrix m = *this;
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
  return m;
}

RationalVector RationalMatrix::apply(const RationalVector& v) const {
  if (cols_ != v.symbols()) throw DomainError("apply: symbol sets differ");
  RationalVector r(rows_);
  for (Spacer row : rows_)
    for (Spacer col : cols_) r.at(row) += at(row, col) * v.at(col);
  return r;
}

RationalVector RationalMatrix::apply_left(const RationalVector& v) const {
  if (rows_ != v.symbols()) throw DomainError("apply_left: symbol sets differ");
  RationalVector r(cols_);
  for (Spacer col : cols_)
    for (Spacer row : rows_) r.at(col) += v.at(row) * at(row, col);
  return r;
}

Rational RationalMatrix::determinant() const {
  if (!square()) throw DomainError("determinant: nonsquare matrix");
  const size_t n = rows_.size();
  std::vector<Rational> m = a_;
  Rational det = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && m[pivot * n + col] == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      for (size_t j = 0; j < n; ++j) std::swap(m[pivot * n + j], m[col * n + j]);
      det = -det;
    }
    det *= m[col * n + col];
    const Rational inv = Rational(1) / m[col * n + col];
    for (size_t i = col + 1; i < n; ++i) {
      const Rational factor = m[i * n + col] * inv;
      if (factor == 0) continue;
      for (size_t j = col; j < n; ++j) m[i * n + j] -= factor * m[col * n + j];
    }
  }
  return det;
}

RationalMatrix RationalMatrix::inverse() const {
  if (!square()) throw DomainError("inverse: nonsquare matrix");
  const size_t n = rows_.size();
  std::vector<Rational> m = a_;
  RationalMatrix result = identity(rows_);
  std::vector<Rational>& inv = result.a_;
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && m[pivot * n + col] == 0) ++pivot;
    if (pivot == n) throw DomainError("inverse: singular matrix");
    if (pivot != col)
      for (size_t j = 0; j < n; ++j) {
        std::swap(m[pivot * n + j], m[col * n + j]);
        std::swap(inv[pivot * n + j], inv[col * n + j]);
      }
    const Rational scale = Rational(1) / m[col * n + col];
    for (size_t j = 0; j < n; ++j) {
      m[col * n + j] *= scale;
      inv[col * n + j] *= scale;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == col || m[i * n + col] == 0) continue;
      const Rational factor = m[i * n + col];
      for (size_t j = 0; j < n; ++j) {
        m[i * n + j] -= factor * m[col * n + j];
        inv[i * n + j] -= factor * inv[col * n + j];
      }
    }
  }
  return result;
}

}  // namespace ferenczi
