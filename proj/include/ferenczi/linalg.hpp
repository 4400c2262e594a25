#pragma once

#include "ferenczi/rational.hpp"

#include <algorithm>
#include <vector>

namespace ferenczi {

/// Vector of exact rationals indexed by alphabet symbols, kept sorted.
/// Positional access stays private to the implementation; the public surface
/// is symbol-keyed to rule out letter-order bugs.
class RationalVector {
 public:
  RationalVector() = default;
  explicit RationalVector(std::vector<Spacer> symbols);

  const std::vector<Spacer>& symbols() const { return syms_; }
  size_t size() const { return syms_.size(); }

  const Rational& at(Spacer s) const;
  Rational& at(Spacer s);
  bool has_symbol(Spacer s) const;

  /// Sum of all entries, |v| in vector notation.
  Rational total() const;
  Rational dot(const RationalVector& o) const;

  RationalVector operator+(const RationalVector& o) const;
  RationalVector scaled(const Rational& c) const;

  bool operator==(const RationalVector& o) const = default;

 private:
  friend class RationalMatrix;
  size_t index_of(Spacer s) const;
  std::vector<Spacer> syms_;
  std::vector<Rational> v_;
};

/// Matrix of exact rationals with symbol-labelled rows and columns.
/// Row symbols index the codomain alphabet, column symbols the domain,
/// matching the composition-matrix convention M(b, a) = |tau(a)|_b.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::vector<Spacer> row_syms, std::vector<Spacer> col_syms);

  static RationalMatrix identity(const std::vector<Spacer>& syms);
  /// I_{rows,cols}(a, b) = [a == b], the rectangular letter-matching matrix.
  static RationalMatrix letter_identity(const std::vector<Spacer>& row_syms,
                                        const std::vector<Spacer>& col_syms);
  /// f * u with f a column over row_syms and u the all-ones row over col_syms.
  static RationalMatrix rank_one(const RationalVector& f, const std::vector<Spacer>& col_syms);

  const std::vector<Spacer>& row_symbols() const { return rows_; }
  const std::vector<Spacer>& col_symbols() const { return cols_; }

  const Rational& at(Spacer r, Spacer c) const;
  Rational& at(Spacer r, Spacer c);

  RationalMatrix operator*(const RationalMatrix& o) const;
  RationalMatrix operator+(const RationalMatrix& o) const;

  /// Column action M * v (v indexed by column symbols).
  RationalVector apply(const RationalVector& v) const;
  /// Row action v * M (v indexed by row symbols).
  RationalVector apply_left(const RationalVector& v) const;

  bool square() const { return rows_ == cols_; }
  Rational determinant() const;
  /// Exact inverse by Gauss-Jordan elimination. Throws on singular input.
  RationalMatrix inverse() const;

  bool operator==(const RationalMatrix& o) const = default;

 private:
  size_t row_index(Spacer s) const;
  size_t col_index(Spacer s) const;
  std::vector<Spacer> rows_, cols_;
  std::vector<Rational> a_;  // row-major
};

std::vector<Spacer> sorted_symbols(std::vector<Spacer> syms);

}  // namespace ferenczi
