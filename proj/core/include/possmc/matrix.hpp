#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "possmc/poss.hpp"

namespace possmc {

/// Column vector over the max-min algebra.
class FuzzyVector {
 public:
  FuzzyVector() = default;
  explicit FuzzyVector(std::size_t size, Poss fill = Poss::zero())
      : entries_(size, fill) {}
  explicit FuzzyVector(std::vector<Poss> entries) : entries_(std::move(entries)) {}
  FuzzyVector(std::initializer_list<Poss> entries) : entries_(entries) {}

  static FuzzyVector zeros(std::size_t size) { return FuzzyVector(size); }
  static FuzzyVector ones(std::size_t size) { return FuzzyVector(size, Poss::one()); }
  /// 1 at `index`, 0 elsewhere.
  static FuzzyVector indicator(std::size_t size, std::size_t index);

  std::size_t size() const noexcept { return entries_.size(); }
  Poss operator[](std::size_t i) const { return entries_[i]; }
  Poss& operator[](std::size_t i) { return entries_[i]; }

  std::span<const Poss> entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  friend bool operator==(const FuzzyVector&, const FuzzyVector&) = default;

 private:
  std::vector<Poss> entries_;
};

/// Dense rows x cols matrix over the max-min algebra, row-major.
class FuzzyMatrix {
 public:
  FuzzyMatrix() = default;
  FuzzyMatrix(std::size_t rows, std::size_t cols, Poss fill = Poss::zero())
      : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}
  /// Row-major initializer; throws DimensionMismatch on ragged input.
  FuzzyMatrix(std::initializer_list<std::initializer_list<Poss>> rows);

  static FuzzyMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Poss operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Poss& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  std::span<const Poss> row(std::size_t r) const {
    return std::span<const Poss>(entries_).subspan(r * cols_, cols_);
  }
  std::span<const Poss> entries() const noexcept { return entries_; }

  FuzzyVector diagonal_entries() const;

  friend bool operator==(const FuzzyMatrix&, const FuzzyMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Poss> entries_;
};

/// Max-min composition: C(i,k) = max_j min(A(i,j), B(j,k)).
FuzzyMatrix compose(const FuzzyMatrix& a, const FuzzyMatrix& b);
/// Matrix times column vector.
FuzzyVector compose(const FuzzyMatrix& a, const FuzzyVector& v);
/// Row vector times matrix.
FuzzyVector compose(const FuzzyVector& v, const FuzzyMatrix& a);
/// Row vector times column vector, i.e. max_i min(u(i), v(i)).
Poss compose(const FuzzyVector& u, const FuzzyVector& v);

FuzzyMatrix join(const FuzzyMatrix& a, const FuzzyMatrix& b);
FuzzyMatrix meet(const FuzzyMatrix& a, const FuzzyMatrix& b);
FuzzyVector join(const FuzzyVector& a, const FuzzyVector& b);
FuzzyVector meet(const FuzzyVector& a, const FuzzyVector& b);
FuzzyVector complement(const FuzzyVector& v);

/// Elementwise a <= b.
bool leq(const FuzzyMatrix& a, const FuzzyMatrix& b);
bool leq(const FuzzyVector& a, const FuzzyVector& b);

/// k-th max-min power; power(p, 0) is the identity.
FuzzyMatrix power(const FuzzyMatrix& p, std::size_t k);

/// P+ = P v P^2 v ... v P^N with N = rows, stopping once the join no longer
/// grows. Throws NotSquare.
FuzzyMatrix transitive_closure(const FuzzyMatrix& p);

/// P* = identity v P+.
FuzzyMatrix reflexive_transitive_closure(const FuzzyMatrix& p);

FuzzyMatrix diagonal(const FuzzyVector& v);

}  // namespace possmc
