#include "possmc/matrix.hpp"

#include <algorithm>
#include <string>

#include "possmc/error.hpp"

namespace possmc {

namespace {

std::string dims(std::size_t r, std::size_t c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

void require_same_shape(const FuzzyMatrix& a, const FuzzyMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::DimensionMismatch, std::string(op) + ": " +
                                                  dims(a.rows(), a.cols()) + " vs " +
                                                  dims(b.rows(), b.cols()));
  }
}

void require_same_size(const FuzzyVector& a, const FuzzyVector& b, const char* op) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::DimensionMismatch, std::string(op) + ": length " +
                                                  std::to_string(a.size()) + " vs " +
                                                  std::to_string(b.size()));
  }
}

void require_square(const FuzzyMatrix& p, const char* op) {
  if (!p.square()) {
    throw Error(ErrorKind::NotSquare,
                std::string(op) + ": matrix is " + dims(p.rows(), p.cols()));
  }
}

}  // namespace

FuzzyVector FuzzyVector::indicator(std::size_t size, std::size_t index) {
  FuzzyVector v(size);
  v[index] = Poss::one();
  return v;
}

FuzzyMatrix::FuzzyMatrix(std::initializer_list<std::initializer_list<Poss>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw Error(ErrorKind::DimensionMismatch, "ragged matrix initializer");
    }
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

FuzzyMatrix FuzzyMatrix::identity(std::size_t n) {
  FuzzyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Poss::one();
  return m;
}

FuzzyVector FuzzyMatrix::diagonal_entries() const {
  FuzzyVector d(std::min(rows_, cols_));
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = (*this)(i, i);
  return d;
}

FuzzyMatrix compose(const FuzzyMatrix& a, const FuzzyMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "compose: " + dims(a.rows(), a.cols()) +
                                                  " with " + dims(b.rows(), b.cols()));
  }
  FuzzyMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Poss aij = a(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t k = 0; k < b.cols(); ++k) {
        const Poss m = std::min(aij, b(j, k));
        if (c(i, k) < m) c(i, k) = m;
      }
    }
  }
  return c;
}

FuzzyVector compose(const FuzzyMatrix& a, const FuzzyVector& v) {
  if (a.cols() != v.size()) {
    throw Error(ErrorKind::DimensionMismatch, "compose: " + dims(a.rows(), a.cols()) +
                                                  " with vector of length " +
                                                  std::to_string(v.size()));
  }
  FuzzyVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Poss best = Poss::zero();
    for (std::size_t j = 0; j < a.cols(); ++j) best = std::max(best, std::min(a(i, j), v[j]));
    out[i] = best;
  }
  return out;
}

FuzzyVector compose(const FuzzyVector& v, const FuzzyMatrix& a) {
  if (a.rows() != v.size()) {
    throw Error(ErrorKind::DimensionMismatch, "compose: row vector of length " +
                                                  std::to_string(v.size()) + " with " +
                                                  dims(a.rows(), a.cols()));
  }
  FuzzyVector out(a.cols());
  for (std::size_t j = 0; j < a.rows(); ++j) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      out[k] = std::max(out[k], std::min(v[j], a(j, k)));
    }
  }
  return out;
}

Poss compose(const FuzzyVector& u, const FuzzyVector& v) {
  require_same_size(u, v, "compose");
  Poss best = Poss::zero();
  for (std::size_t i = 0; i < u.size(); ++i) best = std::max(best, std::min(u[i], v[i]));
  return best;
}

FuzzyMatrix join(const FuzzyMatrix& a, const FuzzyMatrix& b) {
  require_same_shape(a, b, "join");
  FuzzyMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = std::max(a(i, j), b(i, j));
  return c;
}

FuzzyMatrix meet(const FuzzyMatrix& a, const FuzzyMatrix& b) {
  require_same_shape(a, b, "meet");
  FuzzyMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = std::min(a(i, j), b(i, j));
  return c;
}

FuzzyVector join(const FuzzyVector& a, const FuzzyVector& b) {
  require_same_size(a, b, "join");
  FuzzyVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = std::max(a[i], b[i]);
  return c;
}

FuzzyVector meet(const FuzzyVector& a, const FuzzyVector& b) {
  require_same_size(a, b, "meet");
  FuzzyVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = std::min(a[i], b[i]);
  return c;
}

FuzzyVector complement(const FuzzyVector& v) {
  FuzzyVector c(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) c[i] = complement(v[i]);
  return c;
}

bool leq(const FuzzyMatrix& a, const FuzzyMatrix& b) {
  require_same_shape(a, b, "leq");
  return std::ranges::equal(a.entries(), b.entries(), std::less_equal<>{});
}

bool leq(const FuzzyVector& a, const FuzzyVector& b) {
  require_same_size(a, b, "leq");
  return std::ranges::equal(a.entries(), b.entries(), std::less_equal<>{});
}

FuzzyMatrix power(const FuzzyMatrix& p, std::size_t k) {
  require_square(p, "power");
  FuzzyMatrix result = FuzzyMatrix::identity(p.rows());
  for (std::size_t i = 0; i < k; ++i) result = compose(result, p);
  return result;
}

FuzzyMatrix transitive_closure(const FuzzyMatrix& p) {
  require_square(p, "transitive_closure");
  FuzzyMatrix acc = p;
  FuzzyMatrix pow = p;
  for (std::size_t k = 2; k <= p.rows(); ++k) {
    pow = compose(pow, p);
    FuzzyMatrix next = join(acc, pow);
    // Once P^k adds nothing, no higher power can either.
    if (next == acc) break;
    acc = std::move(next);
  }
  return acc;
}

FuzzyMatrix reflexive_transitive_closure(const FuzzyMatrix& p) {
  require_square(p, "reflexive_transitive_closure");
  return join(FuzzyMatrix::identity(p.rows()), transitive_closure(p));
}

FuzzyMatrix diagonal(const FuzzyVector& v) {
  FuzzyMatrix d(v.size(), v.size());
  for (std::size_t i = 0; i < v.size(); ++i) d(i, i) = v[i];
  return d;
}

}  // namespace possmc
