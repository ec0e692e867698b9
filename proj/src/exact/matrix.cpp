#include "gsp4/exact/matrix.hpp"

#include "gsp4/errors.hpp"

namespace gsp4::exact {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) throw DomainError(Errc::DimensionMismatch, "matrix dimensions must be positive");
}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<RationalFn>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  if (rows_ == 0 || cols_ == 0) throw DomainError(Errc::DimensionMismatch, "matrix dimensions must be positive");
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DomainError(Errc::DimensionMismatch, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = RationalFn(1);
  return m;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<RationalFn>& entries) {
  ExactMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

namespace {

void require_square(const ExactMatrix& m, const char* what) {
  if (!m.is_square()) throw DomainError(Errc::DimensionMismatch, std::string(what) + " of a non-square matrix");
}

// Pivot choice prefers constants, then the entry with the fewest terms, to
// keep intermediate expressions small.
std::size_t pick_pivot(const ExactMatrix& a, std::size_t col, std::size_t from) {
  std::size_t best = a.rows();
  std::size_t best_cost = 0;
  for (std::size_t r = from; r < a.rows(); ++r) {
    const auto& e = a(r, col);
    if (e.is_zero()) continue;
    std::size_t cost = e.numerator().size() + e.denominator().size();
    if (best == a.rows() || cost < best_cost) {
      best = r;
      best_cost = cost;
    }
  }
  return best;
}

}  // namespace

RationalFn ExactMatrix::determinant() const {
  require_square(*this, "determinant");
  const std::size_t n = rows_;
  if (n == 1) return data_[0];
  if (n == 2) return (*this)(0, 0) * (*this)(1, 1) - (*this)(0, 1) * (*this)(1, 0);
  ExactMatrix a = *this;
  RationalFn det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = pick_pivot(a, c, c);
    if (p == n) return RationalFn();
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    RationalFn inv = a(c, c).inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c).is_zero()) continue;
      RationalFn f = a(r, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return det;
}

ExactMatrix ExactMatrix::inverse() const {
  require_square(*this, "inverse");
  const std::size_t n = rows_;
  ExactMatrix a = *this;
  ExactMatrix inv = identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = pick_pivot(a, c, c);
    if (p == n) throw DomainError(Errc::SingularInput, "matrix is singular");
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    }
    RationalFn piv = a(c, c).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) *= piv;
      inv(c, j) *= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c).is_zero()) continue;
      RationalFn f = a(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

ExactMatrix ExactMatrix::scaled(const RationalFn& c) const {
  ExactMatrix m = *this;
  for (auto& e : m.data_) e *= c;
  return m;
}

bool ExactMatrix::is_zero() const {
  for (const auto& e : data_)
    if (!e.is_zero()) return false;
  return true;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_)
    throw DomainError(Errc::DimensionMismatch, "cannot multiply " + std::to_string(a.rows_) + "x" +
                                                   std::to_string(a.cols_) + " by " + std::to_string(b.rows_) +
                                                   "x" + std::to_string(b.cols_));
  ExactMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) m(i, j) += aik * b(k, j);
    }
  return m;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError(Errc::DimensionMismatch, "matrix sum shape");
  ExactMatrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
  return m;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError(Errc::DimensionMismatch, "matrix difference shape");
  ExactMatrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
  return m;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.data_.size(); ++i)
    if (!(a.data_[i] == b.data_[i])) return false;
  return true;
}

std::vector<std::vector<std::string>> ExactMatrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i].push_back((*this)(i, j).to_string());
  return out;
}

ExactMatrix substitute(const ExactMatrix& m, const Bindings& bindings) {
  ExactMatrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = substitute(m(i, j), bindings);
  return out;
}

}  // namespace gsp4::exact
