#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "gsp4/exact/rational_fn.hpp"

namespace gsp4::exact {

/// Dense matrix over RationalFn, stored row-major.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  ExactMatrix(std::initializer_list<std::initializer_list<RationalFn>> rows);

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix diagonal(const std::vector<RationalFn>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const RationalFn& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  RationalFn& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  ExactMatrix transpose() const;
  /// Gaussian elimination over the rational function field.
  RationalFn determinant() const;
  /// Throws DomainError(SingularInput) for a zero determinant.
  ExactMatrix inverse() const;
  ExactMatrix scaled(const RationalFn& c) const;
  bool is_zero() const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  ExactMatrix operator-() const { return scaled(RationalFn(-1)); }
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

  /// Row-major canonical strings of the entries.
  std::vector<std::vector<std::string>> to_strings() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<RationalFn> data_;
};

ExactMatrix substitute(const ExactMatrix& m, const Bindings& bindings);

}  // namespace gsp4::exact
