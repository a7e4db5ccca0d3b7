#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace f2sand {

/// Dense matrix of arbitrary-precision integers, row-major.
class IntegerMatrix {
 public:
  /// Zero matrix. Both dimensions must be positive.
  IntegerMatrix(std::size_t rows, std::size_t cols);

  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static IntegerMatrix from_rows(const std::vector<std::vector<mpz_class>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  mpz_class& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const mpz_class& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<mpz_class> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const mpz_class> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  IntegerMatrix operator*(const IntegerMatrix& rhs) const;
  std::vector<mpz_class> operator*(std::span<const mpz_class> v) const;
  bool operator==(const IntegerMatrix& other) const;

  bool is_symmetric() const;
  IntegerMatrix transpose() const;

  std::vector<std::vector<std::string>> to_strings() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<mpz_class> data_;
};

}  // namespace f2sand
