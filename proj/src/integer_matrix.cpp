#include "f2sand/integer_matrix.hpp"

#include <stdexcept>

namespace f2sand {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("matrix dimensions must be positive");
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

IntegerMatrix IntegerMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  if (rows.size() == 0) throw std::invalid_argument("matrix needs at least one row");
  IntegerMatrix out(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != out.cols_) throw std::invalid_argument("ragged matrix rows");
    std::size_t j = 0;
    for (long v : row) out(i, j++) = v;
    ++i;
  }
  return out;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<mpz_class>>& rows) {
  if (rows.empty()) throw std::invalid_argument("matrix needs at least one row");
  IntegerMatrix out(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != out.cols_) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < out.cols_; ++j) out(i, j) = rows[i][j];
  }
  return out;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
  IntegerMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const mpz_class& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        mpz_addmul(out(i, j).get_mpz_t(), a.get_mpz_t(), rhs(k, j).get_mpz_t());
      }
    }
  }
  return out;
}

std::vector<mpz_class> IntegerMatrix::operator*(std::span<const mpz_class> v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector product: dimension mismatch");
  std::vector<mpz_class> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      mpz_addmul(out[i].get_mpz_t(), (*this)(i, j).get_mpz_t(), v[j].get_mpz_t());
    }
  }
  return out;
}

bool IntegerMatrix::operator==(const IntegerMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

bool IntegerMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

std::vector<std::vector<std::string>> IntegerMatrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i].push_back((*this)(i, j).get_str());
  }
  return out;
}

}  // namespace f2sand
