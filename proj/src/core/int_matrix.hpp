#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace toric {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Dense row-major matrix of arbitrary-size integers.
///
/// Zero-row and zero-column shapes are legal; they show up naturally as the
/// relation matrix of A^0 and as the kernel basis of an injective map.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::span<const IntVector> rows, std::size_t cols);
  static IntMatrix from_columns(std::span<const IntVector> columns, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const Integer> values);

  IntMatrix transposed() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_columns(std::size_t a, std::size_t b);
  // row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  // col[dst] += factor * col[src]
  void add_column_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);
  void negate_column(std::size_t c);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, std::span<const Integer> v);

Integer dot(std::span<const Integer> a, std::span<const Integer> b);
IntVector make_vector(std::initializer_list<long> values);

std::string to_string(const IntMatrix& m);
std::string to_string(std::span<const Integer> v);

}  // namespace toric
