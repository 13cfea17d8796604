#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace glat {

using BigInt = mpz_class;

/// Column vector in Z^n.
class IntVector {
 public:
  IntVector() = default;
  explicit IntVector(std::size_t dim) : entries_(dim, 0) {}
  IntVector(std::initializer_list<long> values);
  explicit IntVector(std::vector<BigInt> entries) : entries_(std::move(entries)) {}

  static IntVector unit(std::size_t dim, std::size_t i);
  static IntVector ones(std::size_t dim);

  std::size_t dim() const { return entries_.size(); }
  BigInt& operator[](std::size_t i) { return entries_[i]; }
  const BigInt& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const BigInt> entries() const { return entries_; }

  bool is_zero() const;
  std::size_t support_size() const;
  bool is_binary() const;

  IntVector& operator+=(const IntVector& other);
  IntVector& operator-=(const IntVector& other);
  IntVector& operator*=(const BigInt& scalar);
  IntVector operator-() const;

  friend bool operator==(const IntVector&, const IntVector&) = default;
  friend std::strong_ordering operator<=>(const IntVector& a, const IntVector& b);

 private:
  std::vector<BigInt> entries_;
};

IntVector operator+(IntVector a, const IntVector& b);
IntVector operator-(IntVector a, const IntVector& b);
IntVector operator*(const BigInt& s, IntVector v);

/// Dense row-major integer matrix. Zero-row matrices are legal (rank-0 bases).
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> data);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(std::span<const BigInt> diag);
  static IntMatrix from_rows(std::span<const IntVector> rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const BigInt> data() const { return data_; }

  IntVector row(std::size_t r) const;
  IntVector col(std::size_t c) const;
  std::vector<IntVector> row_vectors() const;
  void set_row(std::size_t r, const IntVector& v);
  void append_row(const IntVector& v);

  IntMatrix transpose() const;
  bool is_identity() const;
  bool is_diagonal() const;
  bool is_symmetric() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend std::strong_ordering operator<=>(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& v);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt determinant(const IntMatrix& m);

/// Rank over Q by fraction-free elimination.
std::size_t rank(const IntMatrix& m);

bool is_unimodular(const IntMatrix& m);

/// Exact inverse of a unimodular matrix. Throws NotUnimodular otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

BigInt gcd_of_entries(std::span<const BigInt> values);

/// Floor division that rounds toward negative infinity.
BigInt floor_div(const BigInt& a, const BigInt& b);

std::ostream& operator<<(std::ostream& os, const IntVector& v);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);
std::string to_string(const IntVector& v);

struct IntVectorHash {
  std::size_t operator()(const IntVector& v) const noexcept;
};

struct IntMatrixHash {
  std::size_t operator()(const IntMatrix& m) const noexcept;
};

}  // namespace glat
