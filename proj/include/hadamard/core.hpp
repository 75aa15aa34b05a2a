#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hadamard {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidOrder : public Error {
 public:
  explicit InvalidOrder(long long m);
  long long order() const noexcept { return m_; }

 private:
  long long m_;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class NotHadamard : public Error {
 public:
  using Error::Error;
};

class NotNormalized : public Error {
 public:
  using Error::Error;
};

/// A row is not laid out ones-first within the spans inherited from earlier rows.
class NonCanonicalRow : public Error {
 public:
  NonCanonicalRow(std::size_t row, const std::string& what);
  /// 0-based index of the offending row.
  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

class OrderTooLarge : public Error {
 public:
  using Error::Error;
};

class InternalInvariantViolation : public Error {
 public:
  using Error::Error;
};

using Bit = std::uint8_t;
using BitVector = std::vector<Bit>;

/// Square matrix over {0,1}: a Hadamard matrix in {0,1} presentation when the
/// row Gram matrix has diagonal (m+1)/2 and off-diagonal (m+1)/4.
class BitMatrix {
 public:
  BitMatrix() = default;
  /// Zero matrix of side m.
  explicit BitMatrix(std::size_t m);
  /// Throws std::invalid_argument unless rows are square and entries are 0/1.
  explicit BitMatrix(std::vector<BitVector> rows);
  BitMatrix(std::initializer_list<std::initializer_list<int>> rows);

  std::size_t size() const noexcept { return rows_.size(); }
  const BitVector& row(std::size_t i) const { return rows_.at(i); }
  const std::vector<BitVector>& rows() const noexcept { return rows_; }
  Bit operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  void set(std::size_t i, std::size_t j, bool v) { rows_.at(i).at(j) = v ? 1 : 0; }

  BitMatrix transpose() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;
  friend auto operator<=>(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::vector<BitVector> rows_;
};

/// Square matrix over {-1,+1}.
class SignMatrix {
 public:
  SignMatrix() = default;
  /// Throws std::invalid_argument unless rows are square and entries are +-1.
  explicit SignMatrix(std::vector<std::vector<int>> rows);
  SignMatrix(std::initializer_list<std::initializer_list<int>> rows);

  std::size_t size() const noexcept { return rows_.size(); }
  const std::vector<int>& row(std::size_t i) const { return rows_.at(i); }
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  int operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }

  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  friend bool operator==(const SignMatrix&, const SignMatrix&) = default;

 private:
  std::vector<std::vector<int>> rows_;
};

/// Order m of the {0,1} presentation and the derived quantities.
struct SearchParams {
  int m = 0;
  int q = 0;  // (m+1)/4
  int a = 0;  // pairwise row overlap, = q
  int b = 0;  // row weight, = 2q
  int n = 0;  // order of the sign matrix, = m+1

  friend bool operator==(const SearchParams&, const SearchParams&) = default;
};

/// Accepts m >= 3 with m = 3 (mod 4); throws InvalidOrder otherwise.
SearchParams validate_order(long long m);

/// Standard scalar product of two bit vectors.
int dot(std::span<const Bit> u, std::span<const Bit> v);

int weight(std::span<const Bit> u);

/// Parses "1101..." into a bit vector (test and literal helper).
BitVector bits_from_string(std::string_view s);
std::string bits_to_string(std::span<const Bit> u);

}  // namespace hadamard
