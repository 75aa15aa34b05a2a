#include "hadamard/core.hpp"

#include <algorithm>

namespace hadamard {

InvalidOrder::InvalidOrder(long long m)
    : Error("Error: m=" + std::to_string(m) + " is incorrect size for Hadamard matrices"), m_(m) {}

NonCanonicalRow::NonCanonicalRow(std::size_t row, const std::string& what)
    : Error("row " + std::to_string(row + 1) + " is not canonical: " + what), row_(row) {}

BitMatrix::BitMatrix(std::size_t m) : rows_(m, BitVector(m, 0)) {}

BitMatrix::BitMatrix(std::vector<BitVector> rows) : rows_(std::move(rows)) {
  for (const auto& r : rows_) {
    if (r.size() != rows_.size()) throw std::invalid_argument("BitMatrix: matrix is not square");
    for (Bit x : r)
      if (x > 1) throw std::invalid_argument("BitMatrix: entry outside {0,1}");
  }
}

BitMatrix::BitMatrix(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<BitVector> tmp;
  for (const auto& r : rows) {
    BitVector v;
    for (int x : r) {
      if (x != 0 && x != 1) throw std::invalid_argument("BitMatrix: entry outside {0,1}");
      v.push_back(static_cast<Bit>(x));
    }
    tmp.push_back(std::move(v));
  }
  *this = BitMatrix(std::move(tmp));
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(size());
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) t.rows_[j][i] = rows_[i][j];
  return t;
}

SignMatrix::SignMatrix(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  for (const auto& r : rows_) {
    if (r.size() != rows_.size()) throw std::invalid_argument("SignMatrix: matrix is not square");
    for (int x : r)
      if (x != 1 && x != -1) throw std::invalid_argument("SignMatrix: entry outside {-1,+1}");
  }
}

SignMatrix::SignMatrix(std::initializer_list<std::initializer_list<int>> rows)
    : SignMatrix([&] {
        std::vector<std::vector<int>> tmp;
        for (const auto& r : rows) tmp.emplace_back(r);
        return tmp;
      }()) {}

void SignMatrix::negate_row(std::size_t i) {
  for (int& x : rows_.at(i)) x = -x;
}

void SignMatrix::negate_col(std::size_t j) {
  for (auto& r : rows_) r.at(j) = -r.at(j);
}

SearchParams validate_order(long long m) {
  if (m < 3 || m % 4 != 3) throw InvalidOrder(m);
  SearchParams p;
  p.m = static_cast<int>(m);
  p.q = static_cast<int>((m + 1) / 4);
  p.a = p.q;
  p.b = 2 * p.q;
  p.n = p.m + 1;
  return p;
}

int dot(std::span<const Bit> u, std::span<const Bit> v) {
  if (u.size() != v.size())
    throw LengthMismatch("dot: lengths " + std::to_string(u.size()) + " and " +
                         std::to_string(v.size()) + " differ");
  int s = 0;
  for (std::size_t k = 0; k < u.size(); ++k) s += u[k] & v[k];
  return s;
}

int weight(std::span<const Bit> u) {
  return static_cast<int>(std::count(u.begin(), u.end(), Bit{1}));
}

BitVector bits_from_string(std::string_view s) {
  BitVector v;
  v.reserve(s.size());
  for (char c : s) {
    if (c == '0' || c == '1')
      v.push_back(static_cast<Bit>(c - '0'));
    else if (c != ',' && c != ' ')
      throw std::invalid_argument(std::string("bits_from_string: unexpected character '") + c + "'");
  }
  return v;
}

std::string bits_to_string(std::span<const Bit> u) {
  std::string s;
  s.reserve(u.size());
  for (Bit b : u) s.push_back(static_cast<char>('0' + b));
  return s;
}

}  // namespace hadamard
