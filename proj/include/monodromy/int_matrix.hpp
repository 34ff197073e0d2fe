#pragma once

// Dense exact integer matrices.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "monodromy/bigint.hpp"
#include "monodromy/error.hpp"

namespace monodromy {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DomainError("ragged matrix literal");
      for (long long v : r) data_.emplace_back(v);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const BigInt& v) { return v == 0; });
  }

  bool is_identity() const { return square() && *this == identity(rows_); }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  IntMatrix operator-() const {
    IntMatrix out = *this;
    for (auto& v : out.data_) v = -v;
    return out;
  }

  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix dimension mismatch in sum");
    IntMatrix out = a;
    for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
    return out;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_)
      throw DomainError("matrix dimension mismatch in product: " + a.shape() + " * " + b.shape());
    IntMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const BigInt& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (b(k, j) != 0) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  IntMatrix pow(std::size_t e) const {
    if (!square()) throw DomainError("power of a non-square matrix");
    IntMatrix result = identity(rows_), base = *this;
    while (e) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return result;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  // Right-aligned grid, one row per line.
  std::string to_text() const {
    std::vector<std::string> cells;
    std::size_t width = 1;
    for (const auto& v : data_) {
      cells.push_back(v.str());
      width = std::max(width, cells.back().size());
    }
    std::ostringstream out;
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        const std::string& s = cells[r * cols_ + c];
        out << (c ? " " : "") << std::string(width - s.size(), ' ') << s;
      }
      out << '\n';
    }
    return out.str();
  }

  // Entries that fit in 64 bits are JSON numbers, larger ones decimal strings.
  nlohmann::json entries_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < rows_; ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t c = 0; c < cols_; ++c) {
        const BigInt& v = (*this)(r, c);
        if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
          row.push_back(static_cast<long long>(v));
        else
          row.push_back(v.str());
      }
      rows.push_back(std::move(row));
    }
    return rows;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

// Fraction-free Gaussian elimination; every division is exact.
inline BigInt det(const IntMatrix& input) {
  if (!input.square()) throw DomainError("determinant of a non-square " + input.shape() + " matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix a = input;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

struct SmithForm {
  std::vector<BigInt> invariant_factors;  // nonzero diagonal, each dividing the next
  std::size_t rank = 0;
};

inline SmithForm smith_normal_form(const IntMatrix& input) {
  IntMatrix a = input;
  const std::size_t rows = a.rows(), cols = a.cols();
  auto swap_rows = [&](std::size_t r1, std::size_t r2) {
    if (r1 != r2)
      for (std::size_t c = 0; c < cols; ++c) std::swap(a(r1, c), a(r2, c));
  };
  auto swap_cols = [&](std::size_t c1, std::size_t c2) {
    if (c1 != c2)
      for (std::size_t r = 0; r < rows; ++r) std::swap(a(r, c1), a(r, c2));
  };
  SmithForm out;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    auto find_pivot = [&](std::size_t& pr, std::size_t& pc) {
      bool found = false;
      BigInt best;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c) {
          const BigInt& v = a(r, c);
          if (v == 0) continue;
          BigInt av = abs(v);
          if (!found || av < best) {
            found = true;
            best = av;
            pr = r;
            pc = c;
            if (best == 1) return true;
          }
        }
      return found;
    };
    std::size_t pr = 0, pc = 0;
    if (!find_pivot(pr, pc)) break;
    swap_rows(t, pr);
    swap_cols(t, pc);
    while (true) {
      bool dirty = false;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (a(r, t) == 0) continue;
        BigInt q = a(r, t) / a(t, t);
        for (std::size_t c = t; c < cols; ++c)
          if (a(t, c) != 0) a(r, c) -= q * a(t, c);
        if (a(r, t) != 0) dirty = true;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (a(t, c) == 0) continue;
        BigInt q = a(t, c) / a(t, t);
        for (std::size_t r = t; r < rows; ++r)
          if (a(r, t) != 0) a(r, c) -= q * a(r, t);
        if (a(t, c) != 0) dirty = true;
      }
      if (dirty) {
        // A remainder is now smaller than the pivot; bring it to (t,t).
        std::size_t br = t, bc = t;
        BigInt best = abs(a(t, t));
        for (std::size_t r = t + 1; r < rows; ++r)
          if (a(r, t) != 0 && abs(a(r, t)) < best) best = abs(a(r, t)), br = r, bc = t;
        for (std::size_t c = t + 1; c < cols; ++c)
          if (a(t, c) != 0 && abs(a(t, c)) < best) best = abs(a(t, c)), br = t, bc = c;
        swap_rows(t, br);
        swap_cols(t, bc);
        continue;
      }
      // Row and column cleared; enforce divisibility of the trailing block.
      std::size_t bad_row = rows;
      for (std::size_t r = t + 1; r < rows && bad_row == rows; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (a(r, c) % a(t, t) != 0) {
            bad_row = r;
            break;
          }
      if (bad_row == rows) break;
      for (std::size_t c = t; c < cols; ++c) a(t, c) += a(bad_row, c);
    }
    out.invariant_factors.push_back(abs(a(t, t)));
    ++out.rank;
  }
  return out;
}

}  // namespace monodromy
