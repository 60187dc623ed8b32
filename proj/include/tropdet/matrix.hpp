#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tropical {

using Entry = std::int64_t;

/// Dense row-major matrix of non-negative integers. Rectangular shapes,
/// including empty ones, are allowed; only DSMatrix demands squareness.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, Entry fill = 0);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Entry> entries);
  IntMatrix(std::initializer_list<std::initializer_list<Entry>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix constant(std::size_t n, Entry value) { return IntMatrix(n, n, value); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Entry operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  // Bounds-checked access. Writing a negative value throws DomainError.
  Entry at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, Entry value);

  std::span<const Entry> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<const Entry> entries() const { return data_; }

  Entry row_sum(std::size_t i) const;
  Entry col_sum(std::size_t j) const;
  Entry max_entry() const;
  Entry min_entry() const;

  IntMatrix transposed() const;

  // Rows and columns picked (and reordered) by the given index lists.
  IntMatrix submatrix(std::span<const std::size_t> row_idx,
                      std::span<const std::size_t> col_idx) const;

  // result(i, j) = (*this)(row_perm[i], col_perm[j]).
  IntMatrix permuted(std::span<const std::size_t> row_perm,
                     std::span<const std::size_t> col_perm) const;

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Entry> data_;
};

/// A square matrix whose rows and columns all sum to the same m, i.e. an
/// element of D(m,n). Only validate_ds hands these out.
class DSMatrix {
 public:
  const IntMatrix& matrix() const { return matrix_; }
  std::size_t n() const { return matrix_.rows(); }
  Entry m() const { return m_; }

  Entry operator()(std::size_t i, std::size_t j) const { return matrix_(i, j); }

  bool operator==(const DSMatrix&) const = default;

 private:
  DSMatrix(IntMatrix matrix, Entry m) : matrix_(std::move(matrix)), m_(m) {}
  friend DSMatrix validate_ds(IntMatrix a);

  IntMatrix matrix_;
  Entry m_ = 0;
};

/// m = q*n + r with 0 <= r < n.
struct SplitParams {
  Entry m = 0;
  Entry n = 0;
  Entry q = 0;
  Entry r = 0;

  bool operator==(const SplitParams&) const = default;
};

enum class Format { Plain, Structured };

// Plain format: one row per line, single spaces, LF or CRLF. Throws
// ParseError on bad tokens or empty input and ShapeError on ragged rows.
IntMatrix parse_matrix(std::string_view text);

// Certifies membership in D(m,n). Throws ShapeError when not square and
// ViolationError on the first line whose sum differs from row 0's sum.
DSMatrix validate_ds(IntMatrix a);

SplitParams split(Entry m, Entry n);

// Plain output has no trailing newline. Structured output is a JSON object
// with rows, cols and entries (plus m for certified matrices).
std::string serialize(const IntMatrix& a, Format format = Format::Plain);
std::string serialize(const DSMatrix& a, Format format = Format::Plain);

}  // namespace tropical
