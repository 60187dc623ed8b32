#include "tropdet/matrix.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "json.hpp"

#include "tropdet/errors.hpp"

namespace tropical {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, Entry fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {
  if (fill < 0) throw DomainError("matrix entries must be non-negative");
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Entry> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols)
    throw ShapeError("expected " + std::to_string(rows * cols) + " entries, got " +
                     std::to_string(data_.size()));
  if (std::ranges::any_of(data_, [](Entry e) { return e < 0; }))
    throw DomainError("matrix entries must be non-negative");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Entry>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeError("ragged initializer");
    for (Entry e : r) {
      if (e < 0) throw DomainError("matrix entries must be non-negative");
      data_.push_back(e);
    }
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) a.data_[i * n + i] = 1;
  return a;
}

Entry IntMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw ShapeError("index out of range");
  return (*this)(i, j);
}

void IntMatrix::set(std::size_t i, std::size_t j, Entry value) {
  if (i >= rows_ || j >= cols_) throw ShapeError("index out of range");
  if (value < 0) throw DomainError("matrix entries must be non-negative");
  data_[i * cols_ + j] = value;
}

Entry IntMatrix::row_sum(std::size_t i) const {
  auto r = row(i);
  return std::accumulate(r.begin(), r.end(), Entry{0});
}

Entry IntMatrix::col_sum(std::size_t j) const {
  Entry s = 0;
  for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, j);
  return s;
}

Entry IntMatrix::max_entry() const {
  return data_.empty() ? 0 : *std::ranges::max_element(data_);
}

Entry IntMatrix::min_entry() const {
  return data_.empty() ? 0 : *std::ranges::min_element(data_);
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::submatrix(std::span<const std::size_t> row_idx,
                               std::span<const std::size_t> col_idx) const {
  IntMatrix s(row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j)
      s.data_[i * s.cols_ + j] = at(row_idx[i], col_idx[j]);
  return s;
}

IntMatrix IntMatrix::permuted(std::span<const std::size_t> row_perm,
                              std::span<const std::size_t> col_perm) const {
  if (row_perm.size() != rows_ || col_perm.size() != cols_)
    throw ShapeError("permutation length does not match matrix shape");
  return submatrix(row_perm, col_perm);
}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  auto blank = [](std::string_view s) {
    return s.find_first_not_of(" \t") == std::string_view::npos;
  };
  while (!lines.empty() && blank(lines.back())) lines.pop_back();
  return lines;
}

Entry parse_token(std::string_view token, std::size_t line_no) {
  Entry value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec == std::errc::result_out_of_range)
    throw ParseError(line_no, "entry '" + std::string(token) + "' is out of range");
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError(line_no, "'" + std::string(token) + "' is not a decimal integer");
  if (value < 0)
    throw ParseError(line_no, "negative entry '" + std::string(token) + "'");
  return value;
}

}  // namespace

IntMatrix parse_matrix(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.empty()) throw ParseError("empty matrix input");

  std::vector<Entry> entries;
  std::size_t cols = 0;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    std::size_t count = 0;
    std::string_view line = lines[li];
    std::size_t pos = 0;
    while (true) {
      pos = line.find_first_not_of(" \t", pos);
      if (pos == std::string_view::npos) break;
      std::size_t end = line.find_first_of(" \t", pos);
      if (end == std::string_view::npos) end = line.size();
      entries.push_back(parse_token(line.substr(pos, end - pos), li + 1));
      ++count;
      pos = end;
    }
    if (li == 0) {
      if (count == 0) throw ParseError(1, "empty row");
      cols = count;
    } else if (count != cols) {
      throw ShapeError("line " + std::to_string(li + 1) + " has " + std::to_string(count) +
                       " entries, expected " + std::to_string(cols));
    }
  }
  return IntMatrix(lines.size(), cols, std::move(entries));
}

DSMatrix validate_ds(IntMatrix a) {
  if (!a.is_square() || a.rows() == 0)
    throw ShapeError("matrix is " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                     ", expected a non-empty square matrix");
  const std::size_t n = a.rows();
  const Entry m = a.row_sum(0);

  using Line = ViolationError::Line;
  struct Bad {
    Line line;
    std::size_t index;
    Entry sum;
  };
  std::vector<Bad> bad;
  for (std::size_t i = 0; i < n; ++i)
    if (Entry s = a.row_sum(i); s != m) bad.push_back({Line::Row, i, s});
  for (std::size_t j = 0; j < n; ++j)
    if (Entry s = a.col_sum(j); s != m) bad.push_back({Line::Column, j, s});

  if (!bad.empty()) {
    std::ostringstream msg;
    msg << "not doubly stochastic (row 1 sums to " << m << "): ";
    for (std::size_t k = 0; k < bad.size(); ++k) {
      if (k) msg << ", ";
      msg << (bad[k].line == Line::Row ? "row " : "column ") << bad[k].index + 1
          << " sums to " << bad[k].sum;
    }
    throw ViolationError(bad[0].line, bad[0].index, bad[0].sum, m, msg.str());
  }
  return DSMatrix(std::move(a), m);
}

SplitParams split(Entry m, Entry n) {
  if (m < 1 || n < 1) throw DomainError("split requires m >= 1 and n >= 1");
  return {m, n, m / n, m % n};
}

namespace {

nlohmann::json to_json(const IntMatrix& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto r = a.row(i);
    rows.push_back(std::vector<Entry>(r.begin(), r.end()));
  }
  return {{"rows", a.rows()}, {"cols", a.cols()}, {"entries", std::move(rows)}};
}

}  // namespace

std::string serialize(const IntMatrix& a, Format format) {
  if (format == Format::Structured) return to_json(a).dump();
  std::string out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i) out += '\n';
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) out += ' ';
      out += std::to_string(a(i, j));
    }
  }
  return out;
}

std::string serialize(const DSMatrix& a, Format format) {
  if (format == Format::Plain) return serialize(a.matrix(), format);
  auto doc = to_json(a.matrix());
  doc["m"] = a.m();
  return doc.dump();
}

}  // namespace tropical
