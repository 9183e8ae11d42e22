#include "torschain/ff_linalg.hpp"

#include <algorithm>
#include <string>

#include "torschain/errors.hpp"

namespace torschain {
namespace {

int mod(int a, int p) {
  int r = a % p;
  return r < 0 ? r + p : r;
}

void check_same_field(const FpMatrix& a, const FpMatrix& b) {
  if (a.p() != b.p()) throw InputError("matrices over different fields");
}

std::int64_t checked_power(int base, int exp, std::int64_t limit) {
  std::int64_t value = 1;
  for (int i = 0; i < exp; ++i) {
    value *= base;
    if (value > limit) return limit + 1;
  }
  return value;
}

}  // namespace

bool is_supported_prime(int p) { return p == 2 || p == 3 || p == 5 || p == 7; }

int fp_inverse(int a, int p) {
  a = mod(a, p);
  if (a == 0) throw InputError("zero has no inverse");
  int result = 1;
  for (int e = p - 2, base = a; e > 0; e >>= 1, base = base * base % p) {
    if (e & 1) result = result * base % p;
  }
  return result;
}

FpMatrix::FpMatrix(int p, int rows, int cols)
    : p_(p), rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows * cols), 0) {
  if (rows < 0 || cols < 0) throw InputError("negative matrix dimension");
}

FpMatrix::FpMatrix(int p, int rows, int cols, std::vector<int> entries)
    : p_(p), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows < 0 || cols < 0) throw InputError("negative matrix dimension");
  if (entries_.size() != static_cast<std::size_t>(rows * cols)) {
    throw InputError("matrix entry count does not match " + std::to_string(rows) + "x" +
                     std::to_string(cols));
  }
  for (int& e : entries_) e = mod(e, p_);
}

FpMatrix FpMatrix::identity(int p, int n) {
  FpMatrix m(p, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FpMatrix FpMatrix::from_columns(int p, int rows, const std::vector<FpVector>& columns) {
  FpMatrix m(p, rows, static_cast<int>(columns.size()));
  for (int c = 0; c < m.cols(); ++c) {
    if (static_cast<int>(columns[c].size()) != rows) throw InputError("column length mismatch");
    for (int r = 0; r < rows; ++r) m.set(r, c, columns[c][r]);
  }
  return m;
}

void FpMatrix::set(int r, int c, int value) {
  entries_[static_cast<std::size_t>(r * cols_ + c)] = mod(value, p_);
}

FpVector FpMatrix::column(int c) const {
  FpVector v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

FpVector FpMatrix::apply(const FpVector& v) const {
  if (static_cast<int>(v.size()) != cols_) throw InputError("vector length mismatch");
  FpVector out(rows_, 0);
  for (int r = 0; r < rows_; ++r) {
    int acc = 0;
    for (int c = 0; c < cols_; ++c) acc += (*this)(r, c) * v[c];
    out[r] = acc % p_;
  }
  return out;
}

bool FpMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](int e) { return e == 0; });
}

FpMatrix FpMatrix::operator*(const FpMatrix& rhs) const {
  check_same_field(*this, rhs);
  if (cols_ != rhs.rows_) throw InputError("matrix product shape mismatch");
  FpMatrix out(p_, rows_, rhs.cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < rhs.cols_; ++c) {
      int acc = 0;
      for (int k = 0; k < cols_; ++k) acc += (*this)(r, k) * rhs(k, c);
      out.entries_[static_cast<std::size_t>(r * rhs.cols_ + c)] = acc % p_;
    }
  }
  return out;
}

FpMatrix FpMatrix::operator+(const FpMatrix& rhs) const {
  check_same_field(*this, rhs);
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InputError("matrix sum shape mismatch");
  FpMatrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out.entries_[i] = (entries_[i] + rhs.entries_[i]) % p_;
  }
  return out;
}

FpMatrix FpMatrix::operator-(const FpMatrix& rhs) const { return *this + rhs.scaled(p_ - 1); }

FpMatrix FpMatrix::scaled(int c) const {
  FpMatrix out = *this;
  c = mod(c, p_);
  for (int& e : out.entries_) e = e * c % p_;
  return out;
}

std::vector<int> row_reduce(FpMatrix& m) {
  const int p = m.p();
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int sel = -1;
    for (int r = row; r < m.rows(); ++r) {
      if (m(r, col) != 0) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != row) {
      for (int c = 0; c < m.cols(); ++c) {
        int tmp = m(row, c);
        m.set(row, c, m(sel, c));
        m.set(sel, c, tmp);
      }
    }
    int inv = fp_inverse(m(row, col), p);
    for (int c = 0; c < m.cols(); ++c) m.set(row, c, m(row, c) * inv);
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      int factor = m(r, col);
      for (int c = 0; c < m.cols(); ++c) m.set(r, c, m(r, c) - factor * m(row, c));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

RankResult rank_and_basis(const FpMatrix& m) {
  FpMatrix reduced = m;
  auto pivots = row_reduce(reduced);
  RankResult result;
  result.rank = static_cast<int>(pivots.size());
  for (int c : pivots) result.column_space_basis.push_back(m.column(c));
  return result;
}

int rank(const FpMatrix& m) {
  FpMatrix reduced = m;
  return static_cast<int>(row_reduce(reduced).size());
}

std::vector<FpVector> kernel_basis(const FpMatrix& m) {
  FpMatrix reduced = m;
  auto pivots = row_reduce(reduced);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<FpVector> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    FpVector v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = mod(-reduced(static_cast<int>(r), free), m.p());
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool is_invertible(const FpMatrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

Subspace Subspace::zero(int p, int ambient) {
  Subspace s;
  s.p_ = p;
  s.ambient_ = ambient;
  return s;
}

Subspace Subspace::full(int p, int ambient) {
  Subspace s = zero(p, ambient);
  for (int i = 0; i < ambient; ++i) {
    FpVector e(ambient, 0);
    e[i] = 1;
    s.basis_.push_back(std::move(e));
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::span(int p, int ambient, const std::vector<FpVector>& vectors) {
  Subspace s = zero(p, ambient);
  if (vectors.empty() || ambient == 0) return s;
  FpMatrix m(p, static_cast<int>(vectors.size()), ambient);
  for (int r = 0; r < m.rows(); ++r) {
    if (static_cast<int>(vectors[r].size()) != ambient) throw InputError("vector length mismatch");
    for (int c = 0; c < ambient; ++c) m.set(r, c, vectors[r][c]);
  }
  s.pivots_ = row_reduce(m);
  for (std::size_t r = 0; r < s.pivots_.size(); ++r) {
    FpVector row(ambient);
    for (int c = 0; c < ambient; ++c) row[c] = m(static_cast<int>(r), c);
    s.basis_.push_back(std::move(row));
  }
  return s;
}

std::vector<int> Subspace::complement_coordinates() const {
  std::vector<int> out;
  std::size_t k = 0;
  for (int c = 0; c < ambient_; ++c) {
    if (k < pivots_.size() && pivots_[k] == c) {
      ++k;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

FpVector Subspace::reduce(const FpVector& v) const {
  if (static_cast<int>(v.size()) != ambient_) throw InputError("vector length mismatch");
  FpVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = mod(v[i], p_);
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    int coeff = out[pivots_[k]];
    if (coeff == 0) continue;
    for (int c = 0; c < ambient_; ++c) out[c] = mod(out[c] - coeff * basis_[k][c], p_);
  }
  return out;
}

bool Subspace::contains(const FpVector& v) const {
  auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](int e) { return e == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [this](const FpVector& v) { return contains(v); });
}

FpVector Subspace::coordinates(const FpVector& v) const {
  FpVector coords(basis_.size());
  for (std::size_t k = 0; k < basis_.size(); ++k) coords[k] = mod(v[pivots_[k]], p_);
  return coords;
}

FpVector Subspace::combine(const FpVector& coords) const {
  if (coords.size() != basis_.size()) throw InputError("coordinate length mismatch");
  FpVector out(ambient_, 0);
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    for (int c = 0; c < ambient_; ++c) out[c] = (out[c] + coords[k] * basis_[k][c]) % p_;
  }
  return out;
}

std::vector<Subspace> enumerate_subspaces(int n, int k, int p) {
  if (!is_supported_prime(p)) throw InputError("unsupported prime " + std::to_string(p));
  if (n < 0 || k < 0 || k > n) throw InputError("subspace dimension out of range");
  if (checked_power(p, n, kSubspaceEnumerationLimit) > kSubspaceEnumerationLimit) {
    throw ResourceError("subspace enumeration guard exceeded: " + std::to_string(p) + "^" +
                        std::to_string(n));
  }

  std::vector<Subspace> out;
  // Choose pivot columns, then fill every free slot right of each pivot that is
  // not itself a pivot column.
  std::vector<int> pivots(k);
  for (int i = 0; i < k; ++i) pivots[i] = i;
  while (true) {
    std::vector<std::pair<int, int>> slots;
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    for (int r = 0; r < k; ++r) {
      for (int c = pivots[r] + 1; c < n; ++c) {
        if (!is_pivot[c]) slots.emplace_back(r, c);
      }
    }
    std::vector<int> digits(slots.size(), 0);
    while (true) {
      Subspace s = Subspace::zero(p, n);
      s.pivots_ = pivots;
      s.basis_.assign(k, FpVector(n, 0));
      for (int r = 0; r < k; ++r) s.basis_[r][pivots[r]] = 1;
      for (std::size_t i = 0; i < slots.size(); ++i) s.basis_[slots[i].first][slots[i].second] = digits[i];
      out.push_back(std::move(s));

      std::size_t pos = 0;
      while (pos < digits.size() && ++digits[pos] == p) digits[pos++] = 0;
      if (pos == digits.size()) break;
    }

    int i = k - 1;
    while (i >= 0 && pivots[i] == n - k + i) --i;
    if (i < 0) break;
    ++pivots[i];
    for (int j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
  }
  return out;
}

std::vector<Subspace> enumerate_all_subspaces(int n, int p) {
  std::vector<Subspace> out;
  for (int k = 0; k <= n; ++k) {
    auto part = enumerate_subspaces(n, k, p);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace torschain
