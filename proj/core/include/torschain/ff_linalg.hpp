#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace torschain {

// Vectors over F_p are plain integer vectors with entries reduced into [0, p).
using FpVector = std::vector<int>;

bool is_supported_prime(int p);

int fp_inverse(int a, int p);

class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(int p, int rows, int cols);
  // Row-major entries; reduced mod p on construction.
  FpMatrix(int p, int rows, int cols, std::vector<int> entries);

  static FpMatrix identity(int p, int n);
  static FpMatrix from_columns(int p, int rows, const std::vector<FpVector>& columns);

  int p() const { return p_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  int operator()(int r, int c) const { return entries_[static_cast<std::size_t>(r * cols_ + c)]; }
  void set(int r, int c, int value);

  FpVector column(int c) const;
  FpVector apply(const FpVector& v) const;
  bool is_zero() const;

  FpMatrix operator*(const FpMatrix& rhs) const;
  FpMatrix operator+(const FpMatrix& rhs) const;
  FpMatrix operator-(const FpMatrix& rhs) const;
  FpMatrix scaled(int c) const;

  const std::vector<int>& entries() const { return entries_; }

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  int p_ = 2;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> entries_;
};

struct RankResult {
  int rank = 0;
  std::vector<FpVector> column_space_basis;
};

RankResult rank_and_basis(const FpMatrix& m);
int rank(const FpMatrix& m);
std::vector<FpVector> kernel_basis(const FpMatrix& m);
bool is_invertible(const FpMatrix& m);

// Reduced row echelon form, in place; returns pivot columns.
std::vector<int> row_reduce(FpMatrix& m);

// A linear subspace of F_p^n held by its unique reduced echelon basis, so
// equality of subspaces is equality of representations.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(int p, int ambient);
  static Subspace full(int p, int ambient);
  static Subspace span(int p, int ambient, const std::vector<FpVector>& vectors);

  int p() const { return p_; }
  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<FpVector>& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  // Non-pivot coordinates, in increasing order; indexes a complement basis.
  std::vector<int> complement_coordinates() const;

  bool contains(const FpVector& v) const;
  bool contains(const Subspace& other) const;
  // v minus its component along the basis; zero exactly when v lies in the span.
  FpVector reduce(const FpVector& v) const;
  // Coordinates of v in the echelon basis; v must lie in the subspace.
  FpVector coordinates(const FpVector& v) const;
  // Linear combination of the basis vectors.
  FpVector combine(const FpVector& coords) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.p_ == b.p_ && a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend auto operator<=>(const Subspace& a, const Subspace& b) {
    if (auto c = a.ambient_ <=> b.ambient_; c != 0) return c;
    if (auto c = a.dim() <=> b.dim(); c != 0) return c;
    return a.basis_ <=> b.basis_;
  }

 private:
  friend std::vector<Subspace> enumerate_subspaces(int n, int k, int p);

  int p_ = 2;
  int ambient_ = 0;
  std::vector<FpVector> basis_;
  std::vector<int> pivots_;
};

// Guard for exhaustive enumeration: p^n may not exceed this.
inline constexpr std::int64_t kSubspaceEnumerationLimit = std::int64_t{1} << 20;

// Exactly one canonical representative per k-dimensional subspace of F_p^n.
std::vector<Subspace> enumerate_subspaces(int n, int k, int p);
// All subspaces of F_p^n, grouped by increasing dimension.
std::vector<Subspace> enumerate_all_subspaces(int n, int p);

}  // namespace torschain
