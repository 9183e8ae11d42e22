#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace torschain {

// A subset of the indecomposable table, stored as a 64-bit mask. Torsion
// classes, torsion-free classes and quasisemistable categories are all sets of
// indecomposables; the additive closure is implied.
class IndexSet {
 public:
  static constexpr int kCapacity = 64;

  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr IndexSet first_n(int n) {
    return IndexSet(n >= kCapacity ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static constexpr IndexSet single(int i) { return IndexSet(std::uint64_t{1} << i); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
  constexpr bool subset_of(IndexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool proper_subset_of(IndexSet other) const {
    return subset_of(other) && bits_ != other.bits_;
  }

  constexpr void insert(int i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(int i) { bits_ &= ~(std::uint64_t{1} << i); }

  constexpr IndexSet operator|(IndexSet o) const { return IndexSet(bits_ | o.bits_); }
  constexpr IndexSet operator&(IndexSet o) const { return IndexSet(bits_ & o.bits_); }
  constexpr IndexSet minus(IndexSet o) const { return IndexSet(bits_ & ~o.bits_); }
  constexpr IndexSet& operator|=(IndexSet o) {
    bits_ |= o.bits_;
    return *this;
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  constexpr auto operator<=>(const IndexSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace torschain
