#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace zfhp {

/// Möbius function values mu(1..limit), immutable after construction.
class MobiusTable {
 public:
  [[nodiscard]] std::uint64_t limit() const noexcept { return values_.size() - 1; }
  /// mu(n) for 1 <= n <= limit; throws OutOfRange otherwise.
  [[nodiscard]] int at(std::uint64_t n) const;
  [[nodiscard]] int operator[](std::uint64_t n) const noexcept { return values_[n]; }
  /// Raw storage, index 0 unused (holds 0).
  [[nodiscard]] std::span<const std::int8_t> values() const noexcept { return values_; }

 private:
  friend MobiusTable build_mobius(std::uint64_t limit);
  std::vector<std::int8_t> values_;
};

/// Divisor counts tau(1..limit).
class DivisorCountTable {
 public:
  [[nodiscard]] std::uint64_t limit() const noexcept { return counts_.size() - 1; }
  [[nodiscard]] std::uint32_t at(std::uint64_t n) const;
  [[nodiscard]] std::uint32_t operator[](std::uint64_t n) const noexcept { return counts_[n]; }
  [[nodiscard]] std::span<const std::uint32_t> counts() const noexcept { return counts_; }

 private:
  friend DivisorCountTable build_divisor_counts(std::uint64_t limit);
  std::vector<std::uint32_t> counts_;
};

// Both tables come from a linear sieve (each composite crossed out once by
// its smallest prime factor).
MobiusTable build_mobius(std::uint64_t limit);
DivisorCountTable build_divisor_counts(std::uint64_t limit);

/// sum_{k=1}^{cutoff} mu(k)/k, increasing k, compensated. Tends to 0.
double mobius_sum_over_k(const MobiusTable& table, std::uint64_t cutoff);

/// sum_{k=1}^{cutoff} mu(k) log(k)/k, increasing k, compensated. Tends to -1.
double mobius_logsum_over_k(const MobiusTable& table, std::uint64_t cutoff);

/// sum of mu(d) over divisors d of j with d <= n. |result| <= tau(j).
/// Throws OutOfRange if some needed d exceeds table.limit().
std::int64_t bounded_divisor_sum(std::uint64_t j, std::uint64_t n, const MobiusTable& table);

}  // namespace zfhp
