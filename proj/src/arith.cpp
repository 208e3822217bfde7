#include "zfhp/arith.hpp"

#include <cmath>
#include <string>

#include "zfhp/errors.hpp"
#include "zfhp/summation.hpp"

namespace zfhp {

int MobiusTable::at(std::uint64_t n) const {
  if (n == 0 || n > limit()) {
    throw OutOfRange("mu(" + std::to_string(n) + ") outside table of limit " +
                     std::to_string(limit()));
  }
  return values_[n];
}

std::uint32_t DivisorCountTable::at(std::uint64_t n) const {
  if (n == 0 || n > limit()) {
    throw OutOfRange("tau(" + std::to_string(n) + ") outside table of limit " +
                     std::to_string(limit()));
  }
  return counts_[n];
}

MobiusTable build_mobius(std::uint64_t limit) {
  if (limit == 0) throw InvalidArgument("build_mobius: limit must be >= 1");
  MobiusTable table;
  auto& mu = table.values_;
  mu.assign(limit + 1, 0);
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint64_t> primes;
  mu[1] = 1;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      mu[i] = -1;
    }
    for (const std::uint64_t p : primes) {
      const std::uint64_t ip = i * p;
      if (ip > limit) break;
      composite[ip] = true;
      if (i % p == 0) {
        mu[ip] = 0;
        break;
      }
      mu[ip] = static_cast<std::int8_t>(-mu[i]);
    }
  }
  return table;
}

DivisorCountTable build_divisor_counts(std::uint64_t limit) {
  if (limit == 0) throw InvalidArgument("build_divisor_counts: limit must be >= 1");
  DivisorCountTable table;
  auto& tau = table.counts_;
  tau.assign(limit + 1, 0);
  // exponent of the smallest prime factor
  std::vector<std::uint32_t> spf_exp(limit + 1, 0);
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint64_t> primes;
  tau[1] = 1;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      tau[i] = 2;
      spf_exp[i] = 1;
    }
    for (const std::uint64_t p : primes) {
      const std::uint64_t ip = i * p;
      if (ip > limit) break;
      composite[ip] = true;
      if (i % p == 0) {
        spf_exp[ip] = spf_exp[i] + 1;
        tau[ip] = tau[i] / (spf_exp[i] + 1) * (spf_exp[i] + 2);
        break;
      }
      spf_exp[ip] = 1;
      tau[ip] = tau[i] * 2;
    }
  }
  return table;
}

namespace {

void check_cutoff(const MobiusTable& table, std::uint64_t cutoff, const char* who) {
  if (cutoff == 0) throw InvalidArgument(std::string(who) + ": cutoff must be >= 1");
  if (cutoff > table.limit()) {
    throw OutOfRange(std::string(who) + ": cutoff " + std::to_string(cutoff) +
                     " exceeds table limit " + std::to_string(table.limit()));
  }
}

}  // namespace

double mobius_sum_over_k(const MobiusTable& table, std::uint64_t cutoff) {
  check_cutoff(table, cutoff, "mobius_sum_over_k");
  CompensatedSum sum;
  for (std::uint64_t k = 1; k <= cutoff; ++k) {
    const int m = table[k];
    if (m != 0) sum += m / static_cast<double>(k);
  }
  return sum.value();
}

double mobius_logsum_over_k(const MobiusTable& table, std::uint64_t cutoff) {
  check_cutoff(table, cutoff, "mobius_logsum_over_k");
  CompensatedSum sum;
  for (std::uint64_t k = 2; k <= cutoff; ++k) {
    const int m = table[k];
    if (m != 0) {
      const double kd = static_cast<double>(k);
      sum += m * std::log(kd) / kd;
    }
  }
  return sum.value();
}

std::int64_t bounded_divisor_sum(std::uint64_t j, std::uint64_t n, const MobiusTable& table) {
  if (j == 0 || n == 0) throw InvalidArgument("bounded_divisor_sum: j and n must be >= 1");
  std::int64_t total = 0;
  auto take = [&](std::uint64_t d) {
    if (d > n) return;
    total += table.at(d);
  };
  for (std::uint64_t d = 1; d * d <= j; ++d) {
    if (j % d != 0) continue;
    take(d);
    const std::uint64_t e = j / d;
    if (e != d) take(e);
  }
  return total;
}

}  // namespace zfhp
