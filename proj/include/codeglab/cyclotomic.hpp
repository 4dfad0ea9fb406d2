#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "codeglab/modarith.hpp"

namespace codeglab {

// A cyclotomic integer written as a multiplicity vector over the o-th roots
// of unity: value = sum_k mult[k] * zeta_o^k.  Character values store the
// eigenvalue multiset of a representing matrix, so 0 <= mult[k] <= degree
// and the vector is a canonical form for a fixed o.
struct CycloValue {
  std::uint64_t order = 1;
  std::vector<std::int64_t> mult;
};

inline CycloValue cyclo_integer(std::int64_t n) {
  return CycloValue{1, {n}};
}

inline bool is_rational_value(const CycloValue& v, std::int64_t n) {
  if (v.mult.empty()) return n == 0;
  if (v.mult[0] != n) return false;
  for (std::size_t k = 1; k < v.mult.size(); ++k)
    if (v.mult[k] != 0) return false;
  return true;
}

// Expand into a length-e vector over the e-th roots (o must divide e).
inline std::vector<std::int64_t> expand_to(const CycloValue& v, std::uint64_t e) {
  if (e % v.order != 0) throw std::invalid_argument("expand_to: order mismatch");
  std::vector<std::int64_t> out(e, 0);
  const std::uint64_t step = e / v.order;
  for (std::size_t k = 0; k < v.mult.size(); ++k)
    out[k * step] += v.mult[k];
  return out;
}

// Accumulator for sums of products of cyclotomic integers inside Z[zeta_e],
// represented as an integer vector modulo x^e - 1.  The zero test multiplies
// by (p - sum_j x^(j e/p)) for each prime p | e; the product vanishes at
// every e-th root of unity of order < e and is a nonzero constant at the
// primitive ones, so the result is the zero vector exactly when the
// accumulated value is zero in Z[zeta_e].
class CycloAccumulator {
 public:
  explicit CycloAccumulator(std::uint64_t e) : e_(e), buf_(e, 0) {}

  void add_integer(std::int64_t n) { buf_[0] += n; }

  // += weight * a * b
  void add_product(const CycloValue& a, const CycloValue& b, std::int64_t weight) {
    const std::uint64_t sa = e_ / a.order, sb = e_ / b.order;
    for (std::size_t i = 0; i < a.mult.size(); ++i) {
      if (a.mult[i] == 0) continue;
      const __int128 wa = static_cast<__int128>(weight) * a.mult[i];
      for (std::size_t j = 0; j < b.mult.size(); ++j) {
        if (b.mult[j] == 0) continue;
        buf_[(i * sa + j * sb) % e_] += wa * b.mult[j];
      }
    }
  }

  void add_value(const CycloValue& a, std::int64_t weight) {
    const std::uint64_t sa = e_ / a.order;
    for (std::size_t i = 0; i < a.mult.size(); ++i)
      buf_[(i * sa) % e_] += static_cast<__int128>(weight) * a.mult[i];
  }

  bool is_zero() const {
    std::vector<__int128> d = buf_;
    for (auto p : modarith::prime_divisors(e_)) {
      const std::uint64_t step = e_ / p;
      std::vector<__int128> next(e_);
      for (std::uint64_t i = 0; i < e_; ++i) {
        __int128 s = 0;
        for (std::uint64_t j = 0; j < p; ++j) {
          std::uint64_t idx = i >= j * step ? i - j * step : i + e_ - j * step;
          s += d[idx];
        }
        next[i] = static_cast<__int128>(p) * d[i] - s;
      }
      d = std::move(next);
    }
    for (auto v : d)
      if (v != 0) return false;
    return true;
  }

  bool is_integer(std::int64_t n) {
    buf_[0] -= n;
    bool z = is_zero();
    buf_[0] += n;
    return z;
  }

 private:
  std::uint64_t e_;
  std::vector<__int128> buf_;
};

}  // namespace codeglab
