#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace mobius {

// Exact arithmetic in GF(p^k) for prime powers p^k <= 8192.
//
// Elements are integers 0..q-1 encoding coefficient vectors in base p
// (least significant digit = constant term). The reduction polynomial per
// (p, k) comes from a fixed built-in table, so element encodings are
// reproducible bit-for-bit across runs and platforms. The polynomial is
// primitive, hence x (encoding p) generates the multiplicative group for
// k >= 2; construction verifies the full cycle and fails loudly otherwise.
class GaloisField {
 public:
  GaloisField(int p, int k);

  static bool is_prime(int n);
  // Factor q as p^k with p prime, if possible.
  static std::optional<std::pair<int, int>> prime_power(int q);

  int p() const { return p_; }
  int k() const { return k_; }
  int q() const { return q_; }

  // Monic reduction polynomial, coefficients ascending, size k+1.
  // For k == 1 this is {0, 1} (the polynomial x), i.e. plain mod-p arithmetic.
  const std::vector<int>& reduction_polynomial() const { return poly_; }

  int add(int a, int b) const;
  int sub(int a, int b) const;
  int neg(int a) const;
  int mul(int a, int b) const;
  int inv(int a) const;  // throws std::domain_error on 0
  int div(int a, int b) const;
  int pow(int a, std::int64_t e) const;  // e >= 0
  int frobenius(int a) const { return pow(a, p_); }

  // A verified generator of the cyclic multiplicative group.
  int generator() const { return gen_; }

 private:
  void check_range(int a) const;
  int add_digits(int a, int b) const;
  int mul_by_x(int a) const;  // multiply by the class of x, reduce

  int p_ = 0, k_ = 0, q_ = 0;
  std::vector<int> poly_;
  int gen_ = 0;
  std::vector<int> exp_;  // exp_[i] = gen^i, i in 0..q-2
  std::vector<int> log_;  // log_[exp_[i]] = i; log_[0] unused
  std::vector<int> inv_;
  // Full lookup tables when q is small enough that they stay cache-friendly.
  std::vector<std::uint16_t> add_table_;
  std::vector<std::uint16_t> mul_table_;
};

}  // namespace mobius
