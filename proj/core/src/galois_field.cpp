#include "mobius/galois_field.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace mobius {

namespace {

constexpr int kMaxOrder = 8192;
// Full add/mul tables are built up to this order; larger fields use the
// exp/log tables plus digit-wise addition.
constexpr int kFullTableLimit = 512;

struct PolyEntry {
  int p;
  int k;
  std::array<int, 14> coeffs;  // ascending, degree k, unused tail zero
};

// Fixed reduction polynomials: for each (p, k) the monic degree-k polynomial
// over GF(p) with the smallest coefficient encoding that is primitive.
// Generated offline (scripts/gen_reduction_polys.py) and frozen here so that
// element encodings never change.
constexpr PolyEntry kReductionPolys[] = {
    {2, 2, {1, 1, 1}},
    {2, 3, {1, 1, 0, 1}},
    {3, 2, {2, 1, 1}},
    {2, 4, {1, 1, 0, 0, 1}},
    {5, 2, {2, 1, 1}},
    {3, 3, {1, 2, 0, 1}},
    {2, 5, {1, 0, 1, 0, 0, 1}},
    {7, 2, {3, 1, 1}},
    {2, 6, {1, 1, 0, 0, 0, 0, 1}},
    {3, 4, {2, 1, 0, 0, 1}},
    {11, 2, {7, 1, 1}},
    {5, 3, {2, 3, 0, 1}},
    {2, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
    {13, 2, {2, 1, 1}},
    {3, 5, {1, 2, 0, 0, 0, 1}},
    {2, 8, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
    {17, 2, {3, 1, 1}},
    {7, 3, {2, 3, 0, 1}},
    {19, 2, {2, 1, 1}},
    {2, 9, {1, 0, 0, 0, 1, 0, 0, 0, 0, 1}},
    {23, 2, {7, 1, 1}},
    {5, 4, {2, 2, 1, 0, 1}},
    {3, 6, {2, 1, 0, 0, 0, 0, 1}},
    {29, 2, {3, 1, 1}},
    {31, 2, {12, 1, 1}},
    {2, 10, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
    {11, 3, {4, 1, 0, 1}},
    {37, 2, {5, 1, 1}},
    {41, 2, {12, 1, 1}},
    {43, 2, {3, 1, 1}},
    {2, 11, {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    {3, 7, {1, 2, 1, 0, 0, 0, 0, 1}},
    {13, 3, {6, 1, 0, 1}},
    {47, 2, {13, 1, 1}},
    {7, 4, {5, 3, 1, 0, 1}},
    {53, 2, {5, 1, 1}},
    {5, 5, {2, 4, 0, 0, 0, 1}},
    {59, 2, {2, 1, 1}},
    {61, 2, {2, 1, 1}},
    {2, 12, {1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1}},
    {67, 2, {12, 1, 1}},
    {17, 3, {3, 1, 0, 1}},
    {71, 2, {11, 1, 1}},
    {73, 2, {11, 1, 1}},
    {79, 2, {3, 1, 1}},
    {3, 8, {2, 0, 0, 1, 0, 0, 0, 0, 1}},
    {19, 3, {4, 1, 0, 1}},
    {83, 2, {2, 1, 1}},
    {89, 2, {6, 1, 1}},
    {2, 13, {1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
};

const PolyEntry* find_poly(int p, int k) {
  for (const auto& e : kReductionPolys)
    if (e.p == p && e.k == k) return &e;
  return nullptr;
}

int smallest_primitive_root(int p) {
  // multiplicative group of GF(p) has order p-1
  auto order_divides = [&](int g, int e) {
    std::int64_t r = 1, b = g, n = e;
    while (n) {
      if (n & 1) r = r * b % p;
      b = b * b % p;
      n >>= 1;
    }
    return r == 1;
  };
  int m = p - 1;
  std::vector<int> prime_divs;
  int t = m;
  for (int d = 2; d * d <= t; ++d)
    if (t % d == 0) {
      prime_divs.push_back(d);
      while (t % d == 0) t /= d;
    }
  if (t > 1) prime_divs.push_back(t);
  for (int g = 1; g < p; ++g) {
    bool primitive = true;
    for (int r : prime_divs)
      if (order_divides(g, m / r)) {
        primitive = false;
        break;
      }
    if (primitive) return g;
  }
  throw std::logic_error("no primitive root found");
}

}  // namespace

bool GaloisField::is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<int, int>> GaloisField::prime_power(int q) {
  if (q < 2) return std::nullopt;
  int p = q;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  int k = 0;
  int t = q;
  while (t % p == 0) {
    t /= p;
    ++k;
  }
  if (t != 1) return std::nullopt;
  return std::make_pair(p, k);
}

void GaloisField::check_range(int a) const {
  if (a < 0 || a >= q_)
    throw std::out_of_range("GF(" + std::to_string(q_) + "): element " +
                            std::to_string(a) + " out of range");
}

int GaloisField::add_digits(int a, int b) const {
  if (p_ == 2) return a ^ b;
  int r = 0, scale = 1;
  while (a || b) {
    int d = (a % p_ + b % p_) % p_;
    r += d * scale;
    scale *= p_;
    a /= p_;
    b /= p_;
  }
  return r;
}

int GaloisField::mul_by_x(int a) const {
  // shift digits up by one, then reduce the overflowing top digit with the
  // reduction polynomial: x^k = -(c_0 + c_1 x + ... + c_{k-1} x^{k-1})
  std::int64_t shifted = static_cast<std::int64_t>(a) * p_;
  int top = static_cast<int>(shifted / q_);
  int rest = static_cast<int>(shifted % q_);
  if (top == 0) return rest;
  int r = rest;
  int scale = 1;
  for (int i = 0; i < k_; ++i) {
    int cur = (r / scale) % p_;
    int sub = (top * poly_[i]) % p_;
    int nd = (cur - sub % p_ + p_) % p_;
    r += (nd - cur) * scale;
    scale *= p_;
  }
  return r;
}

GaloisField::GaloisField(int p, int k) : p_(p), k_(k) {
  if (!is_prime(p))
    throw std::invalid_argument("GaloisField: p = " + std::to_string(p) +
                                " is not prime");
  if (k < 1) throw std::invalid_argument("GaloisField: k must be >= 1");
  std::int64_t q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxOrder)
      throw std::invalid_argument("GaloisField: order " + std::to_string(p) +
                                  "^" + std::to_string(k) + " exceeds " +
                                  std::to_string(kMaxOrder));
  }
  q_ = static_cast<int>(q);

  if (k == 1) {
    poly_ = {0, 1};
    gen_ = (q_ == 2) ? 1 : smallest_primitive_root(p_);
  } else {
    const PolyEntry* e = find_poly(p, k);
    if (!e)
      throw std::invalid_argument("GaloisField: unsupported (p, k) = (" +
                                  std::to_string(p) + ", " + std::to_string(k) +
                                  ")");
    poly_.assign(e->coeffs.begin(), e->coeffs.begin() + k + 1);
    gen_ = p_;  // the class of x, primitive by table construction
  }

  // Walk the generator's powers; this both fills exp/log and verifies the
  // multiplicative group is cyclic of order q-1 over this reduction.
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, -1);
  int acc = 1;
  for (int i = 0; i < q_ - 1; ++i) {
    if (acc == 0 || log_[acc] != -1)
      throw std::logic_error("GaloisField: reduction table broken for GF(" +
                             std::to_string(q_) + ")");
    exp_[i] = acc;
    log_[acc] = i;
    acc = (k == 1) ? static_cast<int>(static_cast<std::int64_t>(acc) * gen_ % p_)
                   : mul_by_x(acc);
  }
  if (acc != 1)
    throw std::logic_error("GaloisField: generator order mismatch in GF(" +
                           std::to_string(q_) + ")");

  inv_.assign(q_, 0);
  for (int a = 1; a < q_; ++a) inv_[a] = exp_[(q_ - 1 - log_[a]) % (q_ - 1)];

  if (q_ <= kFullTableLimit) {
    add_table_.assign(static_cast<std::size_t>(q_) * q_, 0);
    mul_table_.assign(static_cast<std::size_t>(q_) * q_, 0);
    for (int a = 0; a < q_; ++a)
      for (int b = 0; b < q_; ++b) {
        add_table_[static_cast<std::size_t>(a) * q_ + b] =
            static_cast<std::uint16_t>(add_digits(a, b));
        if (a != 0 && b != 0)
          mul_table_[static_cast<std::size_t>(a) * q_ + b] =
              static_cast<std::uint16_t>(
                  exp_[(log_[a] + log_[b]) % (q_ - 1)]);
      }
  }
}

int GaloisField::add(int a, int b) const {
  check_range(a);
  check_range(b);
  if (!add_table_.empty())
    return add_table_[static_cast<std::size_t>(a) * q_ + b];
  return add_digits(a, b);
}

int GaloisField::neg(int a) const {
  check_range(a);
  if (p_ == 2) return a;
  int r = 0, scale = 1, t = a;
  while (t) {
    r += ((p_ - t % p_) % p_) * scale;
    scale *= p_;
    t /= p_;
  }
  return r;
}

int GaloisField::sub(int a, int b) const { return add(a, neg(b)); }

int GaloisField::mul(int a, int b) const {
  check_range(a);
  check_range(b);
  if (a == 0 || b == 0) return 0;
  if (!mul_table_.empty())
    return mul_table_[static_cast<std::size_t>(a) * q_ + b];
  return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

int GaloisField::inv(int a) const {
  check_range(a);
  if (a == 0) throw std::domain_error("GaloisField: inverse of zero");
  return inv_[a];
}

int GaloisField::div(int a, int b) const {
  if (b == 0) throw std::domain_error("GaloisField: division by zero");
  return mul(a, inv(b));
}

int GaloisField::pow(int a, std::int64_t e) const {
  check_range(a);
  if (e < 0) throw std::invalid_argument("GaloisField: negative exponent");
  if (a == 0) return e == 0 ? 1 : 0;
  std::int64_t le = (static_cast<std::int64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
  return exp_[le];
}

}  // namespace mobius
