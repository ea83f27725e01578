#include "dhlseq/cyclotomy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace dhlseq {

namespace {

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_primitive_root(std::uint64_t g, std::uint64_t p,
                       const std::vector<std::uint64_t>& divisors_of_p_minus_1) {
  if (g % p == 0) return false;
  for (auto q : divisors_of_p_minus_1)
    if (pow_mod(g, (p - 1) / q, p) == 1) return false;
  return true;
}

std::uint64_t isqrt_u64(std::uint64_t n) {
  auto r = std::uint64_t(std::sqrt(double(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d * d <= n; d += 6)
    if (n % d == 0 || n % (d + 2) == 0) return false;
  return true;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 0) throw std::invalid_argument("pow_mod: zero modulus");
  std::uint64_t r = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) r = std::uint64_t((__uint128_t(r) * base) % mod);
    base = std::uint64_t((__uint128_t(base) * base) % mod);
    exp >>= 1;
  }
  return r;
}

std::uint64_t find_primitive_root(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("find_primitive_root: p is not prime");
  if (p == 2) return 1;
  const auto divisors = prime_divisors(p - 1);
  for (std::uint64_t g = 2; g < p; ++g)
    if (is_primitive_root(g, p, divisors)) return g;
  throw std::logic_error("no primitive root found");  // unreachable for prime p
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  if (p < 2) throw std::invalid_argument("mod_inverse: modulus must be >= 2");
  a %= p;
  if (a == 0) throw std::invalid_argument("mod_inverse: a = 0 (mod p)");
  // Extended Euclid on (a, p).
  std::int64_t t = 1, new_t = 0;
  std::int64_t r = std::int64_t(a), new_r = std::int64_t(p);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw std::invalid_argument("mod_inverse: a is not invertible mod p");
  return std::uint64_t(t < 0 ? t + std::int64_t(p) : t);
}

QuarticDecomposition decompose_x2_4y2(std::uint64_t p) {
  if (!is_prime(p) || p % 4 != 1)
    throw std::invalid_argument("decompose_x2_4y2: p must be a prime = 1 (mod 4)");
  for (std::uint64_t y = 1; 4 * y * y < p; ++y) {
    const std::uint64_t rest = p - 4 * y * y;
    const std::uint64_t x = isqrt_u64(rest);
    if (x * x == rest) return {x, y};
  }
  throw std::logic_error("decompose_x2_4y2: no representation found");  // unreachable
}

Admissibility dhl_admissible(std::uint64_t p) {
  if (!is_prime(p)) return {false, "p is not prime"};
  if (p % 4 != 1) return {false, "p != 1 (mod 4)"};
  std::string reason;
  if (((p - 1) / 4) % 2 == 0) reason = "f even";
  if (decompose_x2_4y2(p).y_abs != 1) {
    if (!reason.empty()) reason += "; ";
    reason += "y=±1 fails";
  }
  if (!reason.empty()) return {false, reason};
  return {true, ""};
}

CyclotomicTable CyclotomicTable::build(std::uint64_t p,
                                       std::optional<std::uint64_t> theta_override) {
  if (!is_prime(p) || p % 4 != 1)
    throw std::invalid_argument("cyclotomic classes of order 4 need a prime p = 1 (mod 4)");

  std::uint64_t theta;
  if (theta_override) {
    theta = *theta_override % p;
    if (!is_primitive_root(theta, p, prime_divisors(p - 1)))
      throw std::invalid_argument("theta override is not a primitive root mod p");
  } else {
    theta = find_primitive_root(p);
  }

  CyclotomicTable t;
  t.p_ = p;
  t.f_ = (p - 1) / 4;
  t.theta_ = theta;
  t.index_.assign(p, -1);
  std::uint64_t power = 1;
  for (std::uint64_t k = 0; k < p - 1; ++k) {
    t.classes_[k % 4].push_back(power);
    t.index_[power] = std::int8_t(k % 4);
    power = std::uint64_t((__uint128_t(power) * theta) % p);
  }
  for (auto& cls : t.classes_) std::sort(cls.begin(), cls.end());
  return t;
}

const std::vector<std::uint64_t>& CyclotomicTable::cyclotomic_class(int i) const {
  if (i < 0 || i > 3) throw std::invalid_argument("class index must be 0..3");
  return classes_[std::size_t(i)];
}

int CyclotomicTable::class_index(std::uint64_t residue) const {
  residue %= p_;
  if (residue == 0) throw std::invalid_argument("0 belongs to no cyclotomic class");
  return index_[residue];
}

}  // namespace dhlseq
