#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dhlseq {

// Polynomial over GF(2). Coefficient of x^i lives at bit i of a little-endian
// word vector; the representation is kept canonical (no trailing zero words),
// so equality is plain vector comparison and the zero polynomial is the empty
// vector. degree() is disengaged for the zero polynomial instead of being a
// -1 that could silently underflow in degree arithmetic.
class Gf2Poly {
 public:
  Gf2Poly() = default;

  static Gf2Poly zero() { return {}; }
  static Gf2Poly one();
  static Gf2Poly x();
  static Gf2Poly monomial(std::size_t k);  // x^k
  // Low 64 coefficients from an integer mask (bit i -> coefficient of x^i).
  static Gf2Poly from_mask(std::uint64_t mask);
  static Gf2Poly from_coeff_bits(const std::vector<std::uint8_t>& bits);
  static Gf2Poly from_support(const std::vector<std::uint64_t>& exponents);
  // Serialized form: ASCII '0'/'1', x^0 coefficient first ("10011" = 1+x^3+x^4).
  static Gf2Poly from_string(std::string_view s);

  std::optional<std::size_t> degree() const;
  bool is_zero() const { return words_.empty(); }
  bool is_one() const { return words_.size() == 1 && words_[0] == 1; }
  bool coeff(std::size_t i) const;
  std::size_t weight() const;  // number of nonzero coefficients

  // Inverse of from_string; the zero polynomial renders as "0".
  std::string to_string() const;

  Gf2Poly shifted_left(std::size_t k) const;  // multiply by x^k

  Gf2Poly& operator+=(const Gf2Poly& rhs);
  friend Gf2Poly operator+(Gf2Poly a, const Gf2Poly& b) {
    a += b;
    return a;
  }
  friend Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b);
  friend bool operator==(const Gf2Poly&, const Gf2Poly&) = default;

 private:
  static Gf2Poly from_words(std::vector<std::uint64_t> w);
  void trim();

  friend std::pair<Gf2Poly, Gf2Poly> poly_divrem(const Gf2Poly& a, const Gf2Poly& b);

  std::vector<std::uint64_t> words_;
};

inline Gf2Poly poly_add(const Gf2Poly& a, const Gf2Poly& b) { return a + b; }
inline Gf2Poly poly_mul(const Gf2Poly& a, const Gf2Poly& b) { return a * b; }

// a = q*b + r with deg r < deg b; throws std::invalid_argument when b = 0.
std::pair<Gf2Poly, Gf2Poly> poly_divrem(const Gf2Poly& a, const Gf2Poly& b);
Gf2Poly poly_mod(const Gf2Poly& a, const Gf2Poly& b);

// gcd(a, 0) = a (monic is automatic over GF(2)); gcd(0, 0) throws.
Gf2Poly poly_gcd(Gf2Poly a, Gf2Poly b);

// x^n + 1, n >= 1 (over GF(2) this is x^n - 1).
Gf2Poly x_pow_n_plus_1(std::size_t n);

// (x^{4p} - 1) / (x^4 - 1) = sum_{i=0}^{p-1} x^{4i}, p >= 3.
Gf2Poly quarter_cyclotomic_quotient(std::uint64_t p);

}  // namespace dhlseq
