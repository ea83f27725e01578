#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dhlseq/gf2poly.hpp"

using dhlseq::Gf2Poly;

namespace {

Gf2Poly random_poly(std::mt19937_64& rng, std::size_t max_degree) {
  std::uniform_int_distribution<std::size_t> len(0, max_degree + 1);
  const std::size_t n = len(rng);  // number of coefficients; 0 -> zero poly
  std::vector<std::uint8_t> bits(n);
  for (auto& b : bits) b = std::uint8_t(rng() & 1);
  return Gf2Poly::from_coeff_bits(bits);
}

// Quadratic schoolbook product over plain byte vectors.
Gf2Poly reference_mul(const Gf2Poly& a, const Gf2Poly& b) {
  if (a.is_zero() || b.is_zero()) return Gf2Poly::zero();
  const std::size_t da = *a.degree(), db = *b.degree();
  std::vector<std::uint8_t> out(da + db + 1, 0);
  for (std::size_t i = 0; i <= da; ++i)
    for (std::size_t j = 0; j <= db; ++j)
      if (a.coeff(i) && b.coeff(j)) out[i + j] ^= 1;
  return Gf2Poly::from_coeff_bits(out);
}

}  // namespace

TEST_CASE("string round trip and canonical form") {
  CHECK(Gf2Poly::from_string("10011").to_string() == "10011");
  CHECK(*Gf2Poly::from_string("10011").degree() == 4);
  CHECK(Gf2Poly::from_string("10011").weight() == 3);
  CHECK(Gf2Poly::from_string("0").is_zero());
  CHECK(Gf2Poly::from_string("000").is_zero());
  CHECK(Gf2Poly::zero().to_string() == "0");
  CHECK(!Gf2Poly::zero().degree().has_value());
  CHECK(Gf2Poly::from_string("100").to_string() == "1");  // trailing zeros dropped
  CHECK_THROWS_AS(Gf2Poly::from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(Gf2Poly::from_string("10a"), std::invalid_argument);
  CHECK(Gf2Poly::one().is_one());
  CHECK(*Gf2Poly::x().degree() == 1);
  CHECK(Gf2Poly::monomial(0) == Gf2Poly::one());
  CHECK(Gf2Poly::monomial(100).to_string() == std::string(100, '0') + "1");
}

TEST_CASE("poly_add") {
  const Gf2Poly one_x = Gf2Poly::from_string("11");     // 1+x
  const Gf2Poly x_x2 = Gf2Poly::from_string("011");     // x+x^2
  CHECK(poly_add(one_x, one_x).is_zero());
  CHECK(poly_add(one_x, x_x2) == Gf2Poly::from_string("101"));  // 1+x^2

  // S(x)+T(x) for p=29: supports D0 u D1 and D1 u D2 cancel on D1, leaving
  // the characteristic polynomial of D0 u D2.
  const std::vector<std::uint64_t> d0{1, 7, 16, 20, 23, 24, 25};
  const std::vector<std::uint64_t> d1{2, 3, 11, 14, 17, 19, 21};
  const std::vector<std::uint64_t> d2{4, 5, 6, 9, 13, 22, 28};
  auto cat = [](std::vector<std::uint64_t> a, const std::vector<std::uint64_t>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  const Gf2Poly s = Gf2Poly::from_support(cat(d0, d1));
  const Gf2Poly t = Gf2Poly::from_support(cat(d1, d2));
  CHECK(poly_add(s, t) == Gf2Poly::from_support(cat(d0, d2)));
}

TEST_CASE("poly_mul") {
  const Gf2Poly one_x = Gf2Poly::from_string("11");
  CHECK(poly_mul(one_x, one_x) == Gf2Poly::from_string("101"));  // (1+x)^2 = 1+x^2
  CHECK(poly_mul(one_x, Gf2Poly::zero()).is_zero());

  for (std::uint64_t p : {3, 5, 13, 29, 173})
    CHECK(poly_mul(dhlseq::x_pow_n_plus_1(4), dhlseq::quarter_cyclotomic_quotient(p)) ==
          dhlseq::x_pow_n_plus_1(4 * p));

  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    const Gf2Poly a = random_poly(rng, 256);
    const Gf2Poly b = random_poly(rng, 256);
    CHECK(a * b == reference_mul(a, b));
    if (!a.is_zero() && !b.is_zero())
      CHECK(*(a * b).degree() == *a.degree() + *b.degree());
  }
}

TEST_CASE("poly_divrem") {
  const auto [q1, r1] = poly_divrem(Gf2Poly::from_string("101"), Gf2Poly::from_string("11"));
  CHECK(q1 == Gf2Poly::from_string("11"));
  CHECK(r1.is_zero());

  const auto [q2, r2] = poly_divrem(Gf2Poly::monomial(3), Gf2Poly::from_string("11"));
  CHECK(q2 == Gf2Poly::from_string("111"));
  CHECK(r2.is_one());

  CHECK_THROWS_AS(poly_divrem(Gf2Poly::one(), Gf2Poly::zero()), std::invalid_argument);

  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 300; ++trial) {
    const Gf2Poly a = random_poly(rng, 200);
    Gf2Poly b = random_poly(rng, 40);
    if (b.is_zero()) b = Gf2Poly::one();
    const auto [q, r] = poly_divrem(a, b);
    CHECK(q * b + r == a);
    if (!r.is_zero()) CHECK(*r.degree() < *b.degree());
    if (!a.is_zero()) {
      const auto [qs, rs] = poly_divrem(a, a);
      CHECK(qs.is_one());
      CHECK(rs.is_zero());
    }
  }
}

TEST_CASE("poly_gcd") {
  const Gf2Poly x4_1 = Gf2Poly::from_string("10001");
  CHECK(poly_gcd(x4_1, x4_1) == x4_1);
  CHECK(poly_gcd(Gf2Poly::from_string("101"), Gf2Poly::from_string("11")) ==
        Gf2Poly::from_string("11"));
  CHECK(poly_gcd(x4_1, Gf2Poly::zero()) == x4_1);
  CHECK(poly_gcd(Gf2Poly::zero(), x4_1) == x4_1);
  CHECK_THROWS_AS(poly_gcd(Gf2Poly::zero(), Gf2Poly::zero()), std::invalid_argument);

  // Cross-check against brute-force common-divisor enumeration.
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 25; ++trial) {
    Gf2Poly a = random_poly(rng, 12);
    Gf2Poly b = random_poly(rng, 12);
    if (a.is_zero() && b.is_zero()) a = Gf2Poly::one();
    const Gf2Poly g = poly_gcd(a, b);
    if (!a.is_zero()) CHECK(poly_divrem(a, g).second.is_zero());
    if (!b.is_zero()) CHECK(poly_divrem(b, g).second.is_zero());

    std::size_t best = 0;
    for (std::uint64_t mask = 1; mask < (1u << 13); ++mask) {
      const Gf2Poly d = Gf2Poly::from_mask(mask);
      const bool divides_a = a.is_zero() || poly_divrem(a, d).second.is_zero();
      const bool divides_b = b.is_zero() || poly_divrem(b, d).second.is_zero();
      if (divides_a && divides_b) best = std::max(best, *d.degree());
    }
    CHECK(*g.degree() == best);
  }
}

TEST_CASE("x_pow_n_plus_1") {
  CHECK(dhlseq::x_pow_n_plus_1(1) == Gf2Poly::from_string("11"));
  CHECK(dhlseq::x_pow_n_plus_1(4) == Gf2Poly::from_string("10001"));
  CHECK(*dhlseq::x_pow_n_plus_1(116).degree() == 116);
  CHECK(dhlseq::x_pow_n_plus_1(116).weight() == 2);
  CHECK_THROWS_AS(dhlseq::x_pow_n_plus_1(0), std::invalid_argument);
}

TEST_CASE("quarter_cyclotomic_quotient") {
  CHECK(dhlseq::quarter_cyclotomic_quotient(3) == Gf2Poly::from_string("100010001"));
  const Gf2Poly q29 = dhlseq::quarter_cyclotomic_quotient(29);
  CHECK(*q29.degree() == 112);
  CHECK(q29.weight() == 29);
  CHECK(poly_gcd(q29, Gf2Poly::from_string("10001")).is_one());
  CHECK_THROWS_AS(dhlseq::quarter_cyclotomic_quotient(2), std::invalid_argument);
}
