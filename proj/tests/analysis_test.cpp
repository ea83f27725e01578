#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "dhlseq/analysis.hpp"
#include "golden.hpp"

using namespace dhlseq;

namespace {

BinarySequence random_seq(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::uint8_t> bits(n);
  for (auto& b : bits) b = std::uint8_t(rng() & 1);
  return BinarySequence(std::move(bits));
}

// s satisfies the length-L recurrence with connection polynomial c:
// s(i) = sum_{j=1..L} c_j s(i-j) for all i >= L over two periods.
bool satisfies_recurrence(const BinarySequence& s, std::size_t L, const Gf2Poly& c) {
  if (!c.coeff(0)) return false;
  const std::size_t n = s.period();
  for (std::size_t i = L; i < 2 * n; ++i) {
    int d = s[i % n];
    for (std::size_t j = 1; j <= L; ++j) d ^= c.coeff(j) & s[(i - j) % n];
    if (d != 0) return false;
  }
  return true;
}

BinarySequence apply_witness(const BinarySequence& s, const EquivalenceWitness& w) {
  return add_constant(left_shift(decimate(s, w.r), w.tau), w.c);
}

}  // namespace

TEST_CASE("autocorrelation basics") {
  const auto s = BinarySequence::from_string("0001");
  CHECK(autocorrelation(s, 0) == 4);
  CHECK(autocorrelation(s, 1) == 0);
  CHECK(autocorrelation(s, 2) == 0);
  CHECK(autocorrelation(s, 3) == 0);
  CHECK(autocorrelation(s, -1) == autocorrelation(s, 3));
  CHECK(autocorrelation(s, 4) == 4);
  CHECK(autocorrelation(s, 7) == autocorrelation(s, 3));

  const auto prof = autocorr_profile(s);
  CHECK(prof.period == 4);
  CHECK(prof.values == std::vector<std::int64_t>{4, 0, 0, 0});

  // m-sequence of period 7: two-level profile.
  const auto m = BinarySequence::from_string("0010111");
  for (std::int64_t tau = 1; tau < 7; ++tau) CHECK(autocorrelation(m, tau) == -1);
}

TEST_CASE("autocorrelation congruence and invariances") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 40;
    const auto s = random_seq(rng, n);
    const auto prof = autocorr_profile(s);
    for (auto v : prof.values) CHECK(((v % 4) + 4) % 4 == std::int64_t(n % 4));

    CHECK(autocorr_profile(left_shift(s, rng() % n)).values == prof.values);
    CHECK(autocorr_profile(complement(s)).values == prof.values);

    std::uint64_t r = 1 + rng() % n;
    while (std::gcd(r, std::uint64_t(n)) != 1) ++r;
    auto dec = autocorr_profile(decimate(s, r)).values;
    auto base = prof.values;
    std::sort(dec.begin(), dec.end());
    std::sort(base.begin(), base.end());
    CHECK(dec == base);  // decimation permutes the lags
  }
}

TEST_CASE("classify") {
  CHECK(classify(autocorr_profile(BinarySequence::from_string("0001"))).verdict ==
        Optimality::perfect);
  CHECK(classify(autocorr_profile(BinarySequence::from_string("0010111"))).verdict ==
        Optimality::ideal_two_level);
  CHECK(classify(autocorr_profile(BinarySequence::from_string("01100"))).verdict ==
        Optimality::type_b_optimal);  // DHL-style p=5 support {1,2}
  CHECK(classify(autocorr_profile(BinarySequence::from_string("01"))).verdict ==
        Optimality::type_c_optimal);

  const auto u = classify(autocorr_profile(BinarySequence::from_string(golden::kU0000)));
  CHECK(u.verdict == Optimality::optimal_magnitude);
  CHECK(u.n_mod_4 == 0);
  CHECK(u.offpeak_value_set == std::vector<std::int64_t>{-4, 0, 4});

  // Synthetic profiles exercise each branch without a carrier sequence.
  CHECK(classify({8, {8, 0, -4, 0, -4, 0, -4, 0}}).verdict == Optimality::optimal_value);
  CHECK(classify({8, {8, 4, -4, 0, -4, 0, -4, 0}}).verdict == Optimality::optimal_magnitude);
  CHECK(classify({8, {8, 8, 0, 0, 0, 0, 0, 0}}).verdict == Optimality::not_optimal);
  CHECK(classify({5, {5, 1, -3, 1, -3}}).verdict == Optimality::type_b_optimal);
  CHECK(classify({5, {5, 5, 1, 1, -3}}).verdict == Optimality::not_optimal);
  CHECK(classify({6, {6, 2, -2, 2, -2, 2}}).verdict == Optimality::type_c_optimal);
  CHECK(classify({6, {6, 2, -2, 2, -2, 6}}).verdict == Optimality::not_optimal);
  CHECK(classify({7, {7, -1, -1, -1, 3, -1, -1}}).verdict == Optimality::not_optimal);

  const auto deg = classify(autocorr_profile(BinarySequence::from_string("1")));
  CHECK(deg.degenerate);
  CHECK(deg.offpeak_value_set.empty());
}

TEST_CASE("sequence_polynomial") {
  CHECK(sequence_polynomial(BinarySequence::from_string("10011")).to_string() == "10011");
  CHECK(sequence_polynomial(BinarySequence::from_string("000")).is_zero());
  CHECK(sequence_polynomial(BinarySequence::from_string("0001")) == Gf2Poly::monomial(3));
}

TEST_CASE("linear complexity via gcd") {
  CHECK(linear_complexity_gcd(BinarySequence::from_string("0001")) == 4);
  CHECK(minimal_polynomial(BinarySequence::from_string("0001")) == x_pow_n_plus_1(4));
  CHECK(linear_complexity_gcd(BinarySequence::from_string("0000")) == 0);
  CHECK(minimal_polynomial(BinarySequence::from_string("0000")).is_one());
  CHECK(linear_complexity_gcd(BinarySequence::from_string("1111")) == 1);
  CHECK(minimal_polynomial(BinarySequence::from_string("1111")).to_string() == "11");
  CHECK(linear_complexity_gcd(BinarySequence::from_string("0010111")) == 3);

  CHECK(linear_complexity_gcd(BinarySequence::from_string(golden::kU0000)) == 112);
  CHECK(linear_complexity_gcd(BinarySequence::from_string(golden::kU1111)) == 113);
  CHECK(linear_complexity_gcd(BinarySequence::from_string(golden::kU1010)) == 114);
  CHECK(linear_complexity_gcd(BinarySequence::from_string(golden::kU0101)) == 114);
  CHECK(linear_complexity_gcd(BinarySequence::from_string(golden::kUE2)) == 114);
  CHECK(minimal_polynomial(BinarySequence::from_string(golden::kU0000)) ==
        quarter_cyclotomic_quotient(29));
}

TEST_CASE("berlekamp_massey") {
  const auto [l0, c0] = berlekamp_massey(BinarySequence::from_string("0000"));
  CHECK(l0 == 0);
  CHECK(c0.is_one());

  for (const char* str : {"0001", "1111", "0010111", "01100", golden::kU0000, golden::kU1111,
                          golden::kU1010, golden::kUE2, golden::kU5}) {
    const auto s = BinarySequence::from_string(str);
    const auto [L, c] = berlekamp_massey(s);
    CHECK(L == linear_complexity_gcd(s));
    CHECK(satisfies_recurrence(s, L, c));
  }

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 120; ++trial) {
    const auto s = random_seq(rng, 1 + rng() % 80);
    const auto [L, c] = berlekamp_massey(s);
    CHECK(L == linear_complexity_gcd(s));
    CHECK(satisfies_recurrence(s, L, c));
  }
}

TEST_CASE("lincomp_report") {
  for (const char* str : {"0001", golden::kU0000, golden::kU1010}) {
    const auto s = BinarySequence::from_string(str);
    const auto rep = lincomp_report(s);
    CHECK(rep.agree());
    CHECK(rep.lc_gcd == linear_complexity_gcd(s));
    CHECK(rep.minimal_poly == minimal_polynomial(s));
    CHECK(rep.minimal_poly * rep.gcd_poly == x_pow_n_plus_1(s.period()));
    CHECK(satisfies_recurrence(s, rep.lc_bm, rep.bm_connection));
  }
  CHECK(lincomp_report(BinarySequence::from_string(golden::kU0000)).gcd_poly.to_string() ==
        "10001");
  CHECK(lincomp_report(BinarySequence::from_string(golden::kU1111)).gcd_poly.to_string() ==
        "1111");
  CHECK(lincomp_report(BinarySequence::from_string(golden::kU1010)).gcd_poly.to_string() ==
        "101");
  CHECK(lincomp_report(BinarySequence::from_string(golden::kU0101)).gcd_poly.to_string() ==
        "101");
}

TEST_CASE("equivalence_check") {
  const auto s = BinarySequence::from_string(golden::kS1);
  const auto self = equivalence_check(s, s);
  CHECK(self.equivalent);
  CHECK(self.witness->r == 1);
  CHECK(self.witness->tau == 0);
  CHECK(self.witness->c == 0);

  for (const auto& v : {left_shift(s, 5), complement(s), decimate(s, 3),
                        complement(left_shift(decimate(s, 9), 17))}) {
    const auto verdict = equivalence_check(s, v);
    REQUIRE(verdict.equivalent);
    CHECK(apply_witness(s, *verdict.witness) == v);
  }

  CHECK(!equivalence_check(BinarySequence::from_string("0001"),
                           BinarySequence::from_string("0011"))
             .equivalent);
  CHECK_THROWS_AS(equivalence_check(s, BinarySequence::from_string("01")),
                  std::invalid_argument);

  // Period 1: complement is the only move.
  const auto one = equivalence_check(BinarySequence::from_string("0"),
                                     BinarySequence::from_string("1"));
  CHECK(one.equivalent);
  CHECK(one.witness->c == 1);
}

TEST_CASE("equivalence of small constructions") {
  // At p=5 every pair of tuples gives equivalent sequences (the decimation
  // group is rich enough), while the two b blocks stay inequivalent.
  const auto base = construct({5, TupleId::T1, {0, 0, 0, 0}, {}});
  for (auto t : all_tuples()) {
    const auto verdict = equivalence_check(base, construct({5, t, {0, 0, 0, 0}, {}}));
    REQUIRE(verdict.equivalent);
    CHECK(apply_witness(base, *verdict.witness) == construct({5, t, {0, 0, 0, 0}, {}}));
  }
  CHECK(equivalence_check(base, construct({5, TupleId::T1, {1, 1, 1, 1}, {}})).equivalent);
  CHECK(!equivalence_check(base, construct({5, TupleId::T1, {1, 0, 1, 0}, {}})).equivalent);
  CHECK(!equivalence_check(base, construct({5, TupleId::T1, {0, 1, 0, 1}, {}})).equivalent);
}

TEST_CASE("profile_to_csv") {
  CHECK(profile_to_csv(autocorr_profile(BinarySequence::from_string("0001"))) ==
        "tau,R\n0,4\n1,0\n2,0\n3,0\n");
  CHECK(profile_to_csv({2, {2, -2}}) == "tau,R\n0,2\n1,-2\n");
}
