#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dhlseq/analysis.hpp"
#include "dhlseq/cyclotomy.hpp"
#include "dhlseq/gf2poly.hpp"
#include "dhlseq/sequences.hpp"

namespace dhlseq {

// All primes p <= bound with dhl_admissible(p), ascending.
std::vector<std::uint64_t> enumerate_admissible_primes(std::uint64_t bound);

// The (epsilon, g(x)) table: 0000 -> (4, x^4+1), 1111 -> (3, x^3+x^2+x+1),
// 1010 and 0101 -> (2, x^2+1). LC(u) = 4p - epsilon.
std::pair<int, Gf2Poly> expected_epsilon_and_g(const std::array<int, 4>& b);

struct CaseRecord {
  std::uint64_t p = 0;
  TupleId tuple_id = TupleId::T1;
  std::array<int, 4> b{0, 0, 0, 0};
  std::uint64_t theta = 0;
  OptimalityVerdict autocorr_verdict;
  std::size_t lc_expected = 0;
  std::size_t lc_actual = 0;
  int epsilon_expected = 0;
  Gf2Poly gcd_poly;
  Gf2Poly gcd_poly_expected;
  bool bm_agrees = false;
  bool pass = false;
};

CaseRecord verify_case(std::uint64_t p, TupleId tuple_id, const std::array<int, 4>& b,
                       std::optional<std::uint64_t> theta_override = std::nullopt);

// Field checks for Lemma 4 / Lemma 7. The field route runs only when
// m = ord_2(p) fits under the cap; the polynomial route of Lemma 7
// (gcd(P_u, (x^{4p}-1)/(x^4-1)) = 1 for b = 0) has no cap.
struct LemmaChecks {
  std::uint64_t p = 0;
  std::uint64_t m = 0;
  std::string modulus;       // field modulus bitstring; empty when skipped
  bool field_built = false;  // m <= cap
  bool lemma4_pass = false;
  bool lemma7_field_pass = false;
  bool lemma7_poly_pass = false;
  bool pass = false;  // poly route, plus the field routes whenever they ran
};

LemmaChecks check_lemmas(std::uint64_t p, std::uint64_t field_cap = 64);
bool verify_lemma4(std::uint64_t p, std::uint64_t field_cap = 64);
bool verify_lemma7(std::uint64_t p, std::uint64_t field_cap = 64);

struct EquivalenceMatrixRecord {
  std::uint64_t p = 0;
  TupleId tuple_id = TupleId::T1;
  // Indexed by the fixed b order 0000, 1111, 1010, 0101.
  std::array<std::array<bool, 4>, 4> matrix{};
  bool matches_expected = false;  // 2+2 blocks: {0000,1111} and {1010,0101}
};

EquivalenceMatrixRecord equivalence_matrix(std::uint64_t p, TupleId tuple_id);

struct VerifyOptions {
  std::uint64_t field_cap = 64;
  // Equivalence search is Theta(phi(4p) * (4p)^2) per inequivalent pair;
  // matrices are only built for primes up to this bound.
  std::uint64_t equiv_max_p = 29;
};

struct VerificationReport {
  std::uint64_t bound = 0;
  std::vector<CaseRecord> cases;
  std::vector<LemmaChecks> lemma_checks;
  std::vector<EquivalenceMatrixRecord> equivalence;
  std::size_t n_pass = 0;  // over cases
  std::size_t n_fail = 0;
  bool all_pass = true;  // cases, lemma checks and equivalence matrices
};

// verify_case over every admissible p <= bound x {T1,E1..E6} x the 4 valid b,
// plus lemma checks per prime and equivalence matrices for small p.
// Deterministic ordering; individual failures are recorded, never thrown.
VerificationReport run_all(std::uint64_t bound, const VerifyOptions& options = {});

std::string report_to_json(const VerificationReport& report);  // byte-stable
std::string report_to_text(const VerificationReport& report);

}  // namespace dhlseq
