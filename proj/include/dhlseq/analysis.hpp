#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dhlseq/gf2poly.hpp"
#include "dhlseq/sequences.hpp"

namespace dhlseq {

struct AutocorrProfile {
  std::size_t period = 0;
  std::vector<std::int64_t> values;  // R(tau) for tau = 0..N-1
};

enum class Optimality {
  perfect,
  ideal_two_level,
  optimal_value,
  optimal_magnitude,
  type_b_optimal,
  type_c_optimal,
  not_optimal,
};
std::string_view to_string(Optimality v);

struct OptimalityVerdict {
  int n_mod_4 = 0;
  Optimality verdict = Optimality::not_optimal;
  std::vector<std::int64_t> offpeak_value_set;  // distinct off-peak values, ascending
  bool degenerate = false;                      // N = 1: there are no off-peak lags
};

// R(tau) = sum_i (-1)^{s(i)+s(i+tau)} = N - 2 * #disagreements.
std::int64_t autocorrelation(const BinarySequence& seq, std::int64_t tau);
AutocorrProfile autocorr_profile(const BinarySequence& seq);
OptimalityVerdict classify(const AutocorrProfile& profile);

// P_s(x) = sum_i s(i) x^i.
Gf2Poly sequence_polynomial(const BinarySequence& seq);

// M_s(x) = (x^N - 1) / gcd(x^N - 1, P_s(x));  LC = N - deg gcd.
// The all-zero sequence has M = 1 and LC = 0.
Gf2Poly minimal_polynomial(const BinarySequence& seq);
std::size_t linear_complexity_gcd(const BinarySequence& seq);

// Shortest LFSR (length, connection polynomial with C(0)=1), run over two
// periods of the bit stream so that periodic sequences always converge.
std::pair<std::size_t, Gf2Poly> berlekamp_massey(const BinarySequence& seq);

struct LinCompReport {
  std::size_t lc_gcd = 0;
  std::size_t lc_bm = 0;
  Gf2Poly minimal_poly;
  Gf2Poly bm_connection;
  Gf2Poly gcd_poly;
  bool agree() const { return lc_gcd == lc_bm; }
};
LinCompReport lincomp_report(const BinarySequence& seq);

struct EquivalenceWitness {
  std::uint64_t r = 1;   // decimation
  std::uint64_t tau = 0; // left shift
  int c = 0;             // complement flag
};

struct EquivalenceVerdict {
  bool equivalent = false;
  std::optional<EquivalenceWitness> witness;
  explicit operator bool() const { return equivalent; }
};

// Exhaustive search in order r (ascending, coprime to N), then tau, then c,
// for v = L^tau(decimate(s, r)) + c; first witness wins.
EquivalenceVerdict equivalence_check(const BinarySequence& s, const BinarySequence& v);

// CSV with header "tau,R" and one row per lag.
std::string profile_to_csv(const AutocorrProfile& profile);

}  // namespace dhlseq
