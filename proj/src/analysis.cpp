#include "dhlseq/analysis.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dhlseq {

std::string_view to_string(Optimality v) {
  switch (v) {
    case Optimality::perfect: return "perfect";
    case Optimality::ideal_two_level: return "ideal-two-level";
    case Optimality::optimal_value: return "optimal-value";
    case Optimality::optimal_magnitude: return "optimal-magnitude";
    case Optimality::type_b_optimal: return "type-B-optimal";
    case Optimality::type_c_optimal: return "type-C-optimal";
    case Optimality::not_optimal: return "not-optimal";
  }
  return "not-optimal";
}

std::int64_t autocorrelation(const BinarySequence& seq, std::int64_t tau) {
  const std::size_t n = seq.period();
  std::size_t t = std::size_t(((tau % std::int64_t(n)) + std::int64_t(n)) % std::int64_t(n));
  std::int64_t disagree = 0;
  for (std::size_t i = 0; i < n; ++i) {
    disagree += seq[i] ^ seq[t];
    if (++t == n) t = 0;
  }
  return std::int64_t(n) - 2 * disagree;
}

AutocorrProfile autocorr_profile(const BinarySequence& seq) {
  AutocorrProfile prof;
  prof.period = seq.period();
  prof.values.reserve(prof.period);
  for (std::size_t tau = 0; tau < prof.period; ++tau)
    prof.values.push_back(autocorrelation(seq, std::int64_t(tau)));
  return prof;
}

OptimalityVerdict classify(const AutocorrProfile& profile) {
  OptimalityVerdict v;
  v.n_mod_4 = int(profile.period % 4);
  v.offpeak_value_set.assign(profile.values.begin() + 1, profile.values.end());
  std::sort(v.offpeak_value_set.begin(), v.offpeak_value_set.end());
  v.offpeak_value_set.erase(
      std::unique(v.offpeak_value_set.begin(), v.offpeak_value_set.end()),
      v.offpeak_value_set.end());

  if (v.offpeak_value_set.empty()) {
    // Period 1: no off-peak lags exist, so every verdict would hold vacuously.
    v.degenerate = true;
    v.verdict = Optimality::not_optimal;
    return v;
  }

  const auto within = [&](std::initializer_list<std::int64_t> allowed) {
    for (auto r : v.offpeak_value_set)
      if (std::find(allowed.begin(), allowed.end(), r) == allowed.end()) return false;
    return true;
  };

  v.verdict = Optimality::not_optimal;
  switch (v.n_mod_4) {
    case 0:
      if (within({0}))
        v.verdict = Optimality::perfect;
      else if (within({0, -4}))
        v.verdict = Optimality::optimal_value;
      else if (within({0, 4, -4}))
        v.verdict = Optimality::optimal_magnitude;
      break;
    case 1:
      if (within({1, -3})) v.verdict = Optimality::type_b_optimal;
      break;
    case 2:
      if (within({2, -2})) v.verdict = Optimality::type_c_optimal;
      break;
    case 3:
      if (within({-1})) v.verdict = Optimality::ideal_two_level;
      break;
  }
  return v;
}

Gf2Poly sequence_polynomial(const BinarySequence& seq) {
  return Gf2Poly::from_coeff_bits(seq.bits());
}

namespace {

// gcd(x^N - 1, P_s); the all-zero sequence yields the full x^N - 1.
Gf2Poly gcd_with_circle(const BinarySequence& seq) {
  const Gf2Poly xn1 = x_pow_n_plus_1(seq.period());
  const Gf2Poly ps = sequence_polynomial(seq);
  return ps.is_zero() ? xn1 : poly_gcd(xn1, ps);
}

}  // namespace

Gf2Poly minimal_polynomial(const BinarySequence& seq) {
  return poly_divrem(x_pow_n_plus_1(seq.period()), gcd_with_circle(seq)).first;
}

std::size_t linear_complexity_gcd(const BinarySequence& seq) {
  return seq.period() - *gcd_with_circle(seq).degree();
}

std::pair<std::size_t, Gf2Poly> berlekamp_massey(const BinarySequence& seq) {
  const std::size_t n2 = 2 * seq.period();
  const auto bit = [&](std::size_t i) { return seq[i % seq.period()]; };

  Gf2Poly c = Gf2Poly::one();
  Gf2Poly b = Gf2Poly::one();
  std::size_t L = 0;
  std::size_t m = 1;
  for (std::size_t i = 0; i < n2; ++i) {
    int d = bit(i);
    for (std::size_t j = 1; j <= L; ++j) d ^= c.coeff(j) & bit(i - j);
    if (d == 0) {
      ++m;
    } else if (2 * L <= i) {
      Gf2Poly t = c;
      c += b.shifted_left(m);
      L = i + 1 - L;
      b = std::move(t);
      m = 1;
    } else {
      c += b.shifted_left(m);
      ++m;
    }
  }
  return {L, c};
}

LinCompReport lincomp_report(const BinarySequence& seq) {
  LinCompReport rep;
  rep.gcd_poly = gcd_with_circle(seq);
  rep.minimal_poly = poly_divrem(x_pow_n_plus_1(seq.period()), rep.gcd_poly).first;
  rep.lc_gcd = seq.period() - *rep.gcd_poly.degree();
  auto [len, conn] = berlekamp_massey(seq);
  rep.lc_bm = len;
  rep.bm_connection = std::move(conn);
  return rep;
}

EquivalenceVerdict equivalence_check(const BinarySequence& s, const BinarySequence& v) {
  const std::size_t n = s.period();
  if (v.period() != n) throw std::invalid_argument("equivalence_check needs equal periods");

  for (std::uint64_t r = 1; r < std::uint64_t(n) || r == 1; ++r) {
    if (std::gcd(r, std::uint64_t(n)) != 1) continue;
    const BinarySequence w = decimate(s, r);
    for (std::uint64_t tau = 0; tau < n; ++tau) {
      bool same = true;
      bool flipped = true;
      for (std::size_t t = 0; t < n && (same || flipped); ++t) {
        if (w[(t + tau) % n] == v[t])
          flipped = false;
        else
          same = false;
      }
      if (same) return {true, EquivalenceWitness{r, tau, 0}};
      if (flipped) return {true, EquivalenceWitness{r, tau, 1}};
    }
    if (n == 1) break;
  }
  return {false, std::nullopt};
}

std::string profile_to_csv(const AutocorrProfile& profile) {
  std::string out = "tau,R\n";
  for (std::size_t tau = 0; tau < profile.values.size(); ++tau) {
    out += std::to_string(tau);
    out += ',';
    out += std::to_string(profile.values[tau]);
    out += '\n';
  }
  return out;
}

}  // namespace dhlseq
