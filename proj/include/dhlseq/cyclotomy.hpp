#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dhlseq {

bool is_prime(std::uint64_t n);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

// Smallest positive primitive root mod p; throws when p is not prime.
std::uint64_t find_primitive_root(std::uint64_t p);

// Unique d in [1, p-1] with a*d = 1 (mod p); throws when a = 0 (mod p).
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);

// p = x^2 + 4y^2 with x > 0; only |y| is reported (the sign is not
// observable by anything downstream).
struct QuarticDecomposition {
  std::uint64_t x = 0;
  std::uint64_t y_abs = 0;
};
QuarticDecomposition decompose_x2_4y2(std::uint64_t p);

struct Admissibility {
  bool ok = false;
  std::string reason;  // failed conditions, "; "-joined; empty when ok
  explicit operator bool() const { return ok; }
};

// True iff p is prime, p = 4f+1 with f odd, and y = +-1 in p = x^2 + 4y^2
// (equivalently p - 4 is a perfect square).
Admissibility dhl_admissible(std::uint64_t p);

// Quartic cyclotomic classes D_i = { theta^{i+4j} : 0 <= j < f } of Z_p*.
class CyclotomicTable {
 public:
  static CyclotomicTable build(std::uint64_t p,
                               std::optional<std::uint64_t> theta_override = std::nullopt);

  std::uint64_t p() const { return p_; }
  std::uint64_t f() const { return f_; }
  std::uint64_t theta() const { return theta_; }
  const std::vector<std::uint64_t>& cyclotomic_class(int i) const;  // ascending
  int class_index(std::uint64_t residue) const;  // residue != 0 (mod p)

 private:
  CyclotomicTable() = default;

  std::uint64_t p_ = 0;
  std::uint64_t f_ = 0;
  std::uint64_t theta_ = 0;
  std::array<std::vector<std::uint64_t>, 4> classes_;
  std::vector<std::int8_t> index_;  // residue -> class, -1 at 0
};

inline CyclotomicTable build_table(std::uint64_t p,
                                   std::optional<std::uint64_t> theta_override = std::nullopt) {
  return CyclotomicTable::build(p, theta_override);
}

}  // namespace dhlseq
