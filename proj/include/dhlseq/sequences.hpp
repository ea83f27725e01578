#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dhlseq/cyclotomy.hpp"
#include "dhlseq/gf2poly.hpp"

namespace dhlseq {

// One period of a binary sequence: bits[t] in {0,1} for t = 0..N-1.
class BinarySequence {
 public:
  explicit BinarySequence(std::vector<std::uint8_t> bits);
  static BinarySequence from_support(std::size_t period,
                                     const std::vector<std::uint64_t>& support);
  static BinarySequence from_string(std::string_view s);  // '0'/'1' characters

  std::size_t period() const { return bits_.size(); }
  std::uint8_t operator[](std::size_t t) const { return bits_[t]; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }
  std::vector<std::uint64_t> support() const;
  std::string to_string() const;

  friend bool operator==(const BinarySequence&, const BinarySequence&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

// DHL sequence variants by support: s1 = D0 u D1, s2 = D0 u D3,
// s3 = D1 u D2, s4 = D2 u D3.
enum class DhlVariant { s1, s2, s3, s4 };

// Column tuples (a_0, a_1, a_2, a_3): T1 is the base construction, E1..E6
// are the six extension tuples.
enum class TupleId { T1, E1, E2, E3, E4, E5, E6 };

DhlVariant dhl_variant_from_string(std::string_view name);
std::string_view to_string(DhlVariant v);
TupleId tuple_id_from_string(std::string_view name);
std::string_view to_string(TupleId t);
const std::array<DhlVariant, 4>& tuple_columns(TupleId t);
const std::vector<TupleId>& all_tuples();

BinarySequence dhl(const CyclotomicTable& table, DhlVariant variant);

// result(t) = seq((t + tau) mod N)  — left cyclic shift.
BinarySequence left_shift(const BinarySequence& seq, std::uint64_t tau);
BinarySequence complement(const BinarySequence& seq);
// result(t) = seq(r*t mod N); requires gcd(r, N) = 1.
BinarySequence decimate(const BinarySequence& seq, std::uint64_t r);
// result(t*T + j) = cols[j](t); all columns must share one period.
BinarySequence interleave(const std::vector<BinarySequence>& cols);
BinarySequence add_constant(const BinarySequence& seq, int c);

struct ConstructionSpec {
  std::uint64_t p = 0;
  TupleId tuple_id = TupleId::T1;
  std::array<int, 4> b{0, 0, 0, 0};
  std::optional<std::uint64_t> theta_override;

  friend bool operator==(const ConstructionSpec&, const ConstructionSpec&) = default;
};

// b entries 0/1 with b(0)=b(2) and b(1)=b(3).
bool valid_b_pattern(const std::array<int, 4>& b);
std::array<int, 4> b_from_string(std::string_view s);  // 4 chars of '0'/'1'
std::string b_to_string(const std::array<int, 4>& b);
// The four valid patterns in fixed order: 0000, 1111, 1010, 0101.
const std::vector<std::array<int, 4>>& valid_b_patterns();

// u = I(a_0 + b(0), L^d(a_1) + b(1), L^{2d}(a_2) + b(2), L^{3d}(a_3) + b(3))
// with 4d = 1 (mod p); period 4p. With require_admissible = false the
// sequence is still built for any prime p = 1 (mod 4) (optimality is then
// not guaranteed), which the negative tests rely on.
BinarySequence construct(const ConstructionSpec& spec, bool require_admissible = true);

// JSON with fields p, tuple, b, theta (theta null when not overridden).
std::string construction_spec_to_json(const ConstructionSpec& spec);
ConstructionSpec construction_spec_from_json(std::string_view json_text);

}  // namespace dhlseq
