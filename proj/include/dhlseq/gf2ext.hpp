#pragma once

#include <cstdint>
#include <memory>

#include "dhlseq/gf2poly.hpp"

namespace dhlseq {

// Realization of F_{2^m} as GF(2)[x] modulo an irreducible polynomial of
// degree m. Immutable once built; share it between elements via shared_ptr.
struct FieldSpec {
  std::size_t m = 0;
  Gf2Poly modulus;
};
using FieldSpecPtr = std::shared_ptr<const FieldSpec>;

// Smallest t >= 1 with a^t = 1 (mod p); throws when a = 0 (mod p).
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t p);

bool is_irreducible(const Gf2Poly& f);

// Deterministic search: candidates are x^m + (middle bits of c) + 1 for
// c = seed, seed+1, ... with the middle bits masked to fit below x^m, i.e.
// the numerically smallest irreducible with constant term 1 when seed = 0.
Gf2Poly find_irreducible(std::size_t m, std::uint64_t seed = 0);

FieldSpecPtr make_field(std::size_t m, std::uint64_t seed = 0);
FieldSpecPtr make_field(Gf2Poly modulus);  // verifies irreducibility

class FieldElem {
 public:
  FieldElem(FieldSpecPtr spec, const Gf2Poly& rep);  // reduces rep mod modulus

  static FieldElem zero(FieldSpecPtr spec);
  static FieldElem one(FieldSpecPtr spec);

  const Gf2Poly& rep() const { return rep_; }
  const FieldSpecPtr& spec() const { return spec_; }
  bool is_zero() const { return rep_.is_zero(); }
  bool is_one() const { return rep_.is_one(); }

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend bool operator==(const FieldElem& a, const FieldElem& b);

 private:
  FieldSpecPtr spec_;
  Gf2Poly rep_;
};

inline FieldElem field_mul(const FieldElem& a, const FieldElem& b) { return a * b; }
FieldElem field_pow(FieldElem a, std::uint64_t e);

// beta with beta^p = 1 and beta != 1, computed as g^{(2^m-1)/p} for candidate
// reps g = x, x+1, x^2, ... until the power differs from 1. Requires m <= 64
// (group order held in a 64-bit word) and p | 2^m - 1.
FieldElem find_root_of_unity(const FieldSpecPtr& spec, std::uint64_t p);

// Horner evaluation of f at a.
FieldElem eval_at(const Gf2Poly& f, const FieldElem& a);

}  // namespace dhlseq
