#include "dhlseq/gf2ext.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

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

std::uint64_t group_order(std::size_t m) {
  return m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
}

}  // namespace

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t p) {
  if (p < 2) throw std::invalid_argument("modulus must be >= 2");
  a %= p;
  if (a == 0) throw std::invalid_argument("multiplicative_order: a = 0 (mod p)");
  if (std::gcd(a, p) != 1) throw std::invalid_argument("multiplicative_order: gcd(a, p) != 1");
  std::uint64_t t = 1;
  for (std::uint64_t cur = a; cur != 1; ++t)
    cur = std::uint64_t((__uint128_t(cur) * a) % p);
  return t;
}

bool is_irreducible(const Gf2Poly& f) {
  const auto d = f.degree();
  if (!d || *d < 1) return false;
  const std::size_t m = *d;
  const Gf2Poly xr = poly_mod(Gf2Poly::x(), f);

  // frob[k] = x^{2^k} mod f; f is irreducible iff x^{2^m} = x (mod f) and
  // x^{2^{m/q}} - x is coprime to f for every prime q | m.
  std::vector<Gf2Poly> frob(m + 1);
  frob[0] = xr;
  for (std::size_t k = 1; k <= m; ++k) frob[k] = poly_mod(frob[k - 1] * frob[k - 1], f);
  if (frob[m] != xr) return false;
  for (auto q : prime_divisors(m)) {
    const Gf2Poly diff = frob[m / q] + xr;
    if (diff.is_zero() || !poly_gcd(diff, f).is_one()) return false;
  }
  return true;
}

Gf2Poly find_irreducible(std::size_t m, std::uint64_t seed) {
  if (m == 0) throw std::invalid_argument("find_irreducible requires m >= 1");
  // Middle coefficients x^1..x^{m-1} come from the low bits of the counter.
  const std::uint64_t mask =
      (m >= 65) ? ~std::uint64_t{0} : (m == 1 ? 0 : (std::uint64_t{1} << (m - 1)) - 1);
  for (std::uint64_t c = seed;; ++c) {
    Gf2Poly f = Gf2Poly::monomial(m) + Gf2Poly::from_mask(((c & mask) << 1) | 1);
    if (is_irreducible(f)) return f;
  }
}

FieldSpecPtr make_field(std::size_t m, std::uint64_t seed) {
  return std::make_shared<const FieldSpec>(FieldSpec{m, find_irreducible(m, seed)});
}

FieldSpecPtr make_field(Gf2Poly modulus) {
  if (!is_irreducible(modulus)) throw std::invalid_argument("field modulus is reducible");
  const std::size_t m = *modulus.degree();
  return std::make_shared<const FieldSpec>(FieldSpec{m, std::move(modulus)});
}

FieldElem::FieldElem(FieldSpecPtr spec, const Gf2Poly& rep)
    : spec_(std::move(spec)), rep_(poly_mod(rep, spec_->modulus)) {}

FieldElem FieldElem::zero(FieldSpecPtr spec) { return {std::move(spec), Gf2Poly::zero()}; }

FieldElem FieldElem::one(FieldSpecPtr spec) { return {std::move(spec), Gf2Poly::one()}; }

namespace {

void require_same_field(const FieldElem& a, const FieldElem& b) {
  if (a.spec() != b.spec() && a.spec()->modulus != b.spec()->modulus)
    throw std::invalid_argument("field elements from different fields");
}

}  // namespace

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  require_same_field(a, b);
  return {a.spec(), a.rep() + b.rep()};
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  require_same_field(a, b);
  return {a.spec(), a.rep() * b.rep()};
}

bool operator==(const FieldElem& a, const FieldElem& b) {
  return a.spec()->modulus == b.spec()->modulus && a.rep() == b.rep();
}

FieldElem field_pow(FieldElem a, std::uint64_t e) {
  FieldElem r = FieldElem::one(a.spec());
  while (e) {
    if (e & 1) r = r * a;
    a = a * a;
    e >>= 1;
  }
  return r;
}

FieldElem find_root_of_unity(const FieldSpecPtr& spec, std::uint64_t p) {
  if (spec->m > 64)
    throw std::invalid_argument("find_root_of_unity: extension degree exceeds 64");
  const std::uint64_t order = group_order(spec->m);
  if (p < 2 || order % p != 0)
    throw std::invalid_argument("find_root_of_unity: p does not divide 2^m - 1");
  const std::uint64_t e = order / p;
  for (std::uint64_t c = 2; c <= order; ++c) {
    const FieldElem beta = field_pow(FieldElem(spec, Gf2Poly::from_mask(c)), e);
    if (!beta.is_one()) return beta;
  }
  throw std::logic_error("find_root_of_unity: no candidate worked");  // unreachable
}

FieldElem eval_at(const Gf2Poly& f, const FieldElem& a) {
  FieldElem r = FieldElem::zero(a.spec());
  const auto d = f.degree();
  if (!d) return r;
  const FieldElem one = FieldElem::one(a.spec());
  for (std::size_t i = *d + 1; i-- > 0;) {
    r = r * a;
    if (f.coeff(i)) r = r + one;
  }
  return r;
}

}  // namespace dhlseq
