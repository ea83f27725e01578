#include "dhlseq/gf2poly.hpp"

#include <bit>
#include <stdexcept>

namespace dhlseq {

namespace {

constexpr std::size_t kWordBits = 64;

// dst ^= src << shift, in word form. dst must already be large enough.
void xor_shifted(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src,
                 std::size_t shift) {
  const std::size_t wo = shift / kWordBits;
  const std::size_t bo = shift % kWordBits;
  if (bo == 0) {
    for (std::size_t i = 0; i < src.size(); ++i) dst[wo + i] ^= src[i];
  } else {
    for (std::size_t i = 0; i < src.size(); ++i) {
      dst[wo + i] ^= src[i] << bo;
      dst[wo + i + 1] ^= src[i] >> (kWordBits - bo);
    }
  }
}

int top_bit(const std::vector<std::uint64_t>& w, int from_word) {
  for (int i = from_word; i >= 0; --i)
    if (w[i] != 0)
      return i * int(kWordBits) + int(kWordBits) - 1 - std::countl_zero(w[i]);
  return -1;
}

}  // namespace

void Gf2Poly::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

Gf2Poly Gf2Poly::from_words(std::vector<std::uint64_t> w) {
  Gf2Poly p;
  p.words_ = std::move(w);
  p.trim();
  return p;
}

Gf2Poly Gf2Poly::one() { return from_words({1}); }

Gf2Poly Gf2Poly::x() { return from_words({2}); }

Gf2Poly Gf2Poly::monomial(std::size_t k) {
  std::vector<std::uint64_t> w(k / kWordBits + 1, 0);
  w[k / kWordBits] = std::uint64_t{1} << (k % kWordBits);
  return from_words(std::move(w));
}

Gf2Poly Gf2Poly::from_mask(std::uint64_t mask) { return from_words({mask}); }

Gf2Poly Gf2Poly::from_coeff_bits(const std::vector<std::uint8_t>& bits) {
  std::vector<std::uint64_t> w(bits.size() / kWordBits + 1, 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] > 1) throw std::invalid_argument("coefficients must be 0 or 1");
    if (bits[i]) w[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
  }
  return from_words(std::move(w));
}

Gf2Poly Gf2Poly::from_support(const std::vector<std::uint64_t>& exponents) {
  Gf2Poly p;
  for (auto e : exponents) {
    const std::size_t wi = e / kWordBits;
    if (wi >= p.words_.size()) p.words_.resize(wi + 1, 0);
    p.words_[wi] ^= std::uint64_t{1} << (e % kWordBits);
  }
  p.trim();
  return p;
}

Gf2Poly Gf2Poly::from_string(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty polynomial string");
  std::vector<std::uint64_t> w(s.size() / kWordBits + 1, 0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      w[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
    else if (s[i] != '0')
      throw std::invalid_argument("polynomial string must contain only '0'/'1'");
  }
  return from_words(std::move(w));
}

std::optional<std::size_t> Gf2Poly::degree() const {
  if (words_.empty()) return std::nullopt;
  return (words_.size() - 1) * kWordBits + kWordBits - 1 - std::countl_zero(words_.back());
}

bool Gf2Poly::coeff(std::size_t i) const {
  const std::size_t wi = i / kWordBits;
  if (wi >= words_.size()) return false;
  return (words_[wi] >> (i % kWordBits)) & 1;
}

std::size_t Gf2Poly::weight() const {
  std::size_t n = 0;
  for (auto w : words_) n += std::size_t(std::popcount(w));
  return n;
}

std::string Gf2Poly::to_string() const {
  if (is_zero()) return "0";
  std::string s(*degree() + 1, '0');
  for (std::size_t i = 0; i < s.size(); ++i)
    if (coeff(i)) s[i] = '1';
  return s;
}

Gf2Poly Gf2Poly::shifted_left(std::size_t k) const {
  if (is_zero()) return {};
  if (k == 0) return *this;
  std::vector<std::uint64_t> w(words_.size() + k / kWordBits + 1, 0);
  xor_shifted(w, words_, k);
  return from_words(std::move(w));
}

Gf2Poly& Gf2Poly::operator+=(const Gf2Poly& rhs) {
  if (rhs.words_.size() > words_.size()) words_.resize(rhs.words_.size(), 0);
  for (std::size_t i = 0; i < rhs.words_.size(); ++i) words_[i] ^= rhs.words_[i];
  trim();
  return *this;
}

Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::uint64_t> out(a.words_.size() + b.words_.size() + 1, 0);
  for (std::size_t wi = 0; wi < a.words_.size(); ++wi) {
    std::uint64_t w = a.words_[wi];
    while (w) {
      const int bit = std::countr_zero(w);
      w &= w - 1;
      xor_shifted(out, b.words_, wi * 64 + std::size_t(bit));
    }
  }
  return Gf2Poly::from_words(std::move(out));
}

std::pair<Gf2Poly, Gf2Poly> poly_divrem(const Gf2Poly& a, const Gf2Poly& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  const int db = int(*b.degree());
  const auto da = a.degree();
  if (!da || int(*da) < db) return {Gf2Poly{}, a};

  std::vector<std::uint64_t> rem = a.words_;
  rem.resize(rem.size() + 2, 0);
  std::vector<std::uint64_t> quot((std::size_t(*da) - std::size_t(db)) / 64 + 1, 0);
  int word = int(rem.size()) - 1;
  for (int rd = top_bit(rem, word); rd >= db; rd = top_bit(rem, word)) {
    word = rd / 64;
    const std::size_t shift = std::size_t(rd - db);
    quot[shift / 64] |= std::uint64_t{1} << (shift % 64);
    xor_shifted(rem, b.words_, shift);
  }
  return {Gf2Poly::from_words(std::move(quot)), Gf2Poly::from_words(std::move(rem))};
}

Gf2Poly poly_mod(const Gf2Poly& a, const Gf2Poly& b) { return poly_divrem(a, b).second; }

Gf2Poly poly_gcd(Gf2Poly a, Gf2Poly b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd(0, 0) is undefined");
  while (!b.is_zero()) {
    Gf2Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Gf2Poly x_pow_n_plus_1(std::size_t n) {
  if (n == 0) throw std::invalid_argument("x_pow_n_plus_1 requires n >= 1");
  return Gf2Poly::monomial(n) + Gf2Poly::one();
}

Gf2Poly quarter_cyclotomic_quotient(std::uint64_t p) {
  if (p < 3) throw std::invalid_argument("quarter_cyclotomic_quotient requires p >= 3");
  std::vector<std::uint64_t> support(p);
  for (std::uint64_t i = 0; i < p; ++i) support[i] = 4 * i;
  return Gf2Poly::from_support(support);
}

}  // namespace dhlseq
