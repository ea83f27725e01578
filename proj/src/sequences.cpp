#include "dhlseq/sequences.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace dhlseq {

BinarySequence::BinarySequence(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw std::invalid_argument("sequence period must be >= 1");
  for (auto b : bits_)
    if (b > 1) throw std::invalid_argument("sequence bits must be 0 or 1");
}

BinarySequence BinarySequence::from_support(std::size_t period,
                                            const std::vector<std::uint64_t>& support) {
  std::vector<std::uint8_t> bits(period, 0);
  for (auto t : support) {
    if (t >= period) throw std::invalid_argument("support element outside 0..N-1");
    bits[t] = 1;
  }
  return BinarySequence(std::move(bits));
}

BinarySequence BinarySequence::from_string(std::string_view s) {
  std::vector<std::uint8_t> bits;
  bits.reserve(s.size());
  for (char ch : s) {
    if (ch != '0' && ch != '1')
      throw std::invalid_argument("sequence string must contain only '0'/'1'");
    bits.push_back(std::uint8_t(ch - '0'));
  }
  return BinarySequence(std::move(bits));
}

std::vector<std::uint64_t> BinarySequence::support() const {
  std::vector<std::uint64_t> out;
  for (std::size_t t = 0; t < bits_.size(); ++t)
    if (bits_[t]) out.push_back(t);
  return out;
}

std::string BinarySequence::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t t = 0; t < bits_.size(); ++t)
    if (bits_[t]) s[t] = '1';
  return s;
}

namespace {

constexpr std::array<std::string_view, 4> kVariantNames{"s1", "s2", "s3", "s4"};
constexpr std::array<std::string_view, 7> kTupleNames{"T1", "E1", "E2", "E3", "E4", "E5", "E6"};

using V = DhlVariant;
constexpr std::array<std::array<V, 4>, 7> kTupleColumns{{
    {V::s3, V::s2, V::s1, V::s1},  // T1
    {V::s2, V::s3, V::s1, V::s1},  // E1
    {V::s4, V::s1, V::s2, V::s2},  // E2
    {V::s1, V::s4, V::s2, V::s2},  // E3
    {V::s4, V::s1, V::s3, V::s3},  // E4
    {V::s1, V::s4, V::s3, V::s3},  // E5
    {V::s2, V::s3, V::s4, V::s4},  // E6
}};

}  // namespace

DhlVariant dhl_variant_from_string(std::string_view name) {
  for (std::size_t i = 0; i < kVariantNames.size(); ++i)
    if (name == kVariantNames[i]) return DhlVariant(i);
  throw std::invalid_argument("unknown DHL variant (expected s1..s4): " + std::string(name));
}

std::string_view to_string(DhlVariant v) { return kVariantNames[std::size_t(v)]; }

TupleId tuple_id_from_string(std::string_view name) {
  for (std::size_t i = 0; i < kTupleNames.size(); ++i)
    if (name == kTupleNames[i]) return TupleId(i);
  throw std::invalid_argument("unknown tuple (expected T1 or E1..E6): " + std::string(name));
}

std::string_view to_string(TupleId t) { return kTupleNames[std::size_t(t)]; }

const std::array<DhlVariant, 4>& tuple_columns(TupleId t) {
  return kTupleColumns[std::size_t(t)];
}

const std::vector<TupleId>& all_tuples() {
  static const std::vector<TupleId> all{TupleId::T1, TupleId::E1, TupleId::E2, TupleId::E3,
                                        TupleId::E4, TupleId::E5, TupleId::E6};
  return all;
}

BinarySequence dhl(const CyclotomicTable& table, DhlVariant variant) {
  static constexpr std::array<std::array<int, 2>, 4> kClassPairs{{
      {0, 1},  // s1
      {0, 3},  // s2
      {1, 2},  // s3
      {2, 3},  // s4
  }};
  const auto& pair = kClassPairs[std::size_t(variant)];
  std::vector<std::uint64_t> support = table.cyclotomic_class(pair[0]);
  const auto& other = table.cyclotomic_class(pair[1]);
  support.insert(support.end(), other.begin(), other.end());
  return BinarySequence::from_support(table.p(), support);
}

BinarySequence left_shift(const BinarySequence& seq, std::uint64_t tau) {
  const std::size_t n = seq.period();
  tau %= n;
  std::vector<std::uint8_t> out(n);
  for (std::size_t t = 0; t < n; ++t) out[t] = seq[(t + tau) % n];
  return BinarySequence(std::move(out));
}

BinarySequence complement(const BinarySequence& seq) {
  std::vector<std::uint8_t> out(seq.bits());
  for (auto& b : out) b ^= 1;
  return BinarySequence(std::move(out));
}

BinarySequence decimate(const BinarySequence& seq, std::uint64_t r) {
  const std::size_t n = seq.period();
  if (std::gcd(r, std::uint64_t(n)) != 1)
    throw std::invalid_argument("decimation index must be coprime to the period");
  r %= n;
  std::vector<std::uint8_t> out(n);
  std::uint64_t idx = 0;
  for (std::size_t t = 0; t < n; ++t) {
    out[t] = seq[idx];
    idx = (idx + r) % n;
  }
  return BinarySequence(std::move(out));
}

BinarySequence interleave(const std::vector<BinarySequence>& cols) {
  if (cols.empty()) throw std::invalid_argument("interleave needs at least one column");
  const std::size_t n = cols[0].period();
  for (const auto& c : cols)
    if (c.period() != n) throw std::invalid_argument("interleave columns must share one period");
  const std::size_t T = cols.size();
  std::vector<std::uint8_t> out(n * T);
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t j = 0; j < T; ++j) out[t * T + j] = cols[j][t];
  return BinarySequence(std::move(out));
}

BinarySequence add_constant(const BinarySequence& seq, int c) {
  if (c != 0 && c != 1) throw std::invalid_argument("constant must be the bit 0 or 1");
  return c ? complement(seq) : seq;
}

bool valid_b_pattern(const std::array<int, 4>& b) {
  for (int v : b)
    if (v != 0 && v != 1) return false;
  return b[0] == b[2] && b[1] == b[3];
}

std::array<int, 4> b_from_string(std::string_view s) {
  if (s.size() != 4) throw std::invalid_argument("b must be 4 characters of '0'/'1'");
  std::array<int, 4> b{};
  for (std::size_t i = 0; i < 4; ++i) {
    if (s[i] != '0' && s[i] != '1')
      throw std::invalid_argument("b must be 4 characters of '0'/'1'");
    b[i] = s[i] - '0';
  }
  return b;
}

std::string b_to_string(const std::array<int, 4>& b) {
  std::string s(4, '0');
  for (std::size_t i = 0; i < 4; ++i) s[i] = char('0' + b[i]);
  return s;
}

const std::vector<std::array<int, 4>>& valid_b_patterns() {
  static const std::vector<std::array<int, 4>> patterns{
      {0, 0, 0, 0}, {1, 1, 1, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}};
  return patterns;
}

BinarySequence construct(const ConstructionSpec& spec, bool require_admissible) {
  if (!valid_b_pattern(spec.b))
    throw std::invalid_argument("b(0)=b(2),b(1)=b(3) required");
  if (require_admissible) {
    const auto adm = dhl_admissible(spec.p);
    if (!adm) throw std::invalid_argument(adm.reason + ": p not admissible");
  }
  const CyclotomicTable table = CyclotomicTable::build(spec.p, spec.theta_override);

  const auto& tuple = tuple_columns(spec.tuple_id);
  // Every supported tuple repeats its third variant in the fourth column
  // (a_2 = a_3); assert it so a divergent tuple table could never pass
  // silently.
  if (tuple[2] != tuple[3]) throw std::logic_error("tuple with a_2 != a_3");

  const std::uint64_t d = mod_inverse(4, spec.p);
  std::vector<BinarySequence> cols;
  cols.reserve(4);
  for (std::uint64_t j = 0; j < 4; ++j)
    cols.push_back(
        add_constant(left_shift(dhl(table, tuple[j]), d * j % spec.p), spec.b[j]));
  return interleave(cols);
}

std::string construction_spec_to_json(const ConstructionSpec& spec) {
  nlohmann::ordered_json j;
  j["p"] = spec.p;
  j["tuple"] = to_string(spec.tuple_id);
  j["b"] = spec.b;
  if (spec.theta_override)
    j["theta"] = *spec.theta_override;
  else
    j["theta"] = nullptr;
  return j.dump();
}

ConstructionSpec construction_spec_from_json(std::string_view json_text) {
  const auto j = nlohmann::json::parse(json_text);
  ConstructionSpec spec;
  spec.p = j.at("p").get<std::uint64_t>();
  spec.tuple_id = tuple_id_from_string(j.at("tuple").get<std::string>());
  const auto b = j.at("b").get<std::vector<int>>();
  if (b.size() != 4) throw std::invalid_argument("b must have 4 entries");
  std::copy(b.begin(), b.end(), spec.b.begin());
  if (j.contains("theta") && !j.at("theta").is_null())
    spec.theta_override = j.at("theta").get<std::uint64_t>();
  return spec;
}

}  // namespace dhlseq
