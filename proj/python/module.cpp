#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dhlseq/analysis.hpp"
#include "dhlseq/cyclotomy.hpp"
#include "dhlseq/gf2ext.hpp"
#include "dhlseq/sequences.hpp"
#include "dhlseq/verify.hpp"

namespace py = pybind11;

namespace {

dhlseq::BinarySequence seq_of(const std::string& bits) {
  return dhlseq::BinarySequence::from_string(bits);
}

dhlseq::ConstructionSpec spec_of(std::uint64_t p, const std::string& tuple,
                                 const std::string& b,
                                 std::optional<std::uint64_t> theta) {
  dhlseq::ConstructionSpec spec;
  spec.p = p;
  spec.tuple_id = dhlseq::tuple_id_from_string(tuple);
  spec.b = dhlseq::b_from_string(b);
  spec.theta_override = theta;
  return spec;
}

}  // namespace

PYBIND11_MODULE(dhlseq, m) {
  m.doc() = "Interleaved Ding-Helleseth-Lam sequences: construction, analysis, verification";

  m.def("admissible_primes", &dhlseq::enumerate_admissible_primes, py::arg("bound"),
        "Admissible primes p <= bound (p = 4f+1, f odd, p-4 a perfect square)");

  m.def(
      "is_admissible",
      [](std::uint64_t p) {
        const auto a = dhlseq::dhl_admissible(p);
        return py::make_tuple(a.ok, a.reason);
      },
      py::arg("p"), "(ok, reason) for the DHL admissibility conditions");

  m.def("primitive_root", &dhlseq::find_primitive_root, py::arg("p"));
  m.def("mod_inverse", &dhlseq::mod_inverse, py::arg("a"), py::arg("p"));
  m.def("multiplicative_order", &dhlseq::multiplicative_order, py::arg("a"), py::arg("p"));

  m.def(
      "cyclotomic_classes",
      [](std::uint64_t p, std::optional<std::uint64_t> theta) {
        const auto table = dhlseq::CyclotomicTable::build(p, theta);
        std::vector<std::vector<std::uint64_t>> out;
        for (int i = 0; i < 4; ++i) out.push_back(table.cyclotomic_class(i));
        return out;
      },
      py::arg("p"), py::arg("theta") = std::nullopt,
      "The quartic classes D_0..D_3 of Z_p*");

  m.def(
      "dhl_sequence",
      [](std::uint64_t p, const std::string& variant, std::optional<std::uint64_t> theta) {
        const auto table = dhlseq::CyclotomicTable::build(p, theta);
        return dhlseq::dhl(table, dhlseq::dhl_variant_from_string(variant)).to_string();
      },
      py::arg("p"), py::arg("variant"), py::arg("theta") = std::nullopt,
      "DHL sequence s1..s4 of period p as a '0'/'1' string");

  m.def(
      "construct",
      [](std::uint64_t p, const std::string& tuple, const std::string& b,
         std::optional<std::uint64_t> theta, bool require_admissible) {
        return dhlseq::construct(spec_of(p, tuple, b, theta), require_admissible).to_string();
      },
      py::arg("p"), py::arg("tuple") = "T1", py::arg("b") = "0000",
      py::arg("theta") = std::nullopt, py::arg("require_admissible") = true,
      "The period-4p interleaved sequence as a '0'/'1' string");

  m.def(
      "autocorrelation",
      [](const std::string& s, std::int64_t tau) {
        return dhlseq::autocorrelation(seq_of(s), tau);
      },
      py::arg("seq"), py::arg("tau"));

  m.def(
      "autocorr_profile",
      [](const std::string& s) { return dhlseq::autocorr_profile(seq_of(s)).values; },
      py::arg("seq"), "R(tau) for tau = 0..N-1");

  m.def(
      "classify",
      [](const std::string& s) {
        const auto v = dhlseq::classify(dhlseq::autocorr_profile(seq_of(s)));
        py::dict out;
        out["verdict"] = std::string(dhlseq::to_string(v.verdict));
        out["n_mod_4"] = v.n_mod_4;
        out["offpeak"] = v.offpeak_value_set;
        out["degenerate"] = v.degenerate;
        return out;
      },
      py::arg("seq"));

  m.def(
      "linear_complexity",
      [](const std::string& s) {
        const auto rep = dhlseq::lincomp_report(seq_of(s));
        py::dict out;
        out["lc_gcd"] = rep.lc_gcd;
        out["lc_bm"] = rep.lc_bm;
        out["agree"] = rep.agree();
        out["minimal_poly"] = rep.minimal_poly.to_string();
        out["gcd_poly"] = rep.gcd_poly.to_string();
        out["bm_connection"] = rep.bm_connection.to_string();
        return out;
      },
      py::arg("seq"), "Linear complexity by the gcd method and Berlekamp-Massey");

  m.def(
      "berlekamp_massey",
      [](const std::string& s) {
        const auto [len, conn] = dhlseq::berlekamp_massey(seq_of(s));
        return py::make_tuple(len, conn.to_string());
      },
      py::arg("seq"));

  m.def(
      "minimal_polynomial",
      [](const std::string& s) { return dhlseq::minimal_polynomial(seq_of(s)).to_string(); },
      py::arg("seq"));

  m.def(
      "equivalence_check",
      [](const std::string& a, const std::string& b) {
        const auto v = dhlseq::equivalence_check(seq_of(a), seq_of(b));
        py::dict out;
        out["equivalent"] = v.equivalent;
        if (v.witness) {
          out["r"] = v.witness->r;
          out["tau"] = v.witness->tau;
          out["c"] = v.witness->c;
        }
        return out;
      },
      py::arg("a"), py::arg("b"),
      "Exhaustive decimation/shift/complement equivalence with witness");

  m.def(
      "expected_epsilon_and_g",
      [](const std::string& b) {
        const auto [eps, g] = dhlseq::expected_epsilon_and_g(dhlseq::b_from_string(b));
        return py::make_tuple(eps, g.to_string());
      },
      py::arg("b"));

  m.def(
      "verify_case",
      [](std::uint64_t p, const std::string& tuple, const std::string& b,
         std::optional<std::uint64_t> theta) {
        const auto rec = dhlseq::verify_case(p, dhlseq::tuple_id_from_string(tuple),
                                             dhlseq::b_from_string(b), theta);
        py::dict out;
        out["p"] = rec.p;
        out["tuple"] = std::string(dhlseq::to_string(rec.tuple_id));
        out["b"] = dhlseq::b_to_string(rec.b);
        out["theta"] = rec.theta;
        out["lc"] = rec.lc_actual;
        out["lc_expected"] = rec.lc_expected;
        out["epsilon"] = rec.epsilon_expected;
        out["g"] = rec.gcd_poly.to_string();
        out["g_expected"] = rec.gcd_poly_expected.to_string();
        out["autocorr"] = std::string(dhlseq::to_string(rec.autocorr_verdict.verdict));
        out["bm_agrees"] = rec.bm_agrees;
        out["pass"] = rec.pass;
        return out;
      },
      py::arg("p"), py::arg("tuple") = "T1", py::arg("b") = "0000",
      py::arg("theta") = std::nullopt);

  m.def(
      "run_all",
      [](std::uint64_t bound, std::uint64_t field_cap, std::uint64_t equiv_max_p) {
        dhlseq::VerifyOptions options;
        options.field_cap = field_cap;
        options.equiv_max_p = equiv_max_p;
        return dhlseq::report_to_json(dhlseq::run_all(bound, options));
      },
      py::arg("bound"), py::arg("field_cap") = 64, py::arg("equiv_max_p") = 29,
      "Full verification sweep; returns the deterministic JSON report");
}
