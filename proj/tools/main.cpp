#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dhlseq/analysis.hpp"
#include "dhlseq/cyclotomy.hpp"
#include "dhlseq/sequences.hpp"
#include "dhlseq/verify.hpp"

namespace {

// Exit codes: 0 success, 1 check failure, 2 usage/parse error.
constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

std::string read_stream(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") return read_stream(std::cin);
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open input file: " + path);
  return read_stream(f);
}

// First non-empty line, surrounding whitespace stripped.
std::string first_token_line(const std::string& text) {
  std::istringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    const auto begin = line.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) continue;
    const auto end = line.find_last_not_of(" \t\r\n");
    return line.substr(begin, end - begin + 1);
  }
  throw std::invalid_argument("no sequence found in input");
}

struct GenerateArgs {
  std::uint64_t p = 0;
  std::string tuple = "T1";
  std::string b = "0000";
  std::optional<std::uint64_t> theta;
  std::string format = "bits";
};

int cmd_generate(const GenerateArgs& args) {
  dhlseq::ConstructionSpec spec;
  spec.p = args.p;
  spec.tuple_id = dhlseq::tuple_id_from_string(args.tuple);
  spec.b = dhlseq::b_from_string(args.b);
  spec.theta_override = args.theta;
  const dhlseq::BinarySequence u = dhlseq::construct(spec);

  if (args.format == "bits") {
    std::cout << u.to_string() << "\n";
  } else {
    nlohmann::ordered_json j;
    j["p"] = spec.p;
    j["tuple"] = dhlseq::to_string(spec.tuple_id);
    j["b"] = spec.b;
    j["theta"] = args.theta ? *args.theta : dhlseq::find_primitive_root(spec.p);
    j["sequence"] = u.to_string();
    std::cout << j.dump(2) << "\n";
  }
  return kOk;
}

int cmd_analyze(const std::string& input_path, const std::string& format) {
  const dhlseq::BinarySequence seq =
      dhlseq::BinarySequence::from_string(first_token_line(read_input(input_path)));

  const dhlseq::AutocorrProfile profile = dhlseq::autocorr_profile(seq);
  if (format == "csv") {
    std::cout << dhlseq::profile_to_csv(profile);
    return kOk;
  }

  const dhlseq::OptimalityVerdict verdict = dhlseq::classify(profile);
  const dhlseq::LinCompReport lc = dhlseq::lincomp_report(seq);

  if (format == "json") {
    nlohmann::ordered_json j;
    j["period"] = seq.period();
    j["autocorr"] = dhlseq::to_string(verdict.verdict);
    j["n_mod_4"] = verdict.n_mod_4;
    j["offpeak"] = verdict.offpeak_value_set;
    j["degenerate"] = verdict.degenerate;
    j["lc_gcd"] = lc.lc_gcd;
    j["lc_bm"] = lc.lc_bm;
    j["lc_agree"] = lc.agree();
    j["minimal_poly"] = lc.minimal_poly.to_string();
    j["gcd_poly"] = lc.gcd_poly.to_string();
    j["bm_connection"] = lc.bm_connection.to_string();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "period: " << seq.period() << "\n";
    std::cout << "autocorrelation: " << dhlseq::to_string(verdict.verdict);
    if (verdict.degenerate) std::cout << " (degenerate: no off-peak lags)";
    std::cout << "\n";
    std::cout << "offpeak values:";
    for (auto v : verdict.offpeak_value_set) std::cout << " " << v;
    std::cout << "\n";
    std::cout << "linear complexity: " << lc.lc_gcd << " (gcd), " << lc.lc_bm
              << " (berlekamp-massey)\n";
    std::cout << "minimal polynomial: " << lc.minimal_poly.to_string() << "\n";
  }
  return lc.agree() ? kOk : kCheckFailed;
}

int cmd_verify(std::uint64_t max_p, bool json, std::uint64_t field_cap) {
  dhlseq::VerifyOptions options;
  options.field_cap = field_cap;
  const dhlseq::VerificationReport report = dhlseq::run_all(max_p, options);
  std::cout << (json ? dhlseq::report_to_json(report) : dhlseq::report_to_text(report));
  return report.all_pass ? kOk : kCheckFailed;
}

int cmd_primes(std::uint64_t max) {
  const auto primes = dhlseq::enumerate_admissible_primes(max);
  for (std::size_t i = 0; i < primes.size(); ++i)
    std::cout << (i ? " " : "") << primes[i];
  std::cout << "\n";
  return kOk;
}

int cmd_equiv(const std::string& a_path, const std::string& b_path) {
  const auto a = dhlseq::BinarySequence::from_string(first_token_line(read_input(a_path)));
  const auto b = dhlseq::BinarySequence::from_string(first_token_line(read_input(b_path)));
  const dhlseq::EquivalenceVerdict verdict = dhlseq::equivalence_check(a, b);
  if (!verdict.equivalent) {
    std::cout << "inequivalent\n";
    return kCheckFailed;
  }
  const auto& w = *verdict.witness;
  std::cout << "equivalent (" << (w.c ? "complement" : "identity") << ", shift " << w.tau
            << ", decimation " << w.r << ")\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interleaved Ding-Helleseth-Lam sequences: generation, analysis, verification"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Construct the period-4p sequence");
  generate->add_option("--p", gen.p, "admissible prime p = 4f+1")->required();
  generate->add_option("--tuple", gen.tuple, "column tuple: T1 or E1..E6")
      ->default_val("T1");
  generate->add_option("--b", gen.b, "4-bit constant vector, b(0) first, e.g. 0101")
      ->default_val("0000");
  generate->add_option("--theta", gen.theta, "primitive root override");
  generate->add_option("--format", gen.format, "output format")
      ->check(CLI::IsMember({"bits", "json"}))
      ->default_val("bits");

  std::string analyze_input;
  std::string analyze_format = "text";
  auto* analyze = app.add_subcommand("analyze", "Autocorrelation + linear complexity of a sequence");
  analyze->add_option("--input", analyze_input, "sequence file ('-' or omitted: stdin)");
  analyze->add_option("--format", analyze_format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->default_val("text");

  std::uint64_t verify_max_p = 200;
  std::uint64_t verify_field_cap = 64;
  bool verify_json = false;
  auto* verify = app.add_subcommand("verify", "Sweep the theorem checks over admissible primes");
  verify->add_option("--max-p", verify_max_p, "prime bound")->default_val(200);
  verify->add_flag("--json", verify_json, "emit the JSON report");
  verify->add_option("--field-cap", verify_field_cap,
                     "largest extension degree m for the field-route lemma checks")
      ->default_val(64);

  std::uint64_t primes_max = 200;
  auto* primes = app.add_subcommand("primes", "List admissible primes");
  primes->add_option("--max", primes_max, "bound")->default_val(200);

  std::string equiv_a, equiv_b;
  auto* equiv = app.add_subcommand("equiv", "Exhaustive shift/decimation/complement equivalence");
  equiv->add_option("--a", equiv_a, "first sequence file")->required();
  equiv->add_option("--b", equiv_b, "second sequence file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*generate) return cmd_generate(gen);
    if (*analyze) return cmd_analyze(analyze_input, analyze_format);
    if (*verify) return cmd_verify(verify_max_p, verify_json, verify_field_cap);
    if (*primes) return cmd_primes(primes_max);
    if (*equiv) return cmd_equiv(equiv_a, equiv_b);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;  // unreachable: require_subcommand(1)
}
