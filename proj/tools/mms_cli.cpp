#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mms/bagfill.hpp"
#include "mms/calibration.hpp"
#include "mms/errors.hpp"
#include "mms/generator.hpp"
#include "mms/instance.hpp"
#include "mms/trace_io.hpp"
#include "mms/verifier.hpp"

#include <nlohmann/json.hpp>

namespace {

// Exit-status contract: 0 pass, 1 verification fail, 2 approximation
// failure, 3 input/scale error.
constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitApproxFailure = 2;
constexpr int kExitInputError = 3;

struct CommonOpts {
  std::string alpha = "10/13";
  int oracle_limit = mms::MmsOracle::kDefaultSizeLimit;
};

int cmd_gen(const std::string& family, int n, int m, std::uint64_t seed, const std::string& out) {
  mms::Instance inst = mms::generate_instance(family, n, m, seed);
  if (out.empty())
    std::cout << mms::instance_to_json(inst);
  else
    mms::save_instance(inst, out);
  return kExitPass;
}

int cmd_run(const std::string& instance_path, const CommonOpts& opts, bool assume_normalized,
            const std::string& out, const std::string& trace_path) {
  mms::Instance inst = mms::load_instance(instance_path);
  mms::Rational alpha = mms::parse_rational(opts.alpha);
  mms::MmsOracle oracle(opts.oracle_limit);
  mms::PipelineResult result = mms::run_full(inst, alpha, oracle, assume_normalized);
  if (out.empty())
    std::cout << mms::allocation_to_json(result.allocation, inst.n, inst.m);
  else
    mms::save_allocation(result.allocation, inst.n, inst.m, out);
  if (!trace_path.empty()) mms::save_trace(result.trace, trace_path);
  return kExitPass;
}

int cmd_verify(const std::string& instance_path, const std::string& allocation_path,
               const CommonOpts& opts, const std::string& out) {
  mms::Instance inst = mms::load_instance(instance_path);
  mms::Allocation alloc = mms::load_allocation(allocation_path, inst.n);
  mms::Rational alpha = mms::parse_rational(opts.alpha);
  if (alpha <= 0 || alpha > 1) throw mms::InputError("alpha must lie in (0,1]");
  mms::MmsOracle oracle(opts.oracle_limit);
  mms::VerificationReport report = mms::verify_allocation(inst, alloc, alpha, oracle);
  std::string text = mms::report_to_json(report, alpha);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) throw mms::InputError("cannot write '" + out + "'");
    f << text;
  }
  return report.pass ? kExitPass : kExitVerifyFail;
}

int cmd_lemma_check(const std::string& lemma, int trials, std::uint64_t seed,
                    const CommonOpts& opts, const std::string& out) {
  mms::Rational alpha = mms::parse_rational(opts.alpha);
  mms::MmsOracle oracle(opts.oracle_limit);
  mms::DeterministicRng rng(seed * 0x2545f4914f6cdd1dULL + 7);

  nlohmann::json violations = nlohmann::json::array();
  int performed = 0;
  while (performed < trials) {
    int m = 4 + static_cast<int>(rng.below(7));   // 4..10 goods
    int d = 1 + static_cast<int>(rng.below(3));   // 1..3 parts
    std::vector<mms::Rational> row;
    for (int j = 0; j < m; ++j) row.push_back(mms::rat(static_cast<long>(rng.below(49)), 48));
    std::vector<int> all(m);
    for (int j = 0; j < m; ++j) all[j] = j;
    mms::Rational psi = oracle.mms_value_only(row, d, all);
    if (psi == 0) continue;
    // Certify: rescale to unit MMS, then cap at 1 (both exact).
    for (auto& v : row) {
      v /= psi;
      if (v > 1) v = 1;
    }
    ++performed;

    long pick = static_cast<long>(rng.below(9));  // lambda = pick/8 of the valid range
    mms::Rational frac = mms::rat(pick, 8);
    std::optional<mms::CalibrationFn> fn;
    if (lemma == "F")
      fn = mms::CalibrationFn::f(frac * (mms::Rational(4) * alpha / 3 - 1), alpha);
    else if (lemma == "H")
      fn = mms::CalibrationFn::h(alpha);
    else if (lemma == "W")
      fn = mms::CalibrationFn::w(frac / 2, alpha);
    else if (lemma == "Z")
      fn = mms::CalibrationFn::z(frac * 2 * (1 - alpha), alpha);
    else
      throw mms::InputError("lemma must be one of F, H, W, Z");

    mms::LemmaRow lr = mms::lemma_row(*fn);
    mms::BoundCheckReport rep =
        mms::check_calibrated_bound(*fn, row, d, all, lr.level, lr.bound, oracle);
    if (!rep.holds) {
      nlohmann::json vals = nlohmann::json::array();
      for (const auto& v : row) vals.push_back(mms::to_string(v));
      violations.push_back({{"trial", performed},
                            {"d", d},
                            {"lambda", mms::to_string(fn->lambda())},
                            {"row", std::move(vals)},
                            {"psi_after", mms::to_string(rep.psi_after)},
                            {"bound", mms::to_string(rep.bound)}});
    }
  }

  nlohmann::json j{{"lemma", lemma}, {"trials", trials}, {"violations", violations}};
  std::string text = j.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) throw mms::InputError("cannot write '" + out + "'");
    f << text;
  }
  return violations.empty() ? kExitPass : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"(10/13)-MMS allocation toolkit"};
  app.require_subcommand(1);

  CommonOpts common;

  auto* gen = app.add_subcommand("gen", "emit a deterministic instance file");
  std::string family = "uniform";
  int n = 2, m = 10;
  std::uint64_t seed = 1;
  std::string gen_out;
  gen->add_option("--family", family, "uniform|clustered|paper-example-1|paper-example-2");
  gen->add_option("--agents,-n", n, "agent count");
  gen->add_option("--goods,-m", m, "good count");
  gen->add_option("--seed", seed, "rng seed");
  gen->add_option("--out", gen_out, "output path (stdout if omitted)");

  auto* run = app.add_subcommand("run", "run the allocation pipeline");
  std::string run_instance, run_out, run_trace;
  bool assume_normalized = false;
  run->add_option("--instance", run_instance, "instance JSON")->required();
  run->add_option("--alpha", common.alpha, "approximation target p/q (default 10/13)");
  run->add_option("--oracle-limit", common.oracle_limit, "max valued goods per oracle query");
  run->add_option("--out", run_out, "allocation output path (stdout if omitted)");
  run->add_option("--trace", run_trace, "pipeline trace output path");
  run->add_flag("--assume-normalized", assume_normalized,
                "treat the input as ordered with unit MMS (skips scaling and capping)");

  auto* verify = app.add_subcommand("verify", "certify an allocation against the exact oracle");
  std::string ver_instance, ver_alloc, ver_out;
  verify->add_option("--instance", ver_instance, "instance JSON")->required();
  verify->add_option("--allocation", ver_alloc, "allocation JSON")->required();
  verify->add_option("--alpha", common.alpha, "approximation target p/q");
  verify->add_option("--oracle-limit", common.oracle_limit, "max valued goods per oracle query");
  verify->add_option("--out", ver_out, "report output path (stdout if omitted)");

  auto* lemma = app.add_subcommand("lemma-check", "sweep one calibrated-MMS bound");
  std::string lemma_id = "F";
  int trials = 100;
  std::uint64_t lemma_seed = 1;
  std::string lemma_out;
  lemma->add_option("--lemma", lemma_id, "F|H|W|Z")->required();
  lemma->add_option("--trials", trials, "number of certified random rows");
  lemma->add_option("--seed", lemma_seed, "rng seed");
  lemma->add_option("--alpha", common.alpha, "approximation target p/q");
  lemma->add_option("--oracle-limit", common.oracle_limit, "max valued goods per oracle query");
  lemma->add_option("--out", lemma_out, "report output path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInputError;
  }

  try {
    if (gen->parsed()) return cmd_gen(family, n, m, seed, gen_out);
    if (run->parsed()) return cmd_run(run_instance, common, assume_normalized, run_out, run_trace);
    if (verify->parsed()) return cmd_verify(ver_instance, ver_alloc, common, ver_out);
    if (lemma->parsed()) return cmd_lemma_check(lemma_id, trials, lemma_seed, common, lemma_out);
  } catch (const mms::ApproximationFailure& e) {
    std::cerr << "approximation failure: " << e.what() << "\n";
    return kExitApproxFailure;
  } catch (const mms::OracleScaleError& e) {
    std::cerr << "oracle scale: " << e.what() << "\n";
    return kExitInputError;
  } catch (const mms::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
