// qcorr: correlation quantifiers of two-qubit X states.

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qcorr/commands.hpp"

namespace {

using qcorr::cli::Format;

const std::map<std::string, Format> kTextFormats{{"text", Format::kText},
                                                 {"json", Format::kJson}};
const std::map<std::string, Format> kTableFormats{{"csv", Format::kCsv},
                                                  {"json", Format::kJson}};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local available quantum correlations, discord and concurrence of "
               "two-qubit X states"};
  app.require_subcommand(1);

  // report
  auto* report = app.add_subcommand("report", "Quantifiers of a single state");
  qcorr::cli::ReportOptions report_opts;
  std::vector<double> x_params, bloch_params;
  double werner_z = 0.0, damping = 0.0;
  auto* source = report->add_option_group("state");
  auto* x_opt = source->add_option("--x", x_params, "a b c z w")->expected(5);
  auto* bloch_opt = source->add_option("--bloch", bloch_params, "x3 y3 T1 T2 T3")->expected(5);
  auto* werner_opt = source->add_option("--werner", werner_z, "Werner mixing z");
  source->require_option(1);
  auto* ad_opt = report->add_option("--ad", damping, "amplitude damping p on B");
  report->add_flag("--oracle", report_opts.with_oracle, "also run the brute-force oracles");
  report->add_option("--format", report_opts.format)
      ->transform(CLI::CheckedTransformer(kTextFormats, CLI::ignore_case));

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Werner state under amplitude damping on a (z, p) grid");
  qcorr::cli::SweepSpec sweep_spec;
  sweep_spec.format = Format::kCsv;
  std::string out_path = "-";
  sweep->add_option("--z-steps", sweep_spec.z.count, "grid points in z")->capture_default_str();
  sweep->add_option("--p-steps", sweep_spec.p.count, "grid points in p")->capture_default_str();
  sweep->add_option("--out", out_path, "output file, - for stdout")->capture_default_str();
  sweep->add_option("--format", sweep_spec.format)
      ->transform(CLI::CheckedTransformer(kTableFormats, CLI::ignore_case));

  // verify
  auto* verify = app.add_subcommand("verify", "Closed forms against the oracles on random states");
  int verify_count = 200;
  std::uint64_t verify_seed = 1;
  Format verify_format = Format::kText;
  verify->add_option("--count", verify_count)->check(CLI::PositiveNumber)->capture_default_str();
  verify->add_option("--seed", verify_seed)->capture_default_str();
  verify->add_option("--format", verify_format)
      ->transform(CLI::CheckedTransformer(kTextFormats, CLI::ignore_case));

  // monotonicity
  auto* mono = app.add_subcommand("monotonicity", "LAQC under amplitude damping never grows");
  int mono_count = 100;
  std::uint64_t mono_seed = 1;
  mono->add_option("--count", mono_count)->check(CLI::PositiveNumber)->capture_default_str();
  mono->add_option("--seed", mono_seed)->capture_default_str();

  auto* disc = app.add_subcommand("discrepancies", "Evidence tables for formula inconsistencies");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return qcorr::cli::kExitUsage;
  }

  if (report->parsed()) {
    auto& st = report_opts.state;
    if (*x_opt) {
      st.kind = qcorr::cli::StateSpec::Kind::kX;
      std::copy(x_params.begin(), x_params.end(), st.values.begin());
    } else if (*bloch_opt) {
      st.kind = qcorr::cli::StateSpec::Kind::kBloch;
      std::copy(bloch_params.begin(), bloch_params.end(), st.values.begin());
    } else if (*werner_opt) {
      st.kind = qcorr::cli::StateSpec::Kind::kWerner;
      st.werner_z = werner_z;
    }
    if (*ad_opt) st.damping = damping;
    return qcorr::cli::cmd_report(report_opts, std::cout, std::cerr);
  }
  if (sweep->parsed()) return qcorr::cli::cmd_sweep(sweep_spec, out_path, std::cout, std::cerr);
  if (verify->parsed())
    return qcorr::cli::cmd_verify(verify_count, verify_seed, verify_format, std::cout);
  if (mono->parsed()) return qcorr::cli::cmd_monotonicity(mono_count, mono_seed, std::cout);
  if (disc->parsed()) return qcorr::cli::cmd_discrepancies(std::cout);
  return qcorr::cli::kExitUsage;
}
