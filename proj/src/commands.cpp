#include "qcorr/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "qcorr/sampling.hpp"

namespace qcorr::cli {

namespace {

using json = nlohmann::ordered_json;

std::string describe(const XState& s) {
  std::ostringstream os;
  os << "a=" << format_number(s.a()) << " b=" << format_number(s.b())
     << " c=" << format_number(s.c()) << " z=" << format_number(s.z())
     << " w=" << format_number(s.w());
  return os.str();
}

json state_json(const XState& s) {
  const BlochX v = bloch_from_x(s);
  return json{{"a", s.a()}, {"b", s.b()}, {"c", s.c()}, {"d", s.d()},
              {"z", s.z()}, {"w", s.w()},
              {"bloch", {v.x3, v.y3, v.t1, v.t2, v.t3}}};
}

std::string residual_string(double r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", r);
  return buf;
}

void line(std::ostream& out, const std::string& label, double value,
          const char* provenance) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%-22s %-20s [%s]\n", label.c_str(),
                format_number(value).c_str(), provenance);
  out << buf;
}

}  // namespace

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

XState resolve_state(const StateSpec& spec) {
  XState s = XState::make(0.25, 0.25, 0.25, 0.0, 0.0);
  switch (spec.kind) {
    case StateSpec::Kind::kX: {
      const auto& v = spec.values;
      s = XState::make(v[0], v[1], v[2], v[3], v[4]);
      break;
    }
    case StateSpec::Kind::kBloch: {
      const auto& v = spec.values;
      s = x_from_bloch(BlochX{v[0], v[1], v[2], v[3], v[4]});
      break;
    }
    case StateSpec::Kind::kWerner:
      if (!(spec.werner_z >= 0.0 && spec.werner_z <= 1.0))
        throw UsageError("--werner z must lie in [0, 1]");
      s = werner(spec.werner_z);
      break;
  }
  if (spec.damping) {
    const double p = *spec.damping;
    if (!(p >= 0.0 && p <= 1.0)) throw UsageError("--ad p must lie in [0, 1]");
    s = evolve_x_ad(s, p);
  }
  return s;
}

// --- report ---------------------------------------------------------------

int cmd_report(const ReportOptions& opts, std::ostream& out, std::ostream& err) {
  XState s = XState::make(0.25, 0.25, 0.25, 0.0, 0.0);
  try {
    s = resolve_state(opts.state);
  } catch (const std::invalid_argument& e) {
    err << "invalid state: " << e.what() << "\n";
    return kExitUsage;
  }
  const CorrelationReport r = report(s);
  const DensityMatrix m = to_dense(s);

  std::optional<oracle::OptimizationResult> basis, laqc_bf, cc_bf, disc_bf;
  if (opts.with_oracle) {
    basis = oracle::find_optimal_basis(m);
    laqc_bf = oracle::laqc_bruteforce(m, *basis);
    cc_bf = oracle::classical_correlations_at(m, *basis);
    disc_bf = oracle::discord_b_bruteforce(m);
  }

  if (opts.format == Format::kJson) {
    json j;
    j["state"] = state_json(s);
    j["class"] = to_string(r.xclass.kind);
    j["laqc"] = {{"value", r.laqc}, {"source", "closed-form"}};
    if (r.classical) j["classical"] = {{"value", *r.classical}, {"source", "closed-form"}};
    j["discord_b"] = {{"value", r.discord_b}, {"source", "closed-form (MCDM)"}};
    j["concurrence_x"] = {{"value", r.concurrence_x}, {"source", "closed-form (prefactor 1/2)"}};
    j["concurrence_wootters"] = {{"value", r.concurrence_wootters}, {"source", "Wootters spectrum"}};
    if (opts.with_oracle) {
      j["oracle"] = {{"basis", basis->argument},
                     {"laqc", laqc_bf->value},
                     {"classical", cc_bf->value},
                     {"discord_b", disc_bf->value}};
    }
    out << j.dump(2) << "\n";
    return kExitOk;
  }

  out << "state                  " << describe(s) << "\n";
  out << "class                  " << to_string(r.xclass.kind) << "\n";
  line(out, "laqc", r.laqc, "closed-form");
  if (r.classical) line(out, "classical", *r.classical, "closed-form");
  line(out, "discord_b", r.discord_b, "closed-form MCDM");
  line(out, "concurrence_x", r.concurrence_x, "closed-form, prefactor 1/2");
  line(out, "concurrence_wootters", r.concurrence_wootters, "Wootters spectrum");
  if (opts.with_oracle) {
    line(out, "laqc", laqc_bf->value, "oracle");
    line(out, "classical", cc_bf->value, "oracle");
    line(out, "discord_b", disc_bf->value, "oracle");
  }
  return kExitOk;
}

// --- sweep ----------------------------------------------------------------

double Range::at(int i) const {
  if (i == count - 1) return stop;
  return start + (stop - start) * i / (count - 1);
}

void validate(const SweepSpec& spec) {
  for (const Range* r : {&spec.z, &spec.p}) {
    if (r->count < 2) throw UsageError("sweep step counts must be at least 2");
    if (!(r->start >= 0.0 && r->stop <= 1.0 && r->start <= r->stop))
      throw UsageError("sweep ranges must lie within [0, 1]");
  }
}

std::vector<SweepRow> sweep(const SweepSpec& spec) {
  validate(spec);
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(spec.z.count) * spec.p.count);
  for (int i = 0; i < spec.z.count; ++i) {
    for (int k = 0; k < spec.p.count; ++k) {
      const DampingParams dp = DampingParams::make(spec.z.at(i), spec.p.at(k));
      const XState evolved = x_from_bloch(werner_ad_bloch(dp));
      SweepRow row{dp.z, dp.p, laqc_werner_ad(dp), discord_b_mcdm(evolved),
                   concurrence_werner_ad(dp), 0.0};
      row.surface = row.discord - row.laqc;
      rows.push_back(row);
    }
  }
  return rows;
}

void write_sweep(const std::vector<SweepRow>& rows, Format format, std::ostream& out) {
  if (format == Format::kJson) {
    json arr = json::array();
    for (const SweepRow& r : rows)
      arr.push_back({{"z", r.z}, {"p", r.p}, {"laqc", r.laqc}, {"discord", r.discord},
                     {"concurrence", r.concurrence}, {"surface", r.surface}});
    out << arr.dump(1) << "\n";
    return;
  }
  out << "z,p,laqc,discord,concurrence,surface\n";
  for (const SweepRow& r : rows)
    out << format_number(r.z) << ',' << format_number(r.p) << ','
        << format_number(r.laqc) << ',' << format_number(r.discord) << ','
        << format_number(r.concurrence) << ',' << format_number(r.surface) << '\n';
}

int cmd_sweep(const SweepSpec& spec, const std::string& path, std::ostream& out,
              std::ostream& err) {
  std::vector<SweepRow> rows;
  try {
    rows = sweep(spec);
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << "\n";
    return kExitUsage;
  }
  if (path.empty() || path == "-") {
    write_sweep(rows, spec.format, out);
    return kExitOk;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    err << "cannot open " << path << " for writing\n";
    return kExitFailure;
  }
  write_sweep(rows, spec.format, file);
  file.close();
  if (!file) {
    err << "write to " << path << " failed\n";
    return kExitFailure;
  }
  return kExitOk;
}

// --- verify ---------------------------------------------------------------

VerifyResult run_verify(int count, std::uint64_t seed,
                        const oracle::SearchOptions& search,
                        const VerifyThresholds& thresholds) {
  using clock = std::chrono::steady_clock;
  VerifyResult result;
  result.summary = {{"laqc", 0.0, thresholds.laqc, true},
                    {"classical", 0.0, thresholds.classical, true},
                    {"discord_b", 0.0, thresholds.discord, true},
                    {"concurrence_factor2", 0.0, thresholds.concurrence, true}};
  auto push = [&](std::size_t q, const std::string& state, double closed,
                  double oracle_value, clock::time_point since) {
    VerificationRecord rec{state, result.summary[q].quantity, closed, oracle_value,
                           std::abs(closed - oracle_value),
                           std::chrono::duration<double>(clock::now() - since).count()};
    result.summary[q].max_residual = std::max(result.summary[q].max_residual, rec.residual);
    result.records.push_back(std::move(rec));
  };

  Lcg64 rng(seed);
  for (int n = 0; n < count; ++n) {
    const XState s = random_x_state(rng);
    const DensityMatrix m = to_dense(s);
    const std::string label = describe(s);

    auto t0 = clock::now();
    const oracle::OptimizationResult basis = oracle::find_optimal_basis(m, search);
    const double laqc_oracle = oracle::laqc_bruteforce(m, basis, search).value;
    push(0, label, laqc(s), laqc_oracle, t0);

    // The oracle value at its own minimising basis is compared against zero.
    t0 = clock::now();
    const double cc_oracle = oracle::classical_correlations_at(m, basis).value;
    const double cc_closed = classify(s).kind == XSymmetry::kAsymmetric
                                 ? classical_correlations_asymmetric(s)
                                 : 0.0;
    push(1, label, cc_closed, cc_oracle, t0);

    t0 = clock::now();
    push(2, label, discord_b_mcdm(s), oracle::discord_b_bruteforce(m, search).value, t0);

    t0 = clock::now();
    push(3, label, 2.0 * concurrence_x(s), concurrence_wootters(m), t0);
  }
  for (QuantitySummary& q : result.summary) {
    q.pass = q.max_residual <= q.threshold;
    result.pass = result.pass && q.pass;
  }
  return result;
}

void write_verify(const VerifyResult& result, Format format, std::ostream& out) {
  if (format == Format::kJson) {
    json j;
    j["records"] = json::array();
    for (const VerificationRecord& r : result.records)
      j["records"].push_back({{"state", r.state}, {"quantity", r.quantity},
                              {"closed", r.closed}, {"oracle", r.oracle},
                              {"residual", r.residual}});
    j["summary"] = json::array();
    for (const QuantitySummary& q : result.summary)
      j["summary"].push_back({{"quantity", q.quantity}, {"max_residual", q.max_residual},
                              {"threshold", q.threshold}, {"pass", q.pass}});
    j["pass"] = result.pass;
    out << j.dump(2) << "\n";
    return;
  }
  out << "state,quantity,closed,oracle,residual\n";
  for (const VerificationRecord& r : result.records)
    out << r.state << ',' << r.quantity << ',' << format_number(r.closed) << ','
        << format_number(r.oracle) << ',' << residual_string(r.residual) << '\n';
  out << "\nsummary\n";
  for (const QuantitySummary& q : result.summary)
    out << "  " << q.quantity << " max_residual=" << residual_string(q.max_residual)
        << " threshold=" << residual_string(q.threshold) << ' '
        << (q.pass ? "PASS" : "FAIL") << '\n';
  out << (result.pass ? "PASS" : "FAIL") << '\n';
}

int cmd_verify(int count, std::uint64_t seed, Format format, std::ostream& out) {
  const VerifyResult result = run_verify(count, seed);
  write_verify(result, format, out);
  return result.pass ? kExitOk : kExitFailure;
}

// --- monotonicity ---------------------------------------------------------

MonotonicityResult run_monotonicity(int count, std::uint64_t seed, double slack) {
  MonotonicityResult result;
  Lcg64 rng(seed);
  for (int n = 0; n < count; ++n) {
    const XState s = n % 3 == 0   ? random_x_state(rng)
                     : n % 3 == 1 ? random_symmetric_x_state(rng)
                                  : random_antisymmetric_x_state(rng);
    const double before = laqc(s);
    ++result.states;
    for (int k = 0; k <= 20; ++k) {
      const double p = k / 20.0;
      const double after = laqc(evolve_x_ad(s, p));
      ++result.checks;
      result.max_increase = std::max(result.max_increase, after - before);
      if (k == 0)
        result.max_p0_deviation = std::max(result.max_p0_deviation, std::abs(after - before));
      if (after > before + slack)
        result.violations.push_back({s, classify(s).kind, p, before, after});
    }
  }
  return result;
}

int cmd_monotonicity(int count, std::uint64_t seed, std::ostream& out) {
  const MonotonicityResult r = run_monotonicity(count, seed);
  out << "states " << r.states << "\nchecks " << r.checks << "\n";
  out << "max L(rho') - L(rho) " << residual_string(r.max_increase) << "\n";
  out << "max |L(rho') - L(rho)| at p=0 " << residual_string(r.max_p0_deviation) << "\n";
  out << "violations " << r.violations.size() << "\n";
  for (const MonotonicityViolation& v : r.violations) {
    const BlochX b = bloch_from_x(v.state);
    out << "  " << describe(v.state) << " class=" << to_string(v.kind)
        << " bloch=(" << format_number(b.x3) << ", " << format_number(b.y3) << ", "
        << format_number(b.t1) << ", " << format_number(b.t2) << ", "
        << format_number(b.t3) << ") p=" << format_number(v.p)
        << " L=" << format_number(v.before) << " L'=" << format_number(v.after) << "\n";
  }
  return r.violations.empty() ? kExitOk : kExitFailure;
}

// --- discrepancies --------------------------------------------------------

int cmd_discrepancies(std::ostream& out) {
  char buf[160];

  out << "1. X-state concurrence prefactor\n"
         "   max{0, |w|-sqrt(bc), |z|-sqrt(ad)} is half the Wootters concurrence.\n";
  std::snprintf(buf, sizeof buf, "   %-24s %-14s %-14s %s\n", "state", "x-formula",
                "wootters", "ratio");
  out << buf;
  auto conc_row = [&](const std::string& name, const XState& s) {
    const double cx = concurrence_x(s), cw = concurrence_wootters(to_dense(s));
    std::snprintf(buf, sizeof buf, "   %-24s %-14s %-14s %s\n", name.c_str(),
                  format_number(cx).c_str(), format_number(cw).c_str(),
                  cx > 0.0 ? format_number(cw / cx).c_str() : "-");
    out << buf;
  };
  conc_row("singlet", werner(1.0));
  conc_row("werner z=0.8", werner(0.8));
  conc_row("werner z=0.5", werner(0.5));
  conc_row("werner z=0.3", werner(0.3));
  conc_row("bell |00>+|11>", XState::make(0.5, 0.0, 0.0, 0.0, 0.5));

  out << "\n2. Werner state under amplitude damping: N1 term\n"
         "   printed: 1 - log2(1-r^2)/2 + r atanh(r)/ln2\n"
         "   MCDM:    1 - g(r) = 1 - log2(1-r^2)/2 - r atanh(r)/ln2,  r = z sqrt(1-p)\n";
  std::snprintf(buf, sizeof buf, "   %-6s %-6s %-16s %-18s %-18s\n", "z", "p", "r",
                "N1 printed", "N1 MCDM");
  out << buf;
  const std::array<std::array<double, 2>, 7> n1_points{
      {{0.0, 0.3}, {0.3, 0.5}, {0.6, 0.5}, {0.9, 0.5}, {0.9, 0.1}, {0.99, 0.01}, {0.999, 0.0}}};
  for (const auto& [z, p] : n1_points) {
    const DampingParams dp = DampingParams::make(z, p);
    const double r = z * std::sqrt(1.0 - p);
    std::snprintf(buf, sizeof buf, "   %-6s %-6s %-16s %-18s %-18s\n",
                  format_number(z).c_str(), format_number(p).c_str(),
                  format_number(r).c_str(), format_number(n1_werner_printed(dp)).c_str(),
                  format_number(n1(0.0, r)).c_str());
    out << buf;
  }

  out << "\n3. Werner state under amplitude damping: full discord formula\n"
         "   The printed form also uses the p=0 Werner spectrum for S(rho) and drops\n"
         "   the constant 1 of S(rho_B). Corrected form vs MCDM on the evolved state\n"
         "   vs the measurement oracle:\n";
  std::snprintf(buf, sizeof buf, "   %-5s %-5s %-15s %-15s %-15s %-15s %s\n", "z", "p",
                "printed", "corrected", "mcdm", "oracle", "|corr-oracle|");
  out << buf;
  const std::array<std::array<double, 2>, 6> d_points{
      {{1.0, 0.0}, {0.8, 0.36}, {0.5, 0.5}, {0.9, 0.1}, {0.3, 0.9}, {0.6, 0.0}}};
  for (const auto& [z, p] : d_points) {
    const DampingParams dp = DampingParams::make(z, p);
    const XState evolved = x_from_bloch(werner_ad_bloch(dp));
    const double corrected = discord_werner_ad(dp);
    const double bf = oracle::discord_b_bruteforce(to_dense(evolved)).value;
    const double printed = z < 1.0 || p > 0.0 ? discord_werner_ad_printed(dp)
                                              : std::numeric_limits<double>::infinity();
    std::snprintf(buf, sizeof buf, "   %-5s %-5s %-15s %-15s %-15s %-15s %s\n",
                  format_number(z).c_str(), format_number(p).c_str(),
                  format_number(printed).c_str(), format_number(corrected).c_str(),
                  format_number(discord_b_mcdm(evolved)).c_str(),
                  format_number(bf).c_str(), residual_string(std::abs(corrected - bf)).c_str());
    out << buf;
  }

  out << "\n4. g- for anti-symmetric states\n"
         "   With the last weight (1 - T3)/2 the table weights sum to 1 - T3; the\n"
         "   implemented weight is (1 + T3)/2.\n";
  std::snprintf(buf, sizeof buf, "   %-8s %-22s %-22s\n", "T3", "weights sum (printed)",
                "weights sum (used)");
  out << buf;
  for (double t3 : {-0.4, 0.0, 0.3}) {
    // Diagonal weights (1 - T3 +- 2 x3)/4 sum to (1 - T3)/2.
    const double base = 0.5 * (1.0 - t3);
    std::snprintf(buf, sizeof buf, "   %-8s %-22s %-22s\n", format_number(t3).c_str(),
                  format_number(base + 0.5 * (1.0 - t3)).c_str(),
                  format_number(base + 0.5 * (1.0 + t3)).c_str());
    out << buf;
  }

  out << "\n5. Selection rule for the optimal computational basis\n"
         "   Minimising the relative entropy S(chi) - S(rho) picks the least\n"
         "   dephasing product basis, and its complementary information can exceed\n"
         "   g(T2). Minimising the dephased mutual information picks (0, 0, pi/2, 0)\n"
         "   and yields g(T2).\n";
  std::snprintf(buf, sizeof buf, "   %-5s %-16s %-16s %-16s %-16s %s\n", "seed", "g(T1)",
                "g(T2)", "laqc (min I)", "laqc (min S)", "basis (min S) theta1 theta2");
  out << buf;
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    Lcg64 rng(seed);
    const XState s = random_x_state(rng);
    const DensityMatrix m = to_dense(s);
    const BlochX v = bloch_from_x(s);
    oracle::SearchOptions re;
    re.criterion = oracle::BasisCriterion::kRelativeEntropy;
    const oracle::OptimizationResult re_basis = oracle::find_optimal_basis(m, re);
    std::snprintf(buf, sizeof buf, "   %-5llu %-16s %-16s %-16s %-16s %.6f %.6f\n",
                  static_cast<unsigned long long>(seed), format_number(g_j(v.t1)).c_str(),
                  format_number(g_j(v.t2)).c_str(),
                  format_number(oracle::laqc_bruteforce(m).value).c_str(),
                  format_number(oracle::laqc_bruteforce(m, re_basis, re).value).c_str(),
                  re_basis.argument[0], re_basis.argument[2]);
    out << buf;
  }
  return kExitOk;
}

}  // namespace qcorr::cli
