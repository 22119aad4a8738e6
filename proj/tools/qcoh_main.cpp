// qcoh: classify quantum channels and compute their coherence measures
// through the Choi representation. See README.md for the file formats.

#include "qcoh/channel_io.hpp"
#include "qcoh/measures.hpp"
#include "qcoh/physics.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitInternal = 4;
constexpr int kExitIo = 5;

// Shortest decimal form that round-trips; locale-independent. Negative
// zero is canonicalized.
std::string fmt(double x) {
  if (x == 0.0) x = 0.0;
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, end);
}

nlohmann::ordered_json classification_json(const qcoh::KrausChannel& ch) {
  nlohmann::ordered_json j;
  j["cptp"] = true;
  j["unital"] = qcoh::is_unital(ch);
  j["incoherent_kraus"] = qcoh::is_incoherent_kraus(ch);
  j["coherence_breaking"] = qcoh::is_coherence_breaking(ch);
  return j;
}

int cmd_report(const std::string& path, std::optional<double> tol) {
  const qcoh::ChannelDocument doc = qcoh::load_channel_document(path);
  const qcoh::KrausChannel ch = qcoh::channel_from_document(doc, tol);
  const qcoh::CoherenceReport report = qcoh::coherence_report(ch);

  nlohmann::ordered_json j;
  if (!doc.name.empty()) j["name"] = doc.name;
  j["dim"] = doc.dim;
  j["classification"] = {{"cptp", true},
                         {"unital", report.unital},
                         {"incoherent_kraus", report.incoherent_kraus},
                         {"coherence_breaking", report.coherence_breaking}};
  j["measures_bits"] = {{"qi_rec", report.qi_rec},
                        {"rec_output_marginal", report.rec_output_marginal},
                        {"asym_discord", report.asym_discord},
                        {"sym_discord", report.sym_discord},
                        {"rec_choi", report.rec_choi},
                        {"rec_ancilla_marginal", report.rec_ancilla_marginal}};
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_classify(const std::string& path, std::optional<double> tol) {
  const qcoh::ChannelDocument doc = qcoh::load_channel_document(path);
  std::optional<qcoh::KrausChannel> ch;
  try {
    ch = qcoh::channel_from_document(doc, tol);
  } catch (const qcoh::validation_error& e) {
    nlohmann::ordered_json j;
    j["cptp"] = false;
    j["error"] = e.what();
    std::cout << j.dump(2) << "\n";
    return kExitValidation;
  }
  nlohmann::ordered_json j = classification_json(*ch);
  if (ch->dim() == 2) {
    const qcoh::QubitAffine affine = qcoh::affine_from_kraus(*ch);
    const auto sv = qcoh::map_singular_values(affine);
    nlohmann::ordered_json a;
    a["tau"] = {affine.shift[0], affine.shift[1], affine.shift[2]};
    a["T"] = nlohmann::ordered_json::array();
    for (int r = 0; r < 3; ++r) {
      a["T"].push_back({affine.map(r, 0), affine.map(r, 1), affine.map(r, 2)});
    }
    a["singular_values"] = {sv[0], sv[1], sv[2]};
    j["affine"] = a;
  }
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open " << path << " for writing\n";
    return kExitIo;
  }
  out << contents;
  out.flush();
  if (!out.good()) {
    std::cerr << "error: failed while writing " << path << "\n";
    return kExitIo;
  }
  return kExitOk;
}

int cmd_ad_sweep(int steps, const std::string& out_path) {
  std::string csv = "p,qi_rec,closed_form,abs_diff\n";
  double previous = 0.0;
  for (int k = 0; k < steps; ++k) {
    const double p = static_cast<double>(k) / static_cast<double>(steps - 1);
    const double qi = qcoh::qi_rec(qcoh::ad_channel(p));
    const double cf = qcoh::ad_coherence_closed_form(p);
    if (k > 0 && qi > previous + 1e-9) {
      throw qcoh::consistency_error("ad-sweep: coherence rose between grid points at p = " +
                                    fmt(p));
    }
    previous = qi;
    csv += fmt(p) + "," + fmt(qi) + "," + fmt(cf) + "," + fmt(std::abs(qi - cf)) + "\n";
  }
  return write_file(out_path, csv);
}

int cmd_phase_cov(double R, double s, double alpha, double beta, double t_max, int steps,
                  const std::string& out_path) {
  qcoh::PhaseCovariantParams params;
  params.coupling_ratio = R;
  params.ohmicity = s;
  params.dephasing_coupling = alpha;
  params.cutoff_ratio = beta;
  if (t_max < 0.0) throw qcoh::validation_error("phase-cov: tmax must be >= 0");
  if (t_max == 0.0) {
    params.t_grid = {0.0};
  } else {
    for (int k = 0; k < steps; ++k) {
      params.t_grid.push_back(t_max * static_cast<double>(k) / static_cast<double>(steps - 1));
    }
  }
  const qcoh::PhaseCovariantTrajectory traj = qcoh::phase_covariant_trajectory(params);

  std::string csv = "lambda_t,Gamma,Gamma_z,kappa,eta_par,eta_perp,coherence\n";
  for (const qcoh::PhaseCovariantFrame& f : traj.frames) {
    csv += fmt(f.t) + "," + fmt(f.gamma) + "," + fmt(f.gamma_z) + "," + fmt(f.kappa) + "," +
           fmt(f.eta_par) + "," + fmt(f.eta_perp) + "," + fmt(f.coherence) + "\n";
  }
  const int rc = write_file(out_path, csv);
  if (rc != kExitOk) return rc;

  std::cout << "rising intervals: " << traj.rising.size();
  for (const qcoh::RisingInterval& r : traj.rising) {
    std::cout << " [" << fmt(traj.frames[r.first].t) << ", " << fmt(traj.frames[r.last].t)
              << "]";
  }
  std::cout << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coherence measures of quantum channels via their Choi states"};
  app.require_subcommand(1);

  double tol_flag = 0.0;
  app.add_option("--tol", tol_flag, "validation tolerance override (applies to input checks)")
      ->check(CLI::PositiveNumber);

  std::string report_path;
  CLI::App* report = app.add_subcommand("report", "compute all coherence measures of a channel");
  report->add_option("file", report_path, "channel JSON document")->required();

  std::string classify_path;
  CLI::App* classify = app.add_subcommand("classify", "classification flags of a channel");
  classify->add_option("file", classify_path, "channel JSON document")->required();

  int ad_steps = 101;
  std::string ad_out;
  CLI::App* ad = app.add_subcommand("ad-sweep", "amplitude damping coherence over p in [0, 1]");
  ad->add_option("--steps", ad_steps, "grid points")->check(CLI::Range(2, 1000000));
  ad->add_option("--out", ad_out, "output CSV path")->required();

  double pc_R = 0.0, pc_s = 0.0, pc_alpha = 1.0, pc_beta = 1.0, pc_tmax = 0.0;
  int pc_steps = 400;
  std::string pc_out;
  CLI::App* pc =
      app.add_subcommand("phase-cov", "phase-covariant qubit coherence trajectory at T = 0");
  pc->add_option("--R", pc_R, "coupling ratio gamma0/lambda")->required();
  pc->add_option("--s", pc_s, "Ohmicity of the dephasing bath")->required();
  pc->add_option("--alpha", pc_alpha, "dephasing coupling");
  pc->add_option("--beta", pc_beta, "cutoff ratio omega_c/lambda");
  pc->add_option("--tmax", pc_tmax, "largest lambda*t")->required();
  pc->add_option("--steps", pc_steps, "grid points")->check(CLI::Range(2, 1000000));
  pc->add_option("--out", pc_out, "output CSV path")->required();

  CLI11_PARSE(app, argc, argv);

  const std::optional<double> tol =
      app.count("--tol") > 0 ? std::optional<double>(tol_flag) : std::nullopt;

  try {
    if (report->parsed()) return cmd_report(report_path, tol);
    if (classify->parsed()) return cmd_classify(classify_path, tol);
    if (ad->parsed()) return cmd_ad_sweep(ad_steps, ad_out);
    if (pc->parsed()) return cmd_phase_cov(pc_R, pc_s, pc_alpha, pc_beta, pc_tmax, pc_steps, pc_out);
  } catch (const qcoh::document_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const qcoh::consistency_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const qcoh::validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}
