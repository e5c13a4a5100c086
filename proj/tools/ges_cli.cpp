#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "ges/json_io.hpp"
#include "ges/measures.hpp"

using namespace ges;

namespace {

struct RunConfig {
  uint64_t seed = 1;
  int restarts = 200;
  std::string out_path;  // empty = stdout
};

Json read_json(const std::string& path) {
  if (path.empty() || path == "-") {
    Json j;
    std::cin >> j;
    return j;
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  Json j;
  in >> j;
  return j;
}

void emit(const RunConfig& cfg, Json j) {
  j["seed"] = cfg.seed;
  std::string text = j.dump(2) + "\n";
  if (cfg.out_path.empty() || cfg.out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(cfg.out_path);
    if (!out) throw std::invalid_argument("cannot write '" + cfg.out_path + "'");
    out << text;
  }
}

std::vector<double> parse_csv_doubles(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
  return out;
}

std::vector<RatioPair> parse_ratios(const std::string& s) {
  std::vector<RatioPair> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t colon = tok.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("ratio '" + tok + "' is not of the form r:s");
    out.emplace_back(std::stol(tok.substr(0, colon)), std::stol(tok.substr(colon + 1)));
  }
  return out;
}

template <size_t N>
std::array<double, N> lambda_array(const std::vector<double>& v, const char* family) {
  if (v.size() != N)
    throw std::invalid_argument(std::string(family) + " needs exactly " +
                                std::to_string(N) + " lambda values");
  std::array<double, N> a{};
  std::copy(v.begin(), v.end(), a.begin());
  return a;
}

template <size_t N>
std::array<RatioPair, N> ratio_array(const std::vector<RatioPair>& v, const char* family) {
  if (v.size() != N)
    throw std::invalid_argument(std::string(family) + " needs exactly " +
                                std::to_string(N) + " ratios");
  std::array<RatioPair, N> a{};
  std::copy(v.begin(), v.end(), a.begin());
  return a;
}

Bipartition parse_cut(const std::string& s, int n) {
  std::vector<int> side;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) side.push_back(std::stoi(tok));
  return Bipartition::canonical(std::move(side), n);
}

int cmd_construct(const RunConfig& cfg, const std::string& family,
                  const std::string& lambda_csv, const std::string& ratio_csv,
                  bool exact, int d_param, const std::string& subspace_path,
                  const std::string& channel_path, int party) {
  std::vector<double> lam =
      lambda_csv.empty() ? std::vector<double>{} : parse_csv_doubles(lambda_csv);
  std::vector<RatioPair> ratios =
      ratio_csv.empty() ? std::vector<RatioPair>{} : parse_ratios(ratio_csv);

  auto fill = [&](size_t n, double def) {
    if (lam.empty()) lam.assign(n, def);
  };
  auto fill_ratios = [&](size_t n) {
    if (ratios.empty()) ratios.assign(n, {1, 1});
  };

  if (exact) {
    ExactSubspace w;
    if (family == "ces3x3") {
      fill_ratios(4);
      w = ces_3x3_exact(ratio_array<4>(ratios, "ces3x3"));
    } else if (family == "antisym") {
      w = antisymmetric_subspace_exact(d_param > 0 ? d_param : 3);
    } else if (family == "ges3qubit") {
      fill_ratios(3);
      w = ges_3qubit_exact(ratio_array<3>(ratios, "ges3qubit"));
    } else if (family == "ges3qubit-orth") {
      fill_ratios(3);
      w = ges_3qubit_orthogonal_exact(ratio_array<3>(ratios, "ges3qubit-orth"));
    } else if (family == "ces4x4") {
      fill_ratios(7);
      w = ces_4x4_exact(ratio_array<7>(ratios, "ces4x4"));
    } else if (family == "ges4qubit") {
      fill_ratios(7);
      w = ges_4qubit_exact(ratio_array<7>(ratios, "ges4qubit"));
    } else if (family == "ges3qutrit") {
      fill_ratios(6);
      w = ges_3qutrit_exact(ratio_array<6>(ratios, "ges3qutrit"));
    } else if (family == "hw-ges") {
      w = hw_ges_exact();
    } else {
      throw std::invalid_argument("family '" + family + "' has no exact variant");
    }
    emit(cfg, to_json(w));
    return 0;
  }

  Subspace w;
  if (family == "ces3x3") {
    fill(4, 0.5);
    w = ces_3x3(lambda_array<4>(lam, "ces3x3"));
  } else if (family == "antisym") {
    w = antisymmetric_subspace(d_param > 0 ? d_param : 3);
  } else if (family == "ges3qubit") {
    fill(3, 0.5);
    auto a = lambda_array<3>(lam, "ges3qubit");
    w = ges_3qubit(a[0], a[1], a[2]);
  } else if (family == "ges3qubit-orth") {
    fill(3, 0.5);
    auto a = lambda_array<3>(lam, "ges3qubit-orth");
    w = ges_3qubit_orthogonal(a[0], a[1], a[2]);
  } else if (family == "ces4x4") {
    fill(7, 0.5);
    w = ces_4x4(lambda_array<7>(lam, "ces4x4"));
  } else if (family == "ges4qubit") {
    fill(7, 0.5);
    w = ges_4qubit(lambda_array<7>(lam, "ges4qubit"));
  } else if (family == "ges3qutrit") {
    w = ges_3qutrit();
  } else if (family == "hw-ges") {
    w = hw_ges();
  } else if (family == "lift") {
    Subspace ces = subspace_from_json(read_json(subspace_path));
    KrausChannel ch = channel_from_json(read_json(channel_path));
    // caller-side certification: the channel must have output purity below one
    double nu2 = max_output_norm(ch, 2.0, cfg.restarts, cfg.seed);
    if (nu2 >= 1.0 - 1e-9)
      throw std::invalid_argument("lift rejected: channel output purity reaches one (nu2 = " +
                                  std::to_string(nu2) + ")");
    w = lift_ges(ces, isometry_from_kraus(ch), party);
  } else {
    throw std::invalid_argument("unknown family '" + family + "'");
  }
  emit(cfg, to_json(w));
  return 0;
}

int cmd_certify(const RunConfig& cfg, const std::string& in_path,
                const std::string& exact_in_path, const std::string& mode_arg) {
  CertifyOptions opts;
  opts.restarts = cfg.restarts;
  opts.seed = cfg.seed;

  Json j = read_json(in_path);
  std::vector<Certificate> certs;
  bool input_exact = j.contains("exact") && j.at("exact").get<bool>();
  std::string mode = mode_arg;
  if (mode == "auto")
    mode = !exact_in_path.empty() ? "both" : (input_exact ? "exact" : "numeric");

  if (input_exact) {
    ExactSubspace w = exact_subspace_from_json(j);
    if (mode == "numeric")
      certs = certify_ges(to_subspace(w), opts);
    else if (mode == "both")
      certs = certify_ges_both(to_subspace(w), w, opts);
    else
      certs = certify_ges_exact(w, opts);
  } else {
    Subspace w = subspace_from_json(j);
    if (mode == "exact" || (mode == "both" && exact_in_path.empty()))
      throw std::invalid_argument("exact mode needs exact amplitudes (--exact-in or an exact file)");
    if (!exact_in_path.empty()) {
      ExactSubspace sib = exact_subspace_from_json(read_json(exact_in_path));
      certs = certify_ges_both(w, sib, opts);
    } else {
      certs = certify_ges(w, opts);
    }
  }

  Json out;
  out["certificates"] = to_json(certs);
  out["ges"] = all_entangled(certs);
  out["restarts"] = opts.restarts;
  emit(cfg, out);
  for (const Certificate& c : certs)
    if (c.verdict == Verdict::Inconclusive) return 3;
  return 0;
}

int cmd_measure(const RunConfig& cfg, const std::string& in_path,
                const std::string& measure, const std::string& cut_csv, bool gme) {
  Json j = read_json(in_path);
  MeasureKind kind;
  if (measure == "geometric")
    kind = MeasureKind::Geometric;
  else if (measure == "concurrence")
    kind = MeasureKind::Concurrence;
  else if (measure == "negativity")
    kind = MeasureKind::Negativity;
  else
    throw std::invalid_argument("unknown measure '" + measure + "'");

  Json out;
  out["measure"] = measure;
  if (j.contains("amplitudes")) {
    PureState psi = pure_state_from_json(j);
    if (gme) {
      out["gme"] = true;
      out["value"] = gme_pure(psi, kind);
    } else {
      Bipartition cut = cut_csv.empty() ? all_bipartitions(psi.dims.count()).front()
                                        : parse_cut(cut_csv, psi.dims.count());
      out["cut"] = cut.side_a;
      switch (kind) {
        case MeasureKind::Geometric: out["value"] = geometric_pure(psi, cut); break;
        case MeasureKind::Concurrence: out["value"] = concurrence_pure(psi, cut); break;
        case MeasureKind::Negativity: out["value"] = negativity(projector(psi), cut); break;
      }
    }
  } else {
    DensityMatrix rho = density_from_json(j);
    if (kind != MeasureKind::Negativity)
      throw std::invalid_argument("mixed-state inputs support only the negativity");
    if (gme)
      throw std::invalid_argument("GME minima over mixed states are not computed, only bounded; use `bound`");
    Bipartition cut = cut_csv.empty() ? all_bipartitions(rho.dims.count()).front()
                                      : parse_cut(cut_csv, rho.dims.count());
    out["cut"] = cut.side_a;
    out["value"] = negativity(rho, cut);
  }
  emit(cfg, out);
  return 0;
}

int cmd_bound(const RunConfig& cfg, const std::string& rho_path,
              const std::string& subspace_path, std::optional<double> g,
              std::optional<int> d, const std::string& spectrum_csv) {
  DensityMatrix rho = density_from_json(read_json(rho_path));
  Subspace w = subspace_from_json(read_json(subspace_path));
  BoundReport r = g ? gme_bounds(rho, w, *g, d)
                    : gme_bounds_auto(rho, w, cfg.restarts, cfg.seed);
  if (!spectrum_csv.empty())
    r.robustness_spectrum = spectrum_robustness(w, r.g_gme_used, parse_csv_doubles(spectrum_csv));
  emit(cfg, to_json(r));
  return 0;
}

int cmd_robustness(const RunConfig& cfg, const std::string& subspace_path, double g,
                   const std::string& spectrum_csv) {
  Subspace w = subspace_from_json(read_json(subspace_path));
  Json out;
  out["g_gme_used"] = g;
  out["robustness_white"] = white_noise_robustness(w, g);
  if (!spectrum_csv.empty())
    out["robustness_spectrum"] = spectrum_robustness(w, g, parse_csv_doubles(spectrum_csv));
  emit(cfg, out);
  return 0;
}

int cmd_channel(const RunConfig& cfg, const std::string& action,
                const std::string& in_path, const std::string& p_str, int d) {
  if (action == "holevo-werner") {
    emit(cfg, to_json(holevo_werner(d > 0 ? d : 3)));
    return 0;
  }
  KrausChannel ch = channel_from_json(read_json(in_path));
  Json out;
  if (action == "validate") {
    out["in_dim"] = ch.in_dim;
    out["out_dim"] = ch.out_dim;
    out["kraus_count"] = ch.env_dim();
    out["trace_preserving"] = true;  // channel_from_json already enforced it
    out["norm_condition"] = kraus_norm_condition(ch);
    out["norm_condition_all"] = kraus_norm_condition_all(ch);
  } else if (action == "isometry") {
    Isometry v = isometry_from_kraus(ch);
    Json rows = Json::array();
    for (long r = 0; r < v.matrix.rows(); ++r) {
      Json row = Json::array();
      for (long c = 0; c < v.matrix.cols(); ++c)
        row.push_back(Json{{"re", v.matrix(r, c).real()}, {"im", v.matrix(r, c).imag()}});
      rows.push_back(std::move(row));
    }
    out["in_dim"] = v.in_dim;
    out["out_dims"] = {v.out_dims.first, v.out_dims.second};
    out["matrix"] = std::move(rows);
  } else if (action == "max-norm") {
    double p = (p_str == "inf") ? kInfP : std::stod(p_str);
    out["p"] = p_str;
    out["restarts"] = cfg.restarts;
    out["value"] = max_output_norm(ch, p, cfg.restarts, cfg.seed);
  } else {
    throw std::invalid_argument("unknown channel action '" + action + "'");
  }
  emit(cfg, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"construction, certification and entanglement bounds for genuinely entangled subspaces"};
  app.require_subcommand(1);

  RunConfig cfg;
  double tol_structural = 0, tol_spectral = 0;
  app.add_option("--seed", cfg.seed, "seed for all randomized routines");
  app.add_option("--restarts", cfg.restarts, "restart count for seesaw and ascent");
  app.add_option("--tol-structural", tol_structural, "override the structural tolerance");
  app.add_option("--tol-spectral", tol_spectral, "override the spectral tolerance");
  std::string format = "json";
  app.add_option("--format", format, "output format (json)");

  auto* construct = app.add_subcommand("construct", "emit a subspace family as JSON");
  std::string family, lambda_csv, ratio_csv, sub_path, chan_path;
  bool exact = false;
  int d_param = 0, party = 1;
  construct->add_option("family", family,
                        "ces3x3 | antisym | ges3qubit | ges3qubit-orth | ces4x4 | "
                        "ges4qubit | ges3qutrit | hw-ges | lift")
      ->required();
  construct->add_option("--lambda", lambda_csv, "comma-separated parameters in (0,1)");
  construct->add_option("--ratios", ratio_csv, "comma-separated integer ratios r:s for --exact");
  construct->add_flag("--exact", exact, "emit the rationalized exact sibling");
  construct->add_option("--d", d_param, "local dimension (antisym)");
  construct->add_option("--subspace", sub_path, "input subspace (lift)");
  construct->add_option("--channel", chan_path, "input channel (lift)");
  construct->add_option("--party", party, "party the isometry acts on (lift)");
  construct->add_option("-o,--out", cfg.out_path, "output file (default stdout)");

  auto* certify = app.add_subcommand("certify", "per-bipartition entanglement certificates");
  std::string cert_in = "-", exact_in, mode = "auto";
  certify->add_option("--in", cert_in, "subspace JSON (default stdin)");
  certify->add_option("--exact-in", exact_in, "rationalized sibling JSON for mode=both");
  certify->add_option("--mode", mode, "numeric | exact | both");
  certify->add_option("-o,--out", cfg.out_path, "output file");

  auto* measure = app.add_subcommand("measure", "pure-state entanglement measures");
  std::string meas_in = "-", meas = "geometric", cut_csv;
  bool gme = false;
  measure->add_option("--in", meas_in, "state JSON (default stdin)");
  measure->add_option("--measure", meas, "geometric | concurrence | negativity");
  measure->add_option("--cut", cut_csv, "bipartition side A, e.g. 0,2");
  measure->add_flag("--gme", gme, "minimize over all bipartitions");
  measure->add_option("-o,--out", cfg.out_path, "output file");

  auto* bound = app.add_subcommand("bound", "GME measure lower bounds from a subspace overlap");
  std::string rho_path, bound_sub, spectrum_csv;
  double g_val = -1;
  int d_val = 0;
  bound->add_option("--rho", rho_path, "density matrix JSON")->required();
  bound->add_option("--subspace", bound_sub, "subspace JSON")->required();
  bound->add_option("--g", g_val, "geometric GME measure of the subspace (else measured)");
  bound->add_option("--d", d_val, "local dimension for the concurrence prefactor");
  bound->add_option("--spectrum", spectrum_csv, "noise spectrum, descending, summing to 1");
  bound->add_option("-o,--out", cfg.out_path, "output file");

  auto* robustness = app.add_subcommand("robustness", "noise-mixing thresholds");
  std::string rob_sub;
  double rob_g = 0.5;
  std::string rob_spectrum;
  robustness->add_option("--subspace", rob_sub, "subspace JSON")->required();
  robustness->add_option("--g", rob_g, "geometric GME measure")->required();
  robustness->add_option("--spectrum", rob_spectrum, "noise spectrum");
  robustness->add_option("-o,--out", cfg.out_path, "output file");

  auto* channel = app.add_subcommand("channel", "channel utilities");
  std::string action, chan_in = "-", p_str = "2";
  int hw_d = 3;
  channel->add_option("action", action, "validate | isometry | max-norm | holevo-werner")
      ->required();
  channel->add_option("--in", chan_in, "channel JSON (default stdin)");
  channel->add_option("--p", p_str, "norm exponent (> 1, or 'inf')");
  channel->add_option("--d", hw_d, "dimension for holevo-werner");
  channel->add_option("-o,--out", cfg.out_path, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (tol_structural > 0) tolerances().structural = tol_structural;
  if (tol_spectral > 0) tolerances().spectral = tol_spectral;
  if (format != "json") {
    std::cerr << "error: unsupported format '" << format << "'\n";
    return 2;
  }

  try {
    if (construct->parsed())
      return cmd_construct(cfg, family, lambda_csv, ratio_csv, exact, d_param,
                           sub_path, chan_path, party);
    if (certify->parsed()) return cmd_certify(cfg, cert_in, exact_in, mode);
    if (measure->parsed()) return cmd_measure(cfg, meas_in, meas, cut_csv, gme);
    if (bound->parsed())
      return cmd_bound(cfg, rho_path, bound_sub,
                       g_val > 0 ? std::optional<double>(g_val) : std::nullopt,
                       d_val > 0 ? std::optional<int>(d_val) : std::nullopt, spectrum_csv);
    if (robustness->parsed()) return cmd_robustness(cfg, rob_sub, rob_g, rob_spectrum);
    if (channel->parsed()) return cmd_channel(cfg, action, chan_in, p_str, hw_d);
  } catch (const GroebnerLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
