// Copyright 2026 The gcluster Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "gcluster/analysis.hpp"
#include "gcluster/blochmessiah.hpp"
#include "gcluster/cli.hpp"
#include "gcluster/matfun.hpp"
#include "gcluster/numfmt.hpp"
#include "gcluster/oracle.hpp"
#include "gcluster/synthesis.hpp"

namespace gcluster::cli {
namespace {

using nlohmann::json;
using synthesis::SqueezeScale;

struct Cluster {
  graph::AdjacencyMatrix a;
  graph::PhaseVector theta;
};

struct Check {
  std::string name;
  bool pass;
  double residual;
  double tolerance;
};

// Passes when residual <= tolerance.
Check at_most(std::string name, double residual, double tolerance) {
  return {std::move(name), residual <= tolerance, residual, tolerance};
}

json checks_to_json(const std::vector<Check>& checks) {
  json arr = json::array();
  for (const Check& c : checks) {
    arr.push_back({{"name", c.name},
                   {"pass", c.pass},
                   {"residual", c.residual},
                   {"tolerance", c.tolerance}});
  }
  return arr;
}

bool all_pass(const std::vector<Check>& checks) {
  for (const Check& c : checks)
    if (!c.pass) return false;
  return true;
}

json vector_json(const std::vector<double>& v) {
  json arr = json::array();
  for (double x : v) arr.push_back(x);
  return arr;
}

json phases_json(const graph::PhaseVector& theta) {
  return vector_json(std::vector<double>(theta.angles().begin(), theta.angles().end()));
}

json covariance_json(const synthesis::CovarianceReport& r) {
  return {{"C", matrix_to_json(r.c)},
          {"max_abs", r.max_abs},
          {"frobenius", r.frobenius},
          {"imag_residual", r.imag_residual},
          {"factor_residual", r.factor_residual},
          {"min_eigenvalue", r.min_eigenvalue}};
}

Tolerances tolerances_for(const JobConfig& cfg) {
  Tolerances tol;
  if (cfg.tol) {
    if (!(*cfg.tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "--tol must be positive");
    tol.rtol = *cfg.tol;
  }
  return tol;
}

double z_for(const JobConfig& cfg, double fallback = 1.0) {
  const double z = cfg.z.value_or(fallback);
  if (!(z > 0.0) || !std::isfinite(z)) {
    throw Error(ErrorCode::InvalidArgument, "-z must be a positive number");
  }
  return z;
}

graph::PhaseVector load_phases(const JobConfig& cfg, std::size_t n) {
  if (cfg.phases == "zero") return graph::PhaseVector::zero(n);
  graph::PhaseVector theta = phases_from_document(read_json_file(cfg.phases));
  if (theta.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "phases file holds " +
                                                  std::to_string(theta.size()) +
                                                  " angles, expected " + std::to_string(n));
  }
  return theta;
}

Cluster load_cluster(const JobConfig& cfg) {
  if (!cfg.graph_path) throw Error(ErrorCode::InvalidArgument, "--graph is required");
  graph::AdjacencyMatrix a = graph::parse_graph(read_text_file(*cfg.graph_path));
  graph::PhaseVector theta = load_phases(cfg, a.size());
  return {std::move(a), std::move(theta)};
}

synthesis::Gauge load_gauge(const JobConfig& cfg) {
  if (cfg.gauge == "identity") return synthesis::Gauge::identity();
  if (cfg.gauge == "faithful") return synthesis::Gauge::faithful();
  const std::string prefix = "custom:";
  if (cfg.gauge.rfind(prefix, 0) == 0) {
    return synthesis::Gauge::custom_matrix(
        matrix_from_document(read_json_file(cfg.gauge.substr(prefix.size())), "P"));
  }
  throw Error(ErrorCode::InvalidArgument,
              "--gauge must be identity, faithful or custom:PATH (got '" + cfg.gauge + "')");
}

std::string gauge_name(const synthesis::Gauge& g) {
  switch (g.kind) {
    case synthesis::GaugeKind::Identity:
      return "identity";
    case synthesis::GaugeKind::Faithful:
      return "faithful";
    case synthesis::GaugeKind::Custom:
      return "custom";
  }
  return "unknown";
}

// Scale for residuals of identities quadratic in the Bogoliubov blocks.
double bogoliubov_scale(const synthesis::BogoliubovPair& pair) {
  const double x = pair.x.max_abs();
  return std::max(1.0, x * x);
}

// ---------------------------------------------------------------- synthesize

json synthesize(const JobConfig& cfg, const Tolerances& tol, bool& ok) {
  const Cluster cl = load_cluster(cfg);
  const synthesis::Gauge gauge = load_gauge(cfg);
  const SqueezeScale z(z_for(cfg));
  const ComplexMatrix p = synthesis::resolve_gauge(gauge, cl.a, cl.theta, z);
  const synthesis::GaugeCheck gcheck = synthesis::validate_gauge(cl.a, cl.theta, p, tol);
  const synthesis::InteractionMatrix zm =
      synthesis::interaction_from_cluster(cl.a, cl.theta, p, tol);
  const synthesis::BogoliubovPair pair = synthesis::bogoliubov_from_interaction(zm, z, tol);
  const synthesis::CovarianceReport cov =
      synthesis::covariance_closed_form(cl.a, cl.theta, p, z, tol);

  const std::size_t n = cl.a.size();
  const double e2z = std::exp(-2.0 * z.value());
  const ComplexMatrix& am = cl.a.matrix();
  const ComplexMatrix a2 = am * am;

  std::vector<Check> checks;
  checks.push_back(at_most("gauge_compatibility", gcheck.residual, tol.rtol));
  checks.push_back(at_most("polar_reconstruction",
                           (zm.p() * zm.u()).max_abs_diff(zm.z()) / zm.z().max_abs(), tol.rtol));
  checks.push_back(at_most("bogoliubov_normalization", pair.normalization_residual(),
                           tol.rtol * bogoliubov_scale(pair)));
  checks.push_back(at_most("bogoliubov_symplectic", pair.symplectic_residual(),
                           tol.rtol * bogoliubov_scale(pair)));
  checks.push_back(at_most("covariance_real", cov.imag_residual,
                           tol.rtol * std::max(1.0, cov.max_abs)));
  checks.push_back(at_most("covariance_factorization", cov.factor_residual,
                           tol.rtol * std::max(1.0, cov.max_abs)));
  checks.push_back(at_most("covariance_psd", std::max(0.0, -cov.min_eigenvalue),
                           tol.rtol * std::max(1.0, cov.max_abs)));
  if (gauge.kind == synthesis::GaugeKind::Faithful) {
    checks.push_back(at_most("faithful_covariance_is_e^-2z",
                             cov.c.max_abs_diff(ComplexMatrix::identity(n) * e2z), tol.rtol));
  }
  if (gauge.kind == synthesis::GaugeKind::Identity) {
    const ComplexMatrix expected = add_identity(a2, 1.0) * e2z;
    checks.push_back(at_most("identity_gauge_covariance_is_(A^2+1)e^-2z",
                             cov.c.max_abs_diff(expected),
                             tol.rtol * std::max(1.0, expected.max_abs())));
    if (a2.max_abs_diff(ComplexMatrix::identity(n)) <= tol.rtol) {
      checks.push_back(at_most("self_inverse_covariance_is_2e^-2z",
                               cov.c.max_abs_diff(ComplexMatrix::identity(n) * (2.0 * e2z)),
                               tol.rtol));
    }
  }
  ok = all_pass(checks);

  json squeezers = json::array();
  for (const auto& m : synthesis::squeezer_spectrum(zm, z)) {
    squeezers.push_back({{"lambda", m.lambda}, {"mu", m.mu}, {"nu", m.nu}, {"dB", m.db}});
  }
  return {{"command", "synthesize"},
          {"modes", n},
          {"z", z.value()},
          {"gauge", gauge_name(gauge)},
          {"theta", phases_json(cl.theta)},
          {"A", matrix_to_json(am)},
          {"Z", matrix_to_json(zm.z())},
          {"P", matrix_to_json(zm.p())},
          {"U", matrix_to_json(zm.u())},
          {"X", matrix_to_json(pair.x)},
          {"Y", matrix_to_json(pair.y)},
          {"C", matrix_to_json(cov.c)},
          {"covariance", covariance_json(cov)},
          {"squeezers", std::move(squeezers)},
          {"checks", checks_to_json(checks)}};
}

// ---------------------------------------------------------------- analyze

json analyze(const JobConfig& cfg, const Tolerances& tol) {
  if (!cfg.interaction_path) throw Error(ErrorCode::InvalidArgument, "--interaction is required");
  const ComplexMatrix zmat = matrix_from_document(read_json_file(*cfg.interaction_path), "Z");
  const auto zm = synthesis::InteractionMatrix::from_matrix(zmat, tol);
  std::optional<graph::PhaseVector> given;
  if (cfg.phases != "zero") given = load_phases(cfg, zm.modes());
  const SqueezeScale z(z_for(cfg));
  const analysis::AnalysisResult res = analysis::analyze_interaction(zm, given, z, cfg.seed, tol);

  json attempts = json::array();
  if (res.search) {
    for (const auto& a : res.search->attempts) {
      attempts.push_back({{"label", a.label},
                          {"theta", phases_json(a.theta)},
                          {"sigma_min", a.sigma_min},
                          {"accepted", a.sigma_min >= tol.phase_accept}});
    }
  }
  const double drop = 1e-12 * std::max(1.0, res.adjacency.matrix().max_abs());
  return {{"command", "analyze"},
          {"modes", zm.modes()},
          {"z", z.value()},
          {"theta", phases_json(res.theta)},
          {"A", matrix_to_json(res.adjacency.matrix())},
          {"graph", graph::serialize_graph(res.adjacency, drop)},
          {"regularity",
           {{"sigma_min", res.sigma_min},
            {"used_given_phases", res.used_given_phases},
            {"seed", cfg.seed},
            {"attempts", std::move(attempts)}}},
          {"covariance", covariance_json(res.covariance)}};
}

// ------------------------------------------------------- interaction loading

// Interaction matrix plus, when known, the cluster it was built for.
struct InteractionSource {
  synthesis::InteractionMatrix zm;
  std::optional<Cluster> cluster;
  std::optional<ComplexMatrix> stored_c;
  std::optional<double> stored_z;
};

InteractionSource load_interaction_source(const JobConfig& cfg, const Tolerances& tol) {
  if (cfg.interaction_path) {
    const json doc = read_json_file(*cfg.interaction_path);
    InteractionSource src{synthesis::InteractionMatrix::from_matrix(matrix_from_document(doc, "Z"), tol),
                          std::nullopt, std::nullopt, std::nullopt};
    if (doc.is_object() && doc.contains("A") && doc.contains("theta")) {
      src.cluster = Cluster{graph::AdjacencyMatrix(matrix_from_json(doc["A"])),
                            phases_from_document(doc["theta"])};
    }
    if (doc.is_object() && doc.contains("C")) src.stored_c = matrix_from_json(doc["C"]);
    if (doc.is_object() && doc.contains("z") && doc["z"].is_number()) {
      src.stored_z = doc["z"].get<double>();
    }
    return src;
  }
  if (cfg.graph_path) {
    Cluster cl = load_cluster(cfg);
    const SqueezeScale z(z_for(cfg));
    const ComplexMatrix p = synthesis::resolve_gauge(load_gauge(cfg), cl.a, cl.theta, z);
    auto zm = synthesis::interaction_from_cluster(cl.a, cl.theta, p, tol);
    return {std::move(zm), std::move(cl), std::nullopt, std::nullopt};
  }
  throw Error(ErrorCode::InvalidArgument, "one of --interaction or --graph is required");
}

// ---------------------------------------------------------------- decompose

json decompose(const JobConfig& cfg, const Tolerances& tol) {
  const InteractionSource src = load_interaction_source(cfg, tol);
  const SqueezeScale z(z_for(cfg, src.stored_z.value_or(1.0)));
  const auto f = blochmessiah::bloch_messiah(src.zm, z, tol);
  const auto pair = synthesis::bogoliubov_from_interaction(src.zm, z, tol);
  json residuals = {
      {"x_reconstruction", f.x().max_abs_diff(pair.x)},
      {"y_reconstruction", f.y().max_abs_diff(pair.y)},
      {"u_equals_i_V_VT",
       blochmessiah::unitary_from_interferometer(f.v).max_abs_diff(src.zm.u())},
      {"v_unitarity", f.v.unitarity_residual()},
      {"w_unitarity", f.w.unitarity_residual()}};
  if (src.cluster) {
    residuals["cluster_condition"] =
        blochmessiah::cluster_condition_residual(f.v, src.cluster->a, src.cluster->theta);
  }
  return {{"command", "decompose"},
          {"modes", src.zm.modes()},
          {"z", z.value()},
          {"D", vector_json(f.d)},
          {"zD", vector_json(f.squeezing())},
          {"dB", vector_json(f.squeezing_db())},
          {"V", matrix_to_json(f.v)},
          {"W", matrix_to_json(f.w)},
          {"R", matrix_to_json(f.r)},
          {"T", matrix_to_json(f.t)},
          {"residuals", std::move(residuals)}};
}

// ---------------------------------------------------------------- verify

std::vector<Check> verification_battery(const synthesis::InteractionMatrix& zm,
                                        const Cluster& cl, const SqueezeScale& z,
                                        const std::optional<ComplexMatrix>& stored_c,
                                        const Tolerances& tol) {
  std::vector<Check> checks;
  const ComplexMatrix& p = zm.p();
  const ComplexMatrix& u = zm.u();
  const double a_scale = std::max(1.0, cl.a.matrix().max_abs());

  checks.push_back(at_most("polar_reconstruction",
                           (p * u).max_abs_diff(zm.z()) / zm.z().max_abs(), tol.rtol));
  checks.push_back(at_most("u_symmetric", u.symmetry_residual(), tol.rtol));
  checks.push_back(at_most("u_unitary", u.unitarity_residual(), tol.rtol));
  checks.push_back(at_most("p_hermitian", p.hermiticity_residual(), tol.rtol));
  checks.push_back(at_most("p_positive_definite",
                           std::max(0.0, -matfun::hermitian_spectrum(p, tol).eigenvalues.front()),
                           0.0));
  checks.push_back(at_most("pu_commutation", (p * u).max_abs_diff(u * p.conj()) / p.max_abs(),
                           tol.rtol));

  const auto gcheck = synthesis::validate_gauge(cl.a, cl.theta, p, tol);
  checks.push_back(at_most("gauge_compatibility", gcheck.residual, tol.rtol));
  checks.push_back(at_most("unitary_matches_cluster",
                           u.max_abs_diff(synthesis::unitary_from_adjacency(cl.a, cl.theta)),
                           tol.oracle));

  const auto pair = synthesis::bogoliubov_from_interaction(zm, z, tol);
  const double bscale = bogoliubov_scale(pair);
  checks.push_back(at_most("bogoliubov_normalization", pair.normalization_residual(),
                           tol.rtol * bscale));
  checks.push_back(at_most("bogoliubov_symplectic", pair.symplectic_residual(),
                           tol.rtol * bscale));

  const ComplexMatrix b = oracle::bogoliubov_matrix(zm.z(), z.value(), tol);
  const auto opair = oracle::pair_from_matrix(b);
  const double xscale = std::max(1.0, pair.x.max_abs());
  checks.push_back(at_most("oracle_block_structure", oracle::conjugation_residual(b),
                           tol.oracle * xscale));
  checks.push_back(at_most("oracle_bogoliubov_agreement",
                           std::max(opair.x.max_abs_diff(pair.x), opair.y.max_abs_diff(pair.y)),
                           tol.oracle * xscale));
  checks.push_back(at_most("oracle_bogoliubov_normalization", opair.normalization_residual(),
                           tol.oracle * bscale));
  checks.push_back(at_most("oracle_bogoliubov_symplectic", opair.symplectic_residual(),
                           tol.oracle * bscale));

  const auto closed = synthesis::covariance_closed_form(cl.a, cl.theta, p, z, tol);
  const auto brute = oracle::covariance_from_bogoliubov(cl.a, cl.theta, b);
  const double cscale = std::max(1.0, closed.max_abs);
  checks.push_back(at_most("covariance_oracle_agreement", closed.c.max_abs_diff(brute.c),
                           tol.oracle));
  checks.push_back(at_most("covariance_real", closed.imag_residual, tol.rtol * cscale));
  checks.push_back(at_most("oracle_covariance_real", brute.imag_residual, tol.oracle * cscale));
  checks.push_back(at_most("covariance_psd", std::max(0.0, -closed.min_eigenvalue),
                           tol.rtol * cscale));
  const SqueezeScale z_next(z.value() + 1.0);
  const auto later = synthesis::covariance_closed_form(cl.a, cl.theta, p, z_next, tol);
  checks.push_back({"covariance_decreases_with_z", later.max_abs < closed.max_abs,
                    later.max_abs, closed.max_abs});
  if (stored_c) {
    checks.push_back(at_most("stored_covariance", stored_c->max_abs_diff(closed.c), tol.oracle));
  }

  const auto f = blochmessiah::bloch_messiah(zm, z, tol);
  checks.push_back(at_most("bloch_messiah_x", f.x().max_abs_diff(pair.x), tol.oracle * xscale));
  checks.push_back(at_most("bloch_messiah_y", f.y().max_abs_diff(pair.y), tol.oracle * xscale));
  checks.push_back(at_most("bloch_messiah_u_equals_i_V_VT",
                           blochmessiah::unitary_from_interferometer(f.v).max_abs_diff(u),
                           tol.rtol));
  checks.push_back(at_most("bloch_messiah_cluster_condition",
                           blochmessiah::cluster_condition_residual(f.v, cl.a, cl.theta),
                           tol.oracle * a_scale));

  const auto back = analysis::adjacency_from_unitary(
      synthesis::unitary_from_adjacency(cl.a, cl.theta), cl.theta, tol);
  checks.push_back(at_most("adjacency_round_trip", back.matrix().max_abs_diff(cl.a.matrix()),
                           tol.oracle));
  return checks;
}

json verify(const JobConfig& cfg, const Tolerances& tol, bool& ok) {
  InteractionSource src = load_interaction_source(cfg, tol);
  const SqueezeScale z(cfg.z ? z_for(cfg) : src.stored_z.value_or(1.0));
  if (!z.positive()) throw Error(ErrorCode::InvalidArgument, "verify needs z > 0");
  json source = "cluster";
  if (!src.cluster) {
    std::optional<graph::PhaseVector> given;
    if (cfg.phases != "zero") given = load_phases(cfg, src.zm.modes());
    const auto res = analysis::analyze_interaction(src.zm, given, z, cfg.seed, tol);
    src.cluster = Cluster{res.adjacency, res.theta};
    source = "analyzed";
  }
  const std::vector<Check> checks = verification_battery(src.zm, *src.cluster, z, src.stored_c, tol);
  ok = all_pass(checks);
  return {{"command", "verify"},
          {"modes", src.zm.modes()},
          {"z", z.value()},
          {"cluster_source", source},
          {"pass", ok},
          {"checks", checks_to_json(checks)}};
}

// ---------------------------------------------------------------- sweep

oracle::SweepResult sweep(const JobConfig& cfg, const Tolerances& tol, std::vector<double>& zs) {
  const Cluster cl = load_cluster(cfg);
  if (cfg.z_range) {
    zs = parse_z_range(*cfg.z_range);
  } else {
    zs = {z_for(cfg)};
  }
  return oracle::convergence_sweep(cl.a, cl.theta, load_gauge(cfg), zs, tol);
}

std::string sweep_csv(const oracle::SweepResult& r) {
  std::ostringstream os;
  os << "z,max_abs_C,frobenius_C\n";
  for (const auto& row : r.rows) {
    os << format_double(row.z) << ',' << format_double(row.max_abs_c) << ','
       << format_double(row.frobenius_c) << '\n';
  }
  return os.str();
}

json sweep_json(const oracle::SweepResult& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"z", row.z}, {"max_abs_C", row.max_abs_c}, {"frobenius_C", row.frobenius_c}});
  }
  return {{"command", "sweep"},
          {"rows", std::move(rows)},
          {"decreasing", r.decreasing},
          {"oracle_gap_first", r.oracle_gap_first},
          {"oracle_gap_last", r.oracle_gap_last}};
}

// ---------------------------------------------------------------- text output

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

void text_matrix(std::ostream& os, const std::string& name, const json& m) {
  os << name << " (" << m["rows"].get<std::size_t>() << "x" << m["cols"].get<std::size_t>()
     << "):\n";
  const bool has_im = m.contains("im");
  for (std::size_t i = 0; i < m["re"].size(); ++i) {
    os << "  ";
    for (std::size_t j = 0; j < m["re"][i].size(); ++j) {
      const double re = m["re"][i][j].get<double>();
      const double im = has_im ? m["im"][i][j].get<double>() : 0.0;
      std::string cell = fmt(re);
      if (has_im) cell += (im < 0 ? "-" : "+") + fmt(std::abs(im)) + "i";
      os << std::setw(has_im ? 24 : 12) << cell;
      os << ' ';
    }
    os << '\n';
  }
}

void text_checks(std::ostream& os, const json& checks) {
  for (const json& c : checks) {
    os << (c["pass"].get<bool>() ? "PASS  " : "FAIL  ") << std::left << std::setw(44)
       << c["name"].get<std::string>() << std::right << " residual " << fmt(c["residual"].get<double>())
       << "  tol " << fmt(c["tolerance"].get<double>()) << '\n';
  }
}

std::string render_text(const json& doc) {
  std::ostringstream os;
  const std::string cmd = doc["command"].get<std::string>();
  os << cmd << ": " << doc["modes"].get<std::size_t>() << " modes, z = " << fmt(doc["z"].get<double>())
     << '\n';
  if (cmd == "synthesize") {
    os << "gauge: " << doc["gauge"].get<std::string>() << '\n';
    for (const char* k : {"A", "Z", "P", "U", "C"}) text_matrix(os, k, doc[k]);
    os << "squeezers (lambda, mu, nu, dB):\n";
    for (const json& s : doc["squeezers"]) {
      os << "  " << fmt(s["lambda"].get<double>()) << "  " << fmt(s["mu"].get<double>()) << "  "
         << fmt(s["nu"].get<double>()) << "  " << fmt(s["dB"].get<double>()) << '\n';
    }
    text_checks(os, doc["checks"]);
  } else if (cmd == "analyze") {
    os << "theta:";
    for (const json& t : doc["theta"]) os << ' ' << fmt(t.get<double>());
    os << "\nsigma_min(U + i e^{-2i theta}) = " << fmt(doc["regularity"]["sigma_min"].get<double>())
       << '\n';
    for (const json& a : doc["regularity"]["attempts"]) {
      os << "  tried " << a["label"].get<std::string>() << ": sigma_min "
         << fmt(a["sigma_min"].get<double>())
         << (a["accepted"].get<bool>() ? " (accepted)" : " (rejected)") << '\n';
    }
    os << "graph:\n" << doc["graph"].get<std::string>();
    text_matrix(os, "C", doc["covariance"]["C"]);
  } else if (cmd == "decompose") {
    os << "squeezers z*D:";
    for (const json& v : doc["zD"]) os << ' ' << fmt(v.get<double>());
    os << "\nsqueezers dB:";
    for (const json& v : doc["dB"]) os << ' ' << fmt(v.get<double>());
    os << '\n';
    text_matrix(os, "V", doc["V"]);
    text_matrix(os, "W", doc["W"]);
    for (const auto& [k, v] : doc["residuals"].items()) os << "  " << k << ": " << fmt(v.get<double>()) << '\n';
  } else if (cmd == "verify") {
    text_checks(os, doc["checks"]);
    os << (doc["pass"].get<bool>() ? "all checks passed\n" : "some checks FAILED\n");
  }
  return os.str();
}

void emit(const JobConfig& cfg, const std::string& payload, std::ostream& out) {
  if (cfg.out_path) {
    std::ofstream file(*cfg.out_path, std::ios::binary);
    if (!file) throw Error(ErrorCode::InvalidArgument, "cannot write '" + *cfg.out_path + "'");
    file << payload;
  } else {
    out << payload;
  }
}

std::string render(const JobConfig& cfg, const json& doc) {
  const OutputFormat f = cfg.format.value_or(OutputFormat::Json);
  if (f == OutputFormat::Csv) {
    throw Error(ErrorCode::InvalidArgument, "csv output is only available for sweep");
  }
  if (f == OutputFormat::Text) return render_text(doc);
  return doc.dump(2) + "\n";
}

}  // namespace

int run_job(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const Tolerances tol = tolerances_for(cfg);
    bool ok = true;
    switch (cfg.command) {
      case Command::Synthesize: {
        const json doc = synthesize(cfg, tol, ok);
        emit(cfg, render(cfg, doc), out);
        if (!ok) err << "synthesize: some consistency checks failed\n";
        return ok ? kExitOk : kExitNumerical;
      }
      case Command::Analyze:
        emit(cfg, render(cfg, analyze(cfg, tol)), out);
        return kExitOk;
      case Command::Decompose:
        emit(cfg, render(cfg, decompose(cfg, tol)), out);
        return kExitOk;
      case Command::Verify: {
        const json doc = verify(cfg, tol, ok);
        emit(cfg, render(cfg, doc), out);
        if (!ok) {
          err << "verify: failed checks:\n";
          for (const json& c : doc["checks"]) {
            if (!c["pass"].get<bool>()) {
              err << "  " << c["name"].get<std::string>() << " residual "
                  << c["residual"].get<double>() << " > " << c["tolerance"].get<double>() << '\n';
            }
          }
        }
        return ok ? kExitOk : kExitCheckFailed;
      }
      case Command::Sweep: {
        std::vector<double> zs;
        const oracle::SweepResult r = sweep(cfg, tol, zs);
        const OutputFormat f = cfg.format.value_or(OutputFormat::Csv);
        if (f == OutputFormat::Json) {
          emit(cfg, sweep_json(r).dump(2) + "\n", out);
        } else {
          emit(cfg, sweep_csv(r), out);
        }
        return kExitOk;
      }
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gaussian cluster states from multi-mode squeezing transformations", "gcluster"};
  app.require_subcommand(1);
  JobConfig cfg;
  std::string format;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--phases", cfg.phases, "Local phases: 'zero' or a JSON file")
        ->capture_default_str();
    sub->add_option("--gauge", cfg.gauge, "identity | faithful | custom:PATH")
        ->capture_default_str();
    sub->add_option("-z,--z", cfg.z, "Squeezing scale z > 0");
    sub->add_option("--out", cfg.out_path, "Write output to PATH instead of stdout");
    sub->add_option("--format", format, "json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--tol", cfg.tol, "Relative tolerance for algebraic identities");
    sub->add_option("--seed", cfg.seed, "Seed for the local-phase search")->capture_default_str();
  };

  CLI::App* synth = app.add_subcommand("synthesize", "Build Z, X, Y and C for a graph");
  synth->add_option("--graph", cfg.graph_path, "Graph file")->required();
  add_common(synth);

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "Recover the cluster approximated by Z");
  analyze_cmd->add_option("--interaction", cfg.interaction_path, "Interaction matrix JSON")
      ->required();
  add_common(analyze_cmd);

  CLI::App* decompose_cmd = app.add_subcommand("decompose", "Bloch-Messiah factors of Z");
  decompose_cmd->add_option("--interaction", cfg.interaction_path, "Interaction matrix JSON");
  decompose_cmd->add_option("--graph", cfg.graph_path, "Graph file (synthesized first)");
  add_common(decompose_cmd);

  CLI::App* verify_cmd = app.add_subcommand("verify", "Run the full invariant battery");
  verify_cmd->add_option("--interaction", cfg.interaction_path, "Interaction matrix or bundle");
  verify_cmd->add_option("--graph", cfg.graph_path, "Graph file (synthesized first)");
  add_common(verify_cmd);

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Nullifier covariance along a z range");
  sweep_cmd->add_option("--graph", cfg.graph_path, "Graph file")->required();
  sweep_cmd->add_option("--z-range", cfg.z_range, "START:STOP:STEP");
  add_common(sweep_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    for (CLI::App* sub : app.get_subcommands()) err << sub->help();
    return kExitParse;
  }

  if (synth->parsed()) cfg.command = Command::Synthesize;
  if (analyze_cmd->parsed()) cfg.command = Command::Analyze;
  if (decompose_cmd->parsed()) cfg.command = Command::Decompose;
  if (verify_cmd->parsed()) cfg.command = Command::Verify;
  if (sweep_cmd->parsed()) cfg.command = Command::Sweep;
  if (format == "json") cfg.format = OutputFormat::Json;
  if (format == "csv") cfg.format = OutputFormat::Csv;
  if (format == "text") cfg.format = OutputFormat::Text;
  if (cfg.command != Command::Sweep && cfg.z_range) {
    err << "error: --z-range is only accepted by sweep\n";
    return kExitParse;
  }
  if (cfg.command == Command::Sweep && cfg.z && cfg.z_range) {
    err << "error: give either -z or --z-range, not both\n";
    return kExitParse;
  }
  return run_job(cfg, out, err);
}

}  // namespace gcluster::cli
