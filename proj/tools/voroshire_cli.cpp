// Command-line driver: iterate / roots / voronoi / potential / diagnose /
// selfcheck, all driven by one JSON config (see README for the schema).
// Exit codes: 0 ok, 2 config error, 3 math precondition, 4 non-convergence,
// 5 selfcheck failure.

#include <algorithm>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "voroshire/config.hpp"
#include "voroshire/diagnostics.hpp"
#include "voroshire/svg.hpp"
#include "voroshire/util.hpp"

namespace vs = voroshire;
using nlohmann::json;

namespace {

struct CliOverrides {
  std::vector<unsigned> n_values;
  unsigned precision = 0;
  std::vector<double> bbox;
  std::string out_dir;
  std::vector<std::string> formats;
};

vs::RunConfig load_config(const std::string& path, const CliOverrides& ov) {
  std::ifstream in(path);
  if (!in) throw vs::ConfigError("config: cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  vs::RunConfig cfg = vs::RunConfig::parse_text(buf.str());
  if (!ov.n_values.empty()) cfg.n_values = ov.n_values;
  if (ov.precision) cfg.precision_bits = ov.precision;
  if (!ov.bbox.empty()) {
    if (ov.bbox.size() != 4) throw vs::ConfigError("--bbox needs x_min,x_max,y_min,y_max");
    vs::GridSpec g = cfg.grid.value_or(vs::GridSpec{});
    g.bbox = {ov.bbox[0], ov.bbox[1], ov.bbox[2], ov.bbox[3]};
    cfg.grid = g;
  }
  if (!ov.out_dir.empty()) cfg.output_dir = ov.out_dir;
  if (!ov.formats.empty()) cfg.formats = ov.formats;
  return cfg;
}

bool wants(const vs::RunConfig& cfg, const std::string& fmt) {
  return std::find(cfg.formats.begin(), cfg.formats.end(), fmt) != cfg.formats.end();
}

std::filesystem::path out_path(const vs::RunConfig& cfg, const std::string& name) {
  return std::filesystem::path(cfg.output_dir) / name;
}

/// Pole positions for geometry: exact when the config listed roots,
/// otherwise solved numerically from the denominator coefficients.
vs::PoleSet pole_set_of(const vs::RunConfig& cfg, const vs::RationalFn& h) {
  if (h.poles()) return vs::make_pole_set(h);
  vs::RootSet rs = vs::solve_exact(h.denom(), cfg.precision_bits);
  return vs::PoleSet(rs.to_complex());
}

vs::GridSpec grid_of(const vs::RunConfig& cfg, const vs::PoleSet& S) {
  if (cfg.grid) return *cfg.grid;
  vs::GridSpec g;
  const double side = std::max(1.5 * S.diameter(), 4.0);
  g.bbox = vs::BoundingBox::square(S.centroid(), side / 2);
  return g;
}

json complex_json(std::complex<double> z) { return json{z.real(), z.imag()}; }

// ---------------------------------------------------------------------------

int cmd_iterate(const vs::RunConfig& cfg) {
  vs::RationalFn h = cfg.make_rational_fn();
  vs::OperatorSymbol q = cfg.make_symbol();
  for (unsigned n : cfg.n_values) {
    vs::IterateResult it = vs::iterate_full(h, q, n);
    json doc;
    doc["n"] = it.n;
    doc["degree"] = it.degree;
    doc["denominator_power"] = it.denom_power;
    doc["leading"] = it.leading.to_string();
    json coeffs = json::array();
    for (size_t k = 0; k <= static_cast<size_t>(it.degree); ++k)
      coeffs.push_back(it.numer[k].to_string());
    doc["coefficients"] = coeffs;
    doc["death_index"] = it.death_index ? json(*it.death_index) : json(nullptr);
    vs::atomic_write_file(out_path(cfg, "numer_n" + std::to_string(n) + ".json"),
                          doc.dump(2) + "\n");
    std::cout << "n=" << n << " degree=" << it.degree << " -> numer_n" << n << ".json\n";
  }
  return 0;
}

int cmd_roots(const vs::RunConfig& cfg) {
  vs::RationalFn h = cfg.make_rational_fn();
  vs::OperatorSymbol q = cfg.make_symbol();
  for (unsigned n : cfg.n_values) {
    vs::IterateResult it = vs::iterate_full(h, q, n);

    if (it.degree == 0) {
      if (wants(cfg, "csv"))
        vs::atomic_write_file(out_path(cfg, "roots_n" + std::to_string(n) + ".csv"),
                              "re,im,residual\n");
      json doc;
      doc["n"] = n;
      doc["degree"] = 0;
      doc["roots"] = json::array();
      doc["note"] = "constant numerator: no roots";
      if (wants(cfg, "json"))
        vs::atomic_write_file(out_path(cfg, "roots_n" + std::to_string(n) + ".json"),
                              doc.dump(2) + "\n");
      std::cout << "n=" << n << " degree=0 (no roots)\n";
      continue;
    }

    vs::AberthOptions opts;
    opts.residual_tol = cfg.tolerances.root_residual;
    vs::RootSet rs = vs::solve_exact(it.numer, cfg.precision_bits, opts);
    vs::FloatPoly fp = vs::to_float_poly(it.numer, rs.precision_bits, true);
    vs::VietaReport vieta = vs::vieta_check(rs, fp);
    if (!vieta.ok(cfg.tolerances.vieta_rel))
      throw vs::NonConvergenceError("roots: Vieta check failed at n=" + std::to_string(n),
                                    rs.precision_bits);

    if (wants(cfg, "csv")) {
      std::string csv = "re,im,residual\n";
      for (size_t i = 0; i < rs.roots.size(); ++i) {
        csv += rs.roots[i].re().to_string(30) + "," + rs.roots[i].im().to_string(30) + "," +
               vs::format_double(rs.residuals[i], 6) + "\n";
      }
      vs::atomic_write_file(out_path(cfg, "roots_n" + std::to_string(n) + ".csv"), csv);
    }
    if (wants(cfg, "json")) {
      json doc;
      doc["n"] = n;
      doc["degree"] = it.degree;
      doc["precision_bits"] = rs.precision_bits;
      doc["iterations"] = rs.iterations;
      doc["scaling_log_hex"] = vs::double_to_hex(fp.scaling_log);
      json roots = json::array();
      for (size_t i = 0; i < rs.roots.size(); ++i)
        roots.push_back({{"re", rs.roots[i].re().to_string(30)},
                         {"im", rs.roots[i].im().to_string(30)},
                         {"residual_hex", vs::double_to_hex(rs.residuals[i])}});
      doc["roots"] = roots;
      doc["vieta"] = {{"sum_rel_err_hex", vs::double_to_hex(vieta.sum_rel_err)},
                      {"product_rel_err_hex", vs::double_to_hex(vieta.product_rel_err)}};
      vs::atomic_write_file(out_path(cfg, "roots_n" + std::to_string(n) + ".json"),
                            doc.dump(2) + "\n");
    }
    std::cout << "n=" << n << " degree=" << it.degree << " max_residual=" << rs.max_residual
              << "\n";
  }
  return 0;
}

json voronoi_json(const vs::VoronoiDiagram& V) {
  json doc;
  json sites = json::array();
  for (auto s : V.sites().sites()) sites.push_back(complex_json(s));
  doc["sites"] = sites;
  doc["bbox"] = {V.bbox().x_min, V.bbox().x_max, V.bbox().y_min, V.bbox().y_max};
  json edges = json::array();
  for (const auto& e : V.edges()) {
    json je;
    je["site_i"] = e.site_i;
    je["site_j"] = e.site_j;
    je["base"] = complex_json(e.base);
    je["dir"] = complex_json(e.dir);
    je["t_lo"] = std::isfinite(e.t_lo) ? json(e.t_lo) : json(nullptr);
    je["t_hi"] = std::isfinite(e.t_hi) ? json(e.t_hi) : json(nullptr);
    je["clipped"] = e.clipped ? json{complex_json(e.clipped->first), complex_json(e.clipped->second)}
                              : json(nullptr);
    edges.push_back(je);
  }
  doc["edges"] = edges;
  json verts = json::array();
  for (const auto& v : V.vertices())
    verts.push_back({{"position", complex_json(v.position)}, {"sites", v.sites}});
  doc["vertices"] = verts;
  return doc;
}

int cmd_voronoi(const vs::RunConfig& cfg) {
  vs::RationalFn h = cfg.make_rational_fn();
  vs::PoleSet S = pole_set_of(cfg, h);
  vs::GridSpec g = grid_of(cfg, S);
  vs::VoronoiDiagram V = vs::build_voronoi(S, g.bbox);
  if (wants(cfg, "json"))
    vs::atomic_write_file(out_path(cfg, "voronoi.json"), voronoi_json(V).dump(2) + "\n");
  if (wants(cfg, "svg")) vs::atomic_write_file(out_path(cfg, "voronoi.svg"), vs::voronoi_svg(V));
  std::cout << "sites=" << S.size() << " edges=" << V.edges().size()
            << " vertices=" << V.vertices().size() << "\n";
  return 0;
}

std::string grid_csv(const vs::GridField& f, const std::string& name) {
  std::string out = "# field," + name + "\n";
  out += "# bbox," + vs::format_double(f.bbox.x_min) + "," + vs::format_double(f.bbox.x_max) +
         "," + vs::format_double(f.bbox.y_min) + "," + vs::format_double(f.bbox.y_max) + "\n";
  out += "# nx," + std::to_string(f.nx) + "\n# ny," + std::to_string(f.ny) + "\n";
  out += "# layout: one row per iy (y ascending), columns ix (x ascending)\n";
  for (size_t iy = 0; iy < f.ny; ++iy) {
    for (size_t ix = 0; ix < f.nx; ++ix) {
      if (ix) out += ',';
      out += vs::format_double(f.at(ix, iy), 12);
    }
    out += '\n';
  }
  return out;
}

int cmd_potential(const vs::RunConfig& cfg) {
  vs::RationalFn h = cfg.make_rational_fn();
  vs::OperatorSymbol q = cfg.make_symbol();
  vs::PoleSet S = pole_set_of(cfg, h);
  vs::GridSpec g = grid_of(cfg, S);

  vs::GridField xi = vs::sample_field(
      [&](std::complex<double> z) { return vs::bh_potential(S, z); }, g.bbox, g.nx, g.ny);
  vs::GridField theta = vs::sample_field(
      [&](std::complex<double> z) { return vs::limit_potential(S, q, z); }, g.bbox, g.nx, g.ny);
  if (wants(cfg, "csv")) {
    vs::atomic_write_file(out_path(cfg, "potential_xi.csv"), grid_csv(xi, "xi"));
    vs::atomic_write_file(out_path(cfg, "potential_theta.csv"), grid_csv(theta, "theta"));
  }
  vs::CellMassGrid riesz = vs::discrete_riesz_measure(xi);
  if (wants(cfg, "json")) {
    json doc;
    doc["total_riesz_mass_hex"] = vs::double_to_hex(riesz.total);
    doc["total_riesz_mass"] = riesz.total;
    doc["masked_nodes"] = riesz.masked_count;
    doc["grid"] = {{"nx", g.nx}, {"ny", g.ny}};
    vs::atomic_write_file(out_path(cfg, "potential_summary.json"), doc.dump(2) + "\n");
  }
  std::cout << "riesz total=" << riesz.total << " masked=" << riesz.masked_count << "\n";
  return 0;
}

int cmd_diagnose(const vs::RunConfig& cfg) {
  vs::RationalFn h = cfg.make_rational_fn();
  vs::OperatorSymbol q = cfg.make_symbol();
  vs::PoleSet S = pole_set_of(cfg, h);
  vs::GridSpec g = grid_of(cfg, S);
  vs::VoronoiDiagram V = vs::build_voronoi(S, g.bbox);

  const double R = cfg.escape_radius.value_or(vs::default_escape_radius(S));
  const std::vector<double> tubes = cfg.tube_radii.value_or(vs::default_tube_radii(S));

  std::complex<double> probe;
  if (cfg.probe) {
    probe = *cfg.probe;
  } else {
    // default: inside the cell of the first pole, a quarter of the way to
    // its nearest neighbour
    std::complex<double> z0 = S.site(0), zn = S.site(1 % S.size());
    double best = std::abs(zn - z0);
    for (size_t i = 1; i < S.size(); ++i)
      if (double d = std::abs(S.site(i) - z0); d < best) {
        best = d;
        zn = S.site(i);
      }
    probe = z0 + 0.25 * (zn - z0);
  }
  const double probe_skel_dist = vs::dist_to_skeleton(V, probe);
  const double bump_radius = std::isfinite(probe_skel_dist)
                                 ? std::max(0.5 * probe_skel_dist, 0.05 * S.diameter())
                                 : 1.0;

  const bool with_fields = S.size() >= 2;
  vs::GridField theta;
  if (with_fields)
    theta = vs::sample_field(
        [&](std::complex<double> z) { return vs::limit_potential(S, q, z); }, g.bbox, g.nx, g.ny);

  json rows = json::array();
  std::string csv =
      "n,degree,escaped,retained,median_dist,q25,q75,q90,l1_shifted,unshifted_probe,bump_pairing\n";

  for (unsigned n : cfg.n_values) {
    vs::IterateResult it = vs::iterate_full(h, q, n);
    vs::AberthOptions opts;
    opts.residual_tol = cfg.tolerances.root_residual;
    vs::RootSet rs = vs::solve_exact(it.numer, cfg.precision_bits, opts);
    const std::vector<std::complex<double>> roots = rs.to_complex();

    vs::SkeletonStats st = vs::skeleton_stats(rs, V, R, tubes);
    vs::AtomMeasure mu = vs::empirical_measure(rs);
    if (mu.merged_clusters > 0)
      std::cerr << "note: n=" << n << ": " << mu.merged_clusters
                << " root cluster(s) merged in the zero-counting measure\n";
    const double pairing = vs::bump_pairing(mu, probe, bump_radius);

    double l1 = 0.0, probe_unshifted = 0.0, shift = 0.0;
    if (with_fields && it.degree > 0) {
      shift = n == 0 ? 0.0 : vs::shift_term(q.order(), q.vanishing_order(), n, it.degree);
      vs::GridField emp = vs::sample_field(
          [&](std::complex<double> z) { return vs::empirical_potential(roots, z) - shift; },
          g.bbox, g.nx, g.ny);
      emp.mask_near(roots, 1.0);
      l1 = vs::l1_box_distance(emp, theta);
      probe_unshifted = vs::empirical_potential(roots, probe);
    }

    json row;
    row["n"] = n;
    row["degree"] = it.degree;
    row["escaped"] = st.escaped;
    row["retained"] = st.retained;
    row["median_dist_hex"] = vs::double_to_hex(st.median_distance);
    row["median_dist"] = st.median_distance;
    row["quantiles"] = {{"q25", st.q25}, {"q75", st.q75}, {"q90", st.q90}};
    json tubes_json = json::array();
    for (auto [eps, count] : st.tube_counts)
      tubes_json.push_back({{"radius", eps}, {"count", count}});
    row["tube_counts"] = tubes_json;
    row["l1_shifted_hex"] = vs::double_to_hex(l1);
    row["l1_shifted"] = l1;
    row["shift"] = shift;
    row["unshifted_probe"] = probe_unshifted;
    row["bump_pairing"] = pairing;
    rows.push_back(row);

    csv += std::to_string(n) + "," + std::to_string(it.degree) + "," +
           std::to_string(st.escaped) + "," + std::to_string(st.retained) + "," +
           vs::format_double(st.median_distance, 9) + "," + vs::format_double(st.q25, 9) + "," +
           vs::format_double(st.q75, 9) + "," + vs::format_double(st.q90, 9) + "," +
           vs::format_double(l1, 9) + "," + vs::format_double(probe_unshifted, 9) + "," +
           vs::format_double(pairing, 9) + "\n";

    if (wants(cfg, "svg"))
      vs::atomic_write_file(out_path(cfg, "overlay_n" + std::to_string(n) + ".svg"),
                            vs::overlay_svg(V, roots));
  }

  json report;
  report["configuration"] = json::parse(cfg.serialize());
  report["escape_radius"] = R;
  report["probe"] = complex_json(probe);
  report["bump_radius"] = bump_radius;
  report["rows"] = rows;
  if (wants(cfg, "json"))
    vs::atomic_write_file(out_path(cfg, "report.json"), report.dump(2) + "\n");
  if (wants(cfg, "csv")) vs::atomic_write_file(out_path(cfg, "report.csv"), csv);
  std::cout << "diagnose: " << cfg.n_values.size() << " n-values -> report.json / report.csv\n";
  return 0;
}

// ---------------------------------------------------------------------------

int cmd_selfcheck() {
  using vs::ExactPoly;
  using vs::GaussRational;
  int failures = 0;
  auto check = [&](const std::string& name, bool ok) {
    std::cout << (ok ? "[ok]   " : "[FAIL] ") << name << "\n";
    if (!ok) ++failures;
  };

  try {
    // two-pole instance: closed form, stepwise route, known n=1 numerator
    vs::RationalFn h =
        vs::RationalFn::from_poles(ExactPoly::constant(1), {GaussRational(1), GaussRational(-1)});
    vs::OperatorSymbol q({GaussRational(1), GaussRational(0), GaussRational(1)});
    vs::IterateResult r1 = vs::iterate_numerator_closed(h, q, 1);
    check("iterate n=1 numerator", r1.numer == ExactPoly({GaussRational(3), GaussRational(0),
                                                          GaussRational(4), GaussRational(0),
                                                          GaussRational(1)}));
    bool routes = true;
    for (unsigned n = 0; n <= 4; ++n)
      routes = routes && vs::iterate_numerator_closed(h, q, n).numer ==
                             vs::iterate_numerator_stepwise(h, q, n).numer;
    check("route equivalence n<=4", routes);

    auto pv = vs::pole_value_identity_check(h, 6);
    check("pole-value identity K<=6",
          std::all_of(pv.begin(), pv.end(), [](const auto& c) { return c.ok; }));

    vs::DefectBoundReport db = vs::defect_bound_check(
        vs::OperatorSymbol({GaussRational(0), GaussRational(3), GaussRational(1)}), 2);
    check("defect bound q=x^2+3x n=2", db.all_ok);
    vs::DefectBoundReport db2 = vs::defect_bound_check(
        vs::OperatorSymbol({GaussRational(1), GaussRational(2), GaussRational(0), GaussRational(1)}),
        3);
    check("defect bound q=x^3+2x+1 n=3", db2.all_ok);

    // four-pole instance: identity assertions run inside iterate_full
    vs::RationalFn hf = vs::RationalFn::from_poles(
        ExactPoly::constant(1),
        {GaussRational(mpq_class(-3), mpq_class(5)), GaussRational(mpq_class(4), mpq_class(-6)),
         GaussRational(-8), GaussRational(mpq_class(0), mpq_class(-2))});
    bool four_pole_ok = true;
    for (unsigned n = 1; n <= 6; ++n) {
      vs::IterateResult it = vs::iterate_full(hf, q, n);
      four_pole_ok = four_pole_ok && it.degree == static_cast<int>(8 * n);
    }
    check("four-pole degree/LC/gcd identities n<=6", four_pole_ok);
    check("four-pole route equivalence n<=3",
          vs::iterate_numerator_closed(hf, q, 3).numer ==
              vs::iterate_numerator_stepwise(hf, q, 3).numer);

    vs::RootSet rs = vs::solve_exact(r1.numer);
    check("root residuals", rs.max_residual < 1e-30);
  } catch (const std::exception& e) {
    std::cout << "[FAIL] exception: " << e.what() << "\n";
    ++failures;
  }

  if (failures) {
    std::cout << failures << " selfcheck failure(s)\n";
    return 5;
  }
  std::cout << "all selfchecks passed\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"voroshire: operator iterates of rational functions, their zero sets, and the "
               "Voronoi geometry of the pole set"};
  app.require_subcommand(1);

  CliOverrides ov;
  std::string config_path;
  auto add_common = [&](CLI::App* sub, bool needs_config) {
    if (needs_config)
      sub->add_option("config", config_path, "JSON configuration file")->required();
    sub->add_option("--n", ov.n_values, "override n values");
    sub->add_option("--precision", ov.precision, "override precision (bits)");
    sub->add_option("--bbox", ov.bbox, "override grid box: x_min,x_max,y_min,y_max")
        ->delimiter(',');
    sub->add_option("--out", ov.out_dir, "override output directory");
    sub->add_option("--format", ov.formats, "output formats (csv,json,svg)")
        ->check(CLI::IsMember({"csv", "json", "svg"}));
  };

  CLI::App* iterate = app.add_subcommand("iterate", "write exact iterate numerators");
  add_common(iterate, true);
  CLI::App* roots = app.add_subcommand("roots", "solve iterate numerators for their roots");
  add_common(roots, true);
  CLI::App* voronoi = app.add_subcommand("voronoi", "pole-set Voronoi diagram geometry");
  add_common(voronoi, true);
  CLI::App* potential = app.add_subcommand("potential", "limit potential grids and Riesz mass");
  add_common(potential, true);
  CLI::App* diagnose = app.add_subcommand("diagnose", "zero-distribution convergence report");
  add_common(diagnose, true);
  app.add_subcommand("selfcheck", "run built-in exact identity checks");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("selfcheck")) return cmd_selfcheck();
    vs::RunConfig cfg = load_config(config_path, ov);
    if (app.got_subcommand(iterate)) return cmd_iterate(cfg);
    if (app.got_subcommand(roots)) return cmd_roots(cfg);
    if (app.got_subcommand(voronoi)) return cmd_voronoi(cfg);
    if (app.got_subcommand(potential)) return cmd_potential(cfg);
    if (app.got_subcommand(diagnose)) return cmd_diagnose(cfg);
  } catch (const vs::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const vs::NonConvergenceError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 4;
  } catch (const std::domain_error& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
