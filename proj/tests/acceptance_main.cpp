// Acceptance suite. Each criterion prints one [PASS]/[FAIL] line with the
// measured quantities; run with a criterion number (1..15) or no argument
// for the full sweep. Exit code 0 only when every executed criterion passes.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "voroshire/diagnostics.hpp"

using namespace voroshire;
using cplx = std::complex<double>;
namespace vt = voroshire::testing;

namespace {

OperatorSymbol sym(std::initializer_list<long> coeffs) {
  std::vector<GaussRational> c;
  for (long v : coeffs) c.emplace_back(v);
  return OperatorSymbol(std::move(c));
}

RationalFn pair_instance() {
  return RationalFn::from_poles(ExactPoly::constant(1), {GaussRational(1), GaussRational(-1)});
}

RationalFn four_pole_instance() {
  return RationalFn::from_poles(
      ExactPoly::constant(1),
      {GaussRational(mpq_class(-3), mpq_class(5)), GaussRational(mpq_class(4), mpq_class(-6)),
       GaussRational(-8), GaussRational(mpq_class(0), mpq_class(-2))});
}

RationalFn one_pole_instance() {
  return RationalFn::from_poles(ExactPoly::constant(1), {GaussRational(0)});
}

constexpr double kEscapeRadius = 90.0;  // 10 (1 + max |z_i|) for the four-pole set

// ---------------------------------------------------------------------------
// criteria 1-4 share one randomized instance sweep

struct SweepResult {
  bool degree_ok = true, leading_ok = true, coprime_ok = true, routes_ok = true;
  size_t instances = 0, checks = 0;
  std::string first_failure;
};

const SweepResult& instance_sweep() {
  static const SweepResult result = [] {
    SweepResult sw;
    std::mt19937 rng(20250810);
    const std::vector<std::pair<unsigned, unsigned>> mr_combos{
        {1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 2}, {3, 0}, {3, 1}, {3, 2}, {3, 3}};
    for (size_t idx = 0; idx < 50; ++idx) {
      const auto [m, r] = mr_combos[idx % mr_combos.size()];
      const int b = 2 + static_cast<int>(rng() % 4);
      const int a = r >= 1 ? static_cast<int>(rng() % b) : static_cast<int>(rng() % 6);
      RationalFn h = vt::random_instance(rng, a, b);
      OperatorSymbol q = vt::random_symbol(rng, m, r);
      ++sw.instances;
      for (unsigned n = 0; n <= 8; ++n) {
        IterateResult closed = iterate_numerator_closed(h, q, n);
        IterateResult stepwise = iterate_numerator_stepwise(h, q, n);
        ++sw.checks;
        const int expected_degree =
            a + static_cast<int>(n) * (b * static_cast<int>(m) - static_cast<int>(r));
        const GaussRational expected_lc =
            q.first_nonzero().pow(n) * h.numer().leading_coefficient() *
            falling_factorial(a - b, r * n);
        auto note = [&](const char* what) {
          if (sw.first_failure.empty())
            sw.first_failure = std::string(what) + " at instance " + std::to_string(idx) +
                               ", n=" + std::to_string(n);
        };
        if (closed.degree != expected_degree) {
          sw.degree_ok = false;
          note("degree");
        }
        if (closed.leading != expected_lc) {
          sw.leading_ok = false;
          note("leading coefficient");
        }
        if (ExactPoly::gcd(closed.numer, h.denom()).degree() != 0) {
          sw.coprime_ok = false;
          note("coprimality");
        }
        if (closed.numer != stepwise.numer) {
          sw.routes_ok = false;
          note("route equivalence");
        }
      }
    }
    return sw;
  }();
  return result;
}

// ---------------------------------------------------------------------------

bool criterion_1(std::string& detail) {
  const SweepResult& sw = instance_sweep();
  detail = std::to_string(sw.instances) + " instances, " + std::to_string(sw.checks) +
           " exact degree checks" + (sw.degree_ok ? "" : "; FIRST FAILURE: " + sw.first_failure);
  return sw.degree_ok;
}

bool criterion_2(std::string& detail) {
  const SweepResult& sw = instance_sweep();
  detail = std::to_string(sw.checks) + " exact leading-coefficient checks";
  return sw.leading_ok;
}

bool criterion_3(std::string& detail) {
  const SweepResult& sw = instance_sweep();
  detail = std::to_string(sw.checks) + " exact gcd checks";
  return sw.coprime_ok;
}

bool criterion_4(std::string& detail) {
  const SweepResult& sw = instance_sweep();
  detail = std::to_string(sw.checks) + " closed-vs-stepwise polynomial equalities";
  return sw.routes_ok;
}

bool criterion_5(std::string& detail) {
  std::mt19937 rng(5);
  size_t checks = 0;
  bool ok = true;
  for (int t = 0; t < 12 && ok; ++t) {
    const int b = 2 + static_cast<int>(rng() % 3);
    std::vector<GaussRational> poles;
    while (static_cast<int>(poles.size()) < b) {
      GaussRational z = vt::random_rational(rng, 5, 2);
      bool fresh = true;
      for (const auto& p : poles) fresh = fresh && !(p == z);
      if (fresh) poles.push_back(z);
    }
    ExactPoly A = vt::random_poly(rng, static_cast<int>(rng() % 4));
    RationalFn h = [&] {
      while (true) {
        try {
          return RationalFn::from_poles(A, poles);
        } catch (const std::invalid_argument&) {
          A = vt::random_poly(rng, static_cast<int>(rng() % 4));
        }
      }
    }();
    for (const auto& check : pole_value_identity_check(h, 10)) {
      ++checks;
      ok = ok && check.ok;
    }
  }
  detail = std::to_string(checks) + " exact pole-value identities, k <= 10";
  return ok;
}

bool criterion_6(std::string& detail) {
  std::mt19937 rng(6);
  size_t inequalities = 0;
  bool ok = true;
  for (int t = 0; t < 20; ++t) {
    const unsigned m = 1 + rng() % 4;
    OperatorSymbol q = vt::random_symbol(rng, m, rng() % (m + 1));
    for (unsigned n = 1; n <= 10; ++n) {
      DefectBoundReport rep = defect_bound_check(q, n);
      inequalities += rep.checked;
      ok = ok && rep.all_ok;
    }
  }
  detail = std::to_string(inequalities) + " exact rational inequalities over 20 symbols";
  return ok;
}

bool criterion_7(std::string& detail) {
  const std::vector<unsigned> ns{10, 40};
  auto rows = defect_asymptotic_check(sym({1, 1, 1}), 2, ns);
  const double dev10 = rows[0].abs_deviation, dev40 = rows[1].abs_deviation;
  std::ostringstream os;
  os << "|ratio-1| = " << dev10 << " (n=10), " << dev40 << " (n=40)";
  detail = os.str();
  return dev40 < 0.10 && dev40 < dev10;
}

bool criterion_8(std::string& detail) {
  const std::vector<unsigned> ns{4, 8, 12};
  auto rows = growth_ratio_check(pair_instance(), sym({1, 1, 1}), cplx(3, 0), ns, 512);
  std::ostringstream os;
  os << "target (1/2)e^{-1}; rel deviation at n=12: " << rows.back().rel_deviation
     << " (needs < 1e-3); sequence:";
  for (const auto& row : rows) os << " n=" << row.n << ":" << row.rel_deviation;
  detail = os.str();
  return rows.back().rel_deviation < 1e-3;
}

bool criterion_9(std::string& detail) {
  RationalFn h = four_pole_instance();
  PoleSet S = make_pole_set(h);
  const double side = 8.0 * S.diameter();
  const BoundingBox box = BoundingBox::square(S.centroid(), side / 2);
  GridField xi = sample_field([&](cplx z) { return bh_potential(S, z); }, box, 801, 801);
  CellMassGrid mass = discrete_riesz_measure(xi);

  VoronoiDiagram V = build_voronoi(S, box);
  double near_skeleton = 0.0;
  for (size_t ix = 1; ix + 1 < xi.nx; ++ix)
    for (size_t iy = 1; iy + 1 < xi.ny; ++iy)
      if (dist_to_skeleton(V, mass.node(ix, iy)) <= 3.0 * xi.spacing)
        near_skeleton += mass.at(ix, iy);

  const double fraction = near_skeleton / mass.total;
  std::ostringstream os;
  os << "total mass " << mass.total << " (within 3% of 1), fraction within 3 cells "
     << fraction << " (needs >= 0.99)";
  detail = os.str();
  return std::abs(mass.total - 1.0) <= 0.03 && fraction >= 0.99;
}

bool criterion_10(std::string& detail) {
  const std::vector<unsigned> ns{10, 12, 15};
  auto rows = escape_experiment(four_pole_instance(), sym({1, 0, 1}), ns, kEscapeRadius, 256);
  bool ok = true;
  std::ostringstream os;
  os << "R=" << kEscapeRadius << ";";
  for (const auto& row : rows) {
    os << " n=" << row.n << ": escaped " << row.escaped << " vs 2n=" << 2 * row.n << ";";
    ok = ok && std::abs(static_cast<long>(row.escaped) - 2L * row.n) <= 3;
  }
  detail = os.str();
  return ok;
}

bool criterion_11(std::string& detail) {
  RationalFn h = four_pole_instance();
  OperatorSymbol q = sym({1, 0, 1});
  PoleSet S = make_pole_set(h);
  VoronoiDiagram V = build_voronoi(S, BoundingBox::around(S.sites(), 2.0));
  const std::vector<double> tubes = default_tube_radii(S);

  double medians[2] = {0, 0};
  const unsigned ns[2] = {5, 15};
  for (int k = 0; k < 2; ++k) {
    RootSet rs = solve_exact(iterate_numerator_closed(h, q, ns[k]).numer, 256);
    medians[k] = skeleton_stats(rs, V, kEscapeRadius, tubes).median_distance;
  }
  std::ostringstream os;
  os << "median skeleton distance: n=5: " << medians[0] << ", n=15: " << medians[1]
     << " (needs <= half)";
  detail = os.str();
  return medians[1] <= 0.5 * medians[0];
}

bool criterion_12(std::string& detail) {
  RationalFn h = four_pole_instance();
  OperatorSymbol q = sym({1, 0, 1});
  const BoundingBox box{-1.5, 1.5, -1.5, 1.5};  // avoids all four poles
  const cplx probe(-1.0, 0.0);                  // off the skeleton

  const std::vector<unsigned> ns{5, 8, 11, 14, 15};
  PotentialConvergenceReport rep = potential_convergence(h, q, ns, box, 161, 161, probe, 256);

  const double l1_5 = rep.rows.front().l1_shifted;
  const double l1_15 = rep.rows.back().l1_shifted;
  bool increasing = true;
  std::ostringstream os;
  os << "L1: n=5: " << l1_5 << ", n=15: " << l1_15 << " (needs 40% drop); unshifted at probe:";
  for (size_t k = 0; k + 1 < rep.rows.size(); ++k) {  // rows for n = 5, 8, 11, 14
    os << " " << rep.rows[k].unshifted_at_probe;
    if (k > 0) increasing = increasing && rep.rows[k].unshifted_at_probe >
                                              rep.rows[k - 1].unshifted_at_probe;
  }
  detail = os.str();
  return l1_15 <= 0.6 * l1_5 && increasing;
}

bool criterion_13(std::string& detail) {
  RationalFn h = four_pole_instance();
  OperatorSymbol q = sym({0, 0, 1});  // pure second derivative: r = m
  const BoundingBox box{-1.5, 1.5, -1.5, 1.5};
  const std::vector<unsigned> ns{4, 8, 12};

  auto escapes = escape_experiment(h, q, ns, kEscapeRadius, 256);
  size_t escaped_total = 0;
  for (const auto& row : escapes) escaped_total += row.escaped;

  // r = m: the shift vanishes and the limit field is the pole-set potential
  PotentialConvergenceReport rep = potential_convergence(h, q, ns, box, 161, 161, cplx(-1, 0), 256);
  const bool decreasing = rep.rows[1].l1_shifted < rep.rows[0].l1_shifted &&
                          rep.rows[2].l1_shifted < rep.rows[1].l1_shifted;
  std::ostringstream os;
  os << "escaped " << escaped_total << " (needs 0); unshifted L1 to the pole-set potential:";
  for (const auto& row : rep.rows) os << " n=" << row.n << ":" << row.l1_shifted;
  detail = os.str();
  return escaped_total == 0 && decreasing;
}

bool criterion_14(std::string& detail) {
  const std::vector<unsigned> ns{5, 20};
  OnePoleReport rep = onepole_experiment(one_pole_instance(), sym({1, 0, 1}), ns, cplx(1, 0), 256);
  const double grow = rep.rows[1].min_root_modulus / rep.rows[0].min_root_modulus;
  const double final_value = rep.rows[1].shifted_at_probe;
  std::ostringstream os;
  os << "min |root| growth factor " << grow << " (needs > 2); shifted potential at z=1: "
     << final_value << " (needs within 0.05 of 0)";
  detail = os.str();
  return grow > 2.0 && std::abs(final_value - rep.limit_value) <= 0.05;
}

bool criterion_15(std::string& detail) {
  RationalFn hf = four_pole_instance();
  RationalFn h1 = one_pole_instance();
  struct Job {
    RationalFn h;
    OperatorSymbol q;
    std::vector<unsigned> ns;
  };
  const std::vector<Job> jobs{{hf, sym({1, 0, 1}), {5, 10, 12, 15}},
                              {hf, sym({0, 0, 1}), {4, 8, 12}},
                              {h1, sym({1, 0, 1}), {5, 20}}};
  size_t solved = 0;
  double worst_residual = 0, worst_vieta = 0;
  for (const auto& job : jobs) {
    for (unsigned n : job.ns) {
      const RationalFn& h = job.q.vanishing_order() >= 1 && !job.h.is_proper()
                                ? job.h.split_polynomial_part().proper_part
                                : job.h;
      ExactPoly numer = iterate_numerator_closed(h, job.q, n).numer;
      AberthOptions opts;
      opts.residual_tol = 1e-30;
      RootSet rs = find_roots(to_float_poly(numer, 256, true), opts);
      FloatPoly fp = to_float_poly(numer, 256, true);
      VietaReport vieta = vieta_check(rs, fp);
      worst_residual = std::max(worst_residual, rs.max_residual);
      worst_vieta = std::max({worst_vieta, vieta.sum_rel_err, vieta.product_rel_err});
      ++solved;
    }
  }
  std::ostringstream os;
  os << solved << " root sets at 256 bits; worst residual " << worst_residual
     << " (needs < 1e-30), worst Vieta error " << worst_vieta << " (needs < 1e-25)";
  detail = os.str();
  return worst_residual < 1e-30 && worst_vieta < 1e-25;
}

struct Criterion {
  int id;
  const char* title;
  bool (*run)(std::string&);
};

const Criterion kCriteria[] = {
    {1, "exact degree identity over 50 randomized instances", criterion_1},
    {2, "exact leading-coefficient identity", criterion_2},
    {3, "exact coprimality with the denominator", criterion_3},
    {4, "closed-form and stepwise routes produce identical numerators", criterion_4},
    {5, "exact pole-value identity for the derivative numerators", criterion_5},
    {6, "exact defect coefficient bound", criterion_6},
    {7, "defect asymptotics for q = x^2+x+1 at defect 2", criterion_7},
    {8, "pointwise growth asymptotic at z = 3", criterion_8},
    {9, "riesz mass of the pole-set potential", criterion_9},
    {10, "escape count near 2n at the default radius", criterion_10},
    {11, "skeleton attraction of retained roots", criterion_11},
    {12, "shifted-potential L1 convergence and unshifted divergence", criterion_12},
    {13, "pure-derivative specialization", criterion_13},
    {14, "one-pole degeneration", criterion_14},
    {15, "root-set residual and Vieta validity", criterion_15},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);

  int failures = 0;
  for (const Criterion& c : kCriteria) {
    if (only && c.id != only) continue;
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] criterion %2d: %s (%s)\n", ok ? "PASS" : "FAIL", c.id, c.title,
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
