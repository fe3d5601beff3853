// Timing comparison of the OpenMP kernels against their serial references:
// grid sampling of the pole-set potential, the Riesz stencil, and the
// Jacobi-parallel vs Gauss-Seidel-serial root-finding sweeps.

#include <omp.h>

#include <cstdio>
#include <functional>

#include "voroshire/diagnostics.hpp"

namespace vs = voroshire;

namespace {

double timed(const std::function<void()>& fn) {
  const double t0 = omp_get_wtime();
  fn();
  return omp_get_wtime() - t0;
}

void report(const char* name, double serial, double parallel, double agreement) {
  std::printf("%-28s serial %8.3fs  openmp %8.3fs  speedup %5.2fx  agreement %.3g\n", name,
              serial, parallel, serial / parallel, agreement);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());

  vs::RationalFn h = vs::RationalFn::from_poles(
      vs::ExactPoly::constant(1),
      {vs::GaussRational(mpq_class(-3), mpq_class(5)), vs::GaussRational(mpq_class(4), mpq_class(-6)),
       vs::GaussRational(-8), vs::GaussRational(mpq_class(0), mpq_class(-2))});
  vs::OperatorSymbol q({vs::GaussRational(1), vs::GaussRational(0), vs::GaussRational(1)});
  vs::PoleSet S = vs::make_pole_set(h);

  // potential sampling, 801x801
  const vs::BoundingBox box = vs::BoundingBox::square(S.centroid(), 4.0 * S.diameter());
  auto xi = [&](std::complex<double> z) { return vs::bh_potential(S, z); };
  vs::GridField fs, fp;
  const double t_ser = timed([&] { fs = vs::sample_field_serial(xi, box, 801, 801); });
  const double t_par = timed([&] { fp = vs::sample_field(xi, box, 801, 801); });
  double max_diff = 0;
  for (size_t k = 0; k < fs.values.size(); ++k)
    max_diff = std::max(max_diff, std::abs(fs.values[k] - fp.values[k]));
  report("sample_field 801^2", t_ser, t_par, max_diff);

  vs::CellMassGrid ms, mp;
  const double r_ser = timed([&] { ms = vs::discrete_riesz_measure_serial(fs); });
  const double r_par = timed([&] { mp = vs::discrete_riesz_measure(fs); });
  report("riesz stencil 801^2", r_ser, r_par, std::abs(ms.total - mp.total));

  // root finding on the n = 10 iterate (degree 80)
  vs::IterateResult it = vs::iterate_numerator_closed(h, q, 10);
  vs::FloatPoly poly = vs::to_float_poly(it.numer, 256, true);
  vs::RootSet rs_serial, rs_jacobi;
  const double a_ser = timed([&] { rs_serial = vs::find_roots_serial(poly); });
  const double a_par = timed([&] { rs_jacobi = vs::find_roots(poly); });
  double root_diff = 0;
  for (size_t i = 0; i < rs_serial.roots.size(); ++i)
    root_diff = std::max(root_diff,
                         std::abs(rs_serial.roots[i].to_complex() - rs_jacobi.roots[i].to_complex()));
  char label[64];
  std::snprintf(label, sizeof(label), "aberth degree %d", it.degree);
  report(label, a_ser, a_par, root_diff);
  std::printf("aberth sweeps: gauss-seidel %u, jacobi %u\n", rs_serial.iterations,
              rs_jacobi.iterations);
  return 0;
}
