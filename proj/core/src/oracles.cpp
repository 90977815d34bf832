#include "mckay/oracles.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>

#include "mckay/errors.hpp"

namespace mckay {

EigenSpectrum trace_dft_spectrum(const MatrixGroup& group, std::size_t element_index) {
  std::int64_t r = static_cast<std::int64_t>(group.element_order(element_index));
  std::int64_t field = lcm_checked(group.field_order(), r);

  // traces of powers, walking the group by index
  std::vector<Cyclotomic> traces(static_cast<std::size_t>(r));
  std::size_t acc = element_index;
  for (std::int64_t j = 1; j <= r; ++j) {
    traces[static_cast<std::size_t>(j - 1)] = group.element(acc).trace().promoted(field);
    acc = group.product(acc, element_index);
  }

  EigenSpectrum out;
  for (std::int64_t k = 1; k <= r; ++k) {
    Cyclotomic sum = Cyclotomic::zero(field);
    for (std::int64_t j = 1; j <= r; ++j) {
      Cyclotomic w = Cyclotomic::root_of_unity(field, ((-k * j) % r) * (field / r));
      sum += traces[static_cast<std::size_t>(j - 1)] * w;
    }
    Cyclotomic mult = sum * Cyclotomic::rational(Rational(1, r));
    require(mult.is_rational(), ErrorKind::Internal, "trace DFT gave a non-rational multiplicity");
    Rational mq = mult.rational_value();
    require(is_integer(mq) && mq >= 0, ErrorKind::Internal,
            "trace DFT gave a non-integer multiplicity " + rat_string(mq));
    int m = static_cast<int>(to_int64(rat_num(mq)));
    if (m == 0) continue;
    out.entries.push_back(SpectrumEntry{turn_fraction(Rational(k, r)), m});
    out.total_dim += m;
  }
  std::sort(out.entries.begin(), out.entries.end(),
            [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.q < b.q; });
  return out;
}

EigenSpectrum float_snap_spectrum(const MatrixGroup& group, std::size_t element_index,
                                  double tolerance) {
  std::int64_t r = static_cast<std::int64_t>(group.element_order(element_index));
  const CycMatrix& m = group.element(element_index);
  int n = m.dim();
  Eigen::MatrixXcd em(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) em(i, j) = m.at(i, j).to_complex();

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(em, /*computeEigenvectors=*/false);
  require(solver.info() == Eigen::Success, ErrorKind::Internal, "float eigensolver failed");

  std::map<Rational, int> counts;
  const double two_pi = 6.283185307179586476925287;
  for (int i = 0; i < n; ++i) {
    std::complex<double> lambda = solver.eigenvalues()(i);
    double phase = std::arg(lambda) / two_pi;  // in (-1/2, 1/2]
    if (phase <= 0) phase += 1.0;              // into (0, 1]
    double scaled = phase * static_cast<double>(r);
    std::int64_t k = static_cast<std::int64_t>(std::llround(scaled));
    require(std::abs(scaled - static_cast<double>(k)) <= tolerance * static_cast<double>(r),
            ErrorKind::Internal,
            "float eigenvalue phase does not snap to a multiple of 1/" + std::to_string(r));
    if (k == 0) k = r;
    counts[turn_fraction(Rational(k, r)).value] += 1;
  }
  EigenSpectrum out;
  for (const auto& [q, mult] : counts) {
    out.entries.push_back(SpectrumEntry{TurnFraction{q}, mult});
    out.total_dim += mult;
  }
  return out;
}

bool spectra_equal(const EigenSpectrum& a, const EigenSpectrum& b) {
  if (a.total_dim != b.total_dim || a.entries.size() != b.entries.size()) return false;
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    if (a.entries[i].q != b.entries[i].q || a.entries[i].mult != b.entries[i].mult) return false;
  }
  return true;
}

}  // namespace mckay
