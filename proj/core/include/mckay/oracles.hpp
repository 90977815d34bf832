#pragma once

#include "mckay/spectrum.hpp"

namespace mckay {

// Independent spectrum routes, used to cross-check the Gaussian-elimination
// path. Neither shares code with eigen_spectrum.

// mult(zeta_r^k) = (1/r) sum_j tr(g^j) zeta_r^(-kj), evaluated exactly.
EigenSpectrum trace_dft_spectrum(const MatrixGroup& group, std::size_t element_index);

// Floating-point eigensolve; phases snapped to the nearest k/r. Throws
// Internal if a phase is further than `tolerance` from every k/r.
EigenSpectrum float_snap_spectrum(const MatrixGroup& group, std::size_t element_index,
                                  double tolerance = 1e-6);

bool spectra_equal(const EigenSpectrum& a, const EigenSpectrum& b);

}  // namespace mckay
