// Copyright dsfft contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <vector>

#include "dsfft/butterfly.hpp"

namespace dsfft {

enum class FftImpl { Conventional, DigitSlicing };

/// Precomputed schedule for an N-point radix-2 decimation-in-time transform.
/// twiddles[k] holds the quantized (cos, sin) pair for W_N^k = e^{-j2*pi*k/N}
/// under the W = wr - j*wi convention, plus its two constant tables.
struct FftPlan {
  int n = 0;
  QFormat fmt{};
  SliceParams slice{};
  RequantPolicy requant{};
  FftImpl impl = FftImpl::DigitSlicing;
  std::vector<TwiddleTables> twiddles;

  int stages() const;
};

/// Reorder a power-of-two-length sequence by bit-reversed index. Involution.
std::vector<ComplexFx> bit_reverse_permute(const std::vector<ComplexFx>& v);

/// Quantize all n/2 twiddles at the plan format and build their constant
/// tables. requant.out_fmt must equal fmt (stage outputs feed the next
/// stage); digit-slicing plans additionally require fmt.width == p*b.
FftPlan plan_fft(int n, QFormat fmt, SliceParams slice, RequantPolicy requant,
                 FftImpl impl = FftImpl::DigitSlicing);

/// Run the transform: bit-reverse permutation, then log2(n) butterfly stages
/// with per-stage requantization per the plan policy.
std::vector<ComplexFx> fft_execute(const FftPlan& plan, const std::vector<ComplexFx>& x);

/// Direct O(n^2) double-precision DFT; the ground-truth oracle.
std::vector<std::complex<double>> dft_reference(const std::vector<std::complex<double>>& x);

struct ErrorMetrics {
  double max_abs_error = 0.0;
  double rms_error = 0.0;
  double snr_db = 0.0;
};

/// Compare a fixed-point spectrum against the double-precision reference,
/// scaling the reference by the plan's cumulative stage shift first. SNR is
/// +infinity when the error energy is zero.
ErrorMetrics fft_error_report(const std::vector<ComplexFx>& fixed_out,
                              const std::vector<std::complex<double>>& ref_out,
                              const FftPlan& plan);

}  // namespace dsfft
