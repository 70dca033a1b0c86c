// Copyright dsfft contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "dsfft/fft.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace dsfft {

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t reverse_bits(std::size_t v, int bits) {
  std::size_t r = 0;
  for (int i = 0; i < bits; ++i) {
    r = (r << 1) | (v & 1);
    v >>= 1;
  }
  return r;
}

}  // namespace

int FftPlan::stages() const { return std::countr_zero(static_cast<unsigned>(n)); }

std::vector<ComplexFx> bit_reverse_permute(const std::vector<ComplexFx>& v) {
  if (!is_pow2(v.size()))
    throw std::invalid_argument("bit_reverse_permute: length must be a power of two");
  const int bits = std::countr_zero(v.size());
  std::vector<ComplexFx> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[reverse_bits(i, bits)] = v[i];
  return out;
}

FftPlan plan_fft(int n, QFormat fmt, SliceParams slice, RequantPolicy requant,
                 FftImpl impl) {
  if (n < 2 || n > 1024 || !is_pow2(static_cast<std::size_t>(n)))
    throw std::invalid_argument("plan_fft: n must be a power of two in [2, 1024]");
  if (slice.algorithm != SliceAlgorithm::A1)
    throw std::invalid_argument("plan_fft: the datapath slices with A1");
  if (impl == FftImpl::DigitSlicing && fmt.width != slice.p * slice.b)
    throw std::invalid_argument("plan_fft: format width must equal p*b for digit slicing");
  if (requant.out_fmt != fmt)
    throw std::invalid_argument("plan_fft: requant output format must equal the plan format");

  FftPlan plan{n, fmt, slice, requant, impl, {}};
  plan.twiddles.reserve(n / 2);
  for (int k = 0; k < n / 2; ++k) {
    const double ang = 2.0 * std::numbers::pi * k / n;
    const FxWord wr = fx_from_real(std::cos(ang), fmt, Rounding::NearestEven);
    const FxWord wi = fx_from_real(std::sin(ang), fmt, Rounding::NearestEven);
    plan.twiddles.push_back(make_twiddle_tables(wr, wi, slice));
  }
  return plan;
}

std::vector<ComplexFx> fft_execute(const FftPlan& plan, const std::vector<ComplexFx>& x) {
  if (static_cast<int>(x.size()) != plan.n)
    throw std::invalid_argument("fft_execute: input length does not match plan");
  for (const auto& s : x)
    if (s.fmt() != plan.fmt)
      throw std::invalid_argument("fft_execute: sample format does not match plan");

  std::vector<ComplexFx> v = bit_reverse_permute(x);
  for (int span = 2; span <= plan.n; span <<= 1) {
    const int half = span / 2;
    const int stride = plan.n / span;
    for (int base = 0; base < plan.n; base += span) {
      for (int j = 0; j < half; ++j) {
        const TwiddleTables& tw = plan.twiddles[static_cast<std::size_t>(j) * stride];
        const ButterflyOut out =
            plan.impl == FftImpl::DigitSlicing
                ? butterfly_ds(v[base + j], v[base + j + half], tw, plan.requant)
                : butterfly_conventional(v[base + j], v[base + j + half], tw.wr, tw.wi,
                                         plan.requant);
        v[base + j] = out.x;
        v[base + j + half] = out.y;
      }
    }
  }
  return v;
}

std::vector<std::complex<double>> dft_reference(const std::vector<std::complex<double>>& x) {
  const std::size_t n = x.size();
  std::vector<std::complex<double>> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t t = 0; t < n; ++t) {
      // Reduce k*t mod n before forming the angle to keep it well conditioned.
      const double ang = -2.0 * std::numbers::pi *
                         static_cast<double>((k * t) % n) / static_cast<double>(n);
      acc += x[t] * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    out[k] = acc;
  }
  return out;
}

ErrorMetrics fft_error_report(const std::vector<ComplexFx>& fixed_out,
                              const std::vector<std::complex<double>>& ref_out,
                              const FftPlan& plan) {
  if (fixed_out.size() != ref_out.size())
    throw std::invalid_argument("fft_error_report: length mismatch");
  const double scale =
      plan.requant.stage_shift == StageShift::Half ? std::ldexp(1.0, -plan.stages()) : 1.0;

  ErrorMetrics m;
  double err_energy = 0.0;
  double ref_energy = 0.0;
  for (std::size_t i = 0; i < fixed_out.size(); ++i) {
    const std::complex<double> ref = ref_out[i] * scale;
    const double er = fixed_out[i].re.to_real() - ref.real();
    const double ei = fixed_out[i].im.to_real() - ref.imag();
    m.max_abs_error = std::max({m.max_abs_error, std::abs(er), std::abs(ei)});
    err_energy += er * er + ei * ei;
    ref_energy += std::norm(ref);
  }
  m.rms_error = fixed_out.empty()
                    ? 0.0
                    : std::sqrt(err_energy / (2.0 * static_cast<double>(fixed_out.size())));
  m.snr_db = err_energy == 0.0 ? std::numeric_limits<double>::infinity()
                               : 10.0 * std::log10(ref_energy / err_energy);
  return m;
}

}  // namespace dsfft
