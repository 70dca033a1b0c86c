// Copyright dsfft contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "dsfft/butterfly.hpp"
#include "oracles.hpp"

using namespace dsfft;

namespace {

TwiddleTables twiddle_of(int k, int n, QFormat fmt, const SliceParams& slice) {
  const double ang = 2.0 * std::numbers::pi * k / n;
  return make_twiddle_tables(fx_from_real(std::cos(ang), fmt),
                             fx_from_real(std::sin(ang), fmt), slice);
}

ComplexFx random_sample(std::mt19937_64& rng, QFormat fmt) {
  std::uniform_int_distribution<raw_t> dist(fmt.min_raw(), fmt.max_raw());
  return ComplexFx(FxWord(dist(rng), fmt), FxWord(dist(rng), fmt));
}

}  // namespace

TEST_CASE("make_twiddle_tables rejects mismatched component formats") {
  CHECK_THROWS_AS(make_twiddle_tables(FxWord(1, QFormat(16, 15)), FxWord(1, QFormat(16, 14)),
                                      SliceParams(4, 4)),
                  std::invalid_argument);
}

TEST_CASE("digit-slicing butterfly equals the conventional one across b sweeps") {
  const QFormat fmt(8, 7);
  const SliceParams slice(4, 2);
  const TwiddleTables t = twiddle_of(1, 8, fmt, slice);
  RequantPolicy q;
  q.out_fmt = fmt;

  for (raw_t ar : {raw_t(-128), raw_t(-84), raw_t(0), raw_t(1), raw_t(127)}) {
    const ComplexFx a(FxWord(ar, fmt), FxWord(ar, fmt));
    for (raw_t br = fmt.min_raw(); br <= fmt.max_raw(); ++br) {
      for (raw_t bi = fmt.min_raw(); bi <= fmt.max_raw(); ++bi) {
        const ComplexFx b(FxWord(br, fmt), FxWord(bi, fmt));
        const ButterflyOut ds = butterfly_ds(a, b, t, q);
        const ButterflyOut conv = butterfly_conventional(a, b, t.wr, t.wi, q);
        REQUIRE(ds == conv);
      }
    }
  }
}

TEST_CASE("digit-slicing butterfly equals the conventional one under every policy") {
  const QFormat fmt(16, 15);
  const SliceParams slice(4, 4);
  std::mt19937_64 rng(0x5eed0003);

  std::vector<RequantPolicy> policies;
  for (StageShift shift : {StageShift::Half, StageShift::None})
    for (Rounding rounding : {Rounding::Truncate, Rounding::NearestEven})
      for (Overflow overflow : {Overflow::Saturate, Overflow::Wrap})
        policies.push_back(RequantPolicy{fmt, rounding, overflow, shift});

  for (int k = 0; k < 8; ++k) {
    const TwiddleTables t = twiddle_of(k, 16, fmt, slice);
    for (int i = 0; i < 500; ++i) {
      const ComplexFx a = random_sample(rng, fmt);
      const ComplexFx b = random_sample(rng, fmt);
      for (const RequantPolicy& q : policies) {
        const ButterflyOut ds = butterfly_ds(a, b, t, q);
        const ButterflyOut conv = butterfly_conventional(a, b, t.wr, t.wi, q);
        REQUIRE(ds == conv);
      }
    }
  }
}

TEST_CASE("full-precision butterfly matches exact real arithmetic") {
  const QFormat fmt(12, 11);
  const SliceParams slice(4, 3);
  const TwiddleTables t = twiddle_of(3, 32, fmt, slice);
  std::mt19937_64 rng(0x5eed0004);

  for (int i = 0; i < 1000; ++i) {
    const ComplexFx a = random_sample(rng, fmt);
    const ComplexFx b = random_sample(rng, fmt);
    const ButterflyFull f = butterfly_full_precision(a, b, t.wr, t.wi);

    // W = wr - j*wi, so WB = (wr*br + wi*bi) + j(wr*bi - wi*br). All terms
    // are exact in double at these widths.
    const double wr = t.wr.to_real(), wi = t.wi.to_real();
    const double br = b.re.to_real(), bi = b.im.to_real();
    const double wb_re = wr * br + wi * bi;
    const double wb_im = wr * bi - wi * br;
    CHECK(f.x_re.to_real() == a.re.to_real() + wb_re);
    CHECK(f.x_im.to_real() == a.im.to_real() + wb_im);
    CHECK(f.y_re.to_real() == a.re.to_real() - wb_re);
    CHECK(f.y_im.to_real() == a.im.to_real() - wb_im);
  }
}

TEST_CASE("the single requant site behaves like direct quantization") {
  const QFormat fmt(10, 9);
  const SliceParams slice(5, 2);
  const TwiddleTables t = twiddle_of(2, 16, fmt, slice);
  std::mt19937_64 rng(0x5eed0005);

  for (StageShift shift : {StageShift::Half, StageShift::None}) {
    for (Rounding rounding : {Rounding::Truncate, Rounding::NearestEven}) {
      const RequantPolicy q{fmt, rounding, Overflow::Saturate, shift};
      for (int i = 0; i < 500; ++i) {
        const ComplexFx a = random_sample(rng, fmt);
        const ComplexFx b = random_sample(rng, fmt);
        const ButterflyFull f = butterfly_full_precision(a, b, t.wr, t.wi);
        const ButterflyOut out = butterfly_ds(a, b, t, q);
        const double scale = shift == StageShift::Half ? 0.5 : 1.0;
        CHECK(out.x.re.raw == oracles::quantize(f.x_re.to_real() * scale, fmt, rounding));
        CHECK(out.x.im.raw == oracles::quantize(f.x_im.to_real() * scale, fmt, rounding));
        CHECK(out.y.re.raw == oracles::quantize(f.y_re.to_real() * scale, fmt, rounding));
        CHECK(out.y.im.raw == oracles::quantize(f.y_im.to_real() * scale, fmt, rounding));
      }
    }
  }
}

TEST_CASE("saturate and wrap disagree exactly when the range is exceeded") {
  const QFormat fmt(8, 7);
  const SliceParams slice(4, 2);
  // W quantized from (1, 0): multiplying by ~1 keeps B nearly unchanged, so
  // A + WB overflows whenever A and B push the same way and no shift helps.
  const TwiddleTables t = twiddle_of(0, 8, fmt, slice);
  const ComplexFx a(FxWord(127, fmt), FxWord(-128, fmt));
  const ComplexFx b(FxWord(127, fmt), FxWord(-128, fmt));

  const RequantPolicy sat{fmt, Rounding::Truncate, Overflow::Saturate, StageShift::None};
  const RequantPolicy wrap{fmt, Rounding::Truncate, Overflow::Wrap, StageShift::None};
  const ButterflyOut s = butterfly_ds(a, b, t, sat);
  const ButterflyOut w = butterfly_ds(a, b, t, wrap);
  CHECK(s.x.re.raw == 127);
  CHECK(s.x.im.raw == -128);
  CHECK(w.x.re.raw != s.x.re.raw);
  // Wrap keeps the low bits of the two's-complement pattern.
  const ButterflyFull f = butterfly_full_precision(a, b, t.wr, t.wi);
  const raw_t truncated = f.x_re.raw >> (f.x_re.fmt.frac - fmt.frac);
  CHECK(w.x.re.raw == detail::sign_extend(static_cast<std::uint64_t>(truncated), 8));
}

TEST_CASE("traced butterfly returns the untraced result plus staged traces") {
  const QFormat fmt(16, 15);
  const SliceParams slice(4, 4);
  const TwiddleTables t = twiddle_of(5, 64, fmt, slice);
  RequantPolicy q;
  q.out_fmt = fmt;
  std::mt19937_64 rng(0x5eed0006);

  for (int i = 0; i < 200; ++i) {
    const ComplexFx a = random_sample(rng, fmt);
    const ComplexFx b = random_sample(rng, fmt);
    const ButterflyTraced traced = butterfly_ds_traced(a, b, t, q);
    CHECK(traced.out == butterfly_ds(a, b, t, q));
    // Trace order: wr*b_re, wi*b_im, wr*b_im, wi*b_re.
    CHECK(traced.traces[0] == scml_mul_staged(t.wr_table, b.re).second);
    CHECK(traced.traces[1] == scml_mul_staged(t.wi_table, b.im).second);
    CHECK(traced.traces[2] == scml_mul_staged(t.wr_table, b.im).second);
    CHECK(traced.traces[3] == scml_mul_staged(t.wi_table, b.re).second);
  }
}

TEST_CASE("butterfly rejects operands whose width does not match the tables") {
  const QFormat fmt(16, 15);
  const SliceParams slice(4, 4);
  const TwiddleTables t = twiddle_of(1, 8, fmt, slice);
  RequantPolicy q;
  q.out_fmt = fmt;
  const ComplexFx good(FxWord(0, fmt), FxWord(0, fmt));
  const ComplexFx bad(FxWord(0, QFormat(12, 11)), FxWord(0, QFormat(12, 11)));
  CHECK_THROWS_AS(butterfly_ds(good, bad, t, q), std::invalid_argument);
}
