// Copyright dsfft contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "dsfft/butterfly.hpp"

#include <stdexcept>

namespace dsfft {

TwiddleTables make_twiddle_tables(const FxWord& wr, const FxWord& wi,
                                  const SliceParams& slice) {
  if (wr.fmt != wi.fmt)
    throw std::invalid_argument("make_twiddle_tables: component formats differ");
  return {wr, wi, build_table(wr, slice), build_table(wi, slice)};
}

namespace {

/// Widen to a larger fraction count by exact left shift.
FxWord align_frac(const FxWord& v, int frac) {
  const int grow = frac - v.fmt.frac;
  return fx_requantize(v, QFormat(v.fmt.width + grow, frac), Overflow::Saturate,
                       Rounding::Truncate);
}

FxWord requant_output(const FxWord& full, const RequantPolicy& q) {
  FxWord v = full;
  if (q.stage_shift == StageShift::Half) v.fmt = QFormat(v.fmt.width, v.fmt.frac + 1);
  return fx_requantize(v, q.out_fmt, q.overflow, q.rounding);
}

struct FullOutputs {
  FxWord x_re, x_im, y_re, y_im;
};

/// Complex combine shared by both butterfly implementations: given the four
/// real products of B with (wr, wi), form X = A + WB and Y = A - WB for
/// W = wr - j*wi at full precision.
FullOutputs combine(const ComplexFx& a, const FxWord& p_rr, const FxWord& p_ii,
                    const FxWord& p_ri, const FxWord& p_ir) {
  const FxWord wb_r = fx_add(p_rr, p_ii);
  const FxWord wb_i = fx_sub(p_ri, p_ir);
  const FxWord ar = align_frac(a.re, wb_r.fmt.frac);
  const FxWord ai = align_frac(a.im, wb_i.fmt.frac);
  return {fx_add(ar, wb_r), fx_add(ai, wb_i), fx_sub(ar, wb_r), fx_sub(ai, wb_i)};
}

ButterflyOut quantize(const FullOutputs& f, const RequantPolicy& q) {
  return {ComplexFx(requant_output(f.x_re, q), requant_output(f.x_im, q)),
          ComplexFx(requant_output(f.y_re, q), requant_output(f.y_im, q))};
}

}  // namespace

ButterflyFull butterfly_full_precision(const ComplexFx& a, const ComplexFx& b,
                                       const FxWord& wr, const FxWord& wi) {
  if (a.fmt() != b.fmt())
    throw std::invalid_argument("butterfly: input formats differ");
  if (wr.fmt != wi.fmt)
    throw std::invalid_argument("butterfly: twiddle component formats differ");
  const FxWord p_rr = fx_mul_full(wr, b.re);
  const FxWord p_ii = fx_mul_full(wi, b.im);
  const FxWord p_ri = fx_mul_full(wr, b.im);
  const FxWord p_ir = fx_mul_full(wi, b.re);
  const FullOutputs f = combine(a, p_rr, p_ii, p_ri, p_ir);
  return {f.x_re, f.x_im, f.y_re, f.y_im};
}

ButterflyOut butterfly_conventional(const ComplexFx& a, const ComplexFx& b,
                                    const FxWord& wr, const FxWord& wi,
                                    const RequantPolicy& q) {
  const ButterflyFull f = butterfly_full_precision(a, b, wr, wi);
  return quantize({f.x_re, f.x_im, f.y_re, f.y_im}, q);
}

ButterflyOut butterfly_ds(const ComplexFx& a, const ComplexFx& b,
                          const TwiddleTables& t, const RequantPolicy& q) {
  if (a.fmt() != b.fmt())
    throw std::invalid_argument("butterfly: input formats differ");
  const FxWord p_rr = scml_mul(t.wr_table, b.re);
  const FxWord p_ii = scml_mul(t.wi_table, b.im);
  const FxWord p_ri = scml_mul(t.wr_table, b.im);
  const FxWord p_ir = scml_mul(t.wi_table, b.re);
  return quantize(combine(a, p_rr, p_ii, p_ri, p_ir), q);
}

ButterflyTraced butterfly_ds_traced(const ComplexFx& a, const ComplexFx& b,
                                    const TwiddleTables& t, const RequantPolicy& q) {
  if (a.fmt() != b.fmt())
    throw std::invalid_argument("butterfly: input formats differ");
  auto [p_rr, tr_rr] = scml_mul_staged(t.wr_table, b.re);
  auto [p_ii, tr_ii] = scml_mul_staged(t.wi_table, b.im);
  auto [p_ri, tr_ri] = scml_mul_staged(t.wr_table, b.im);
  auto [p_ir, tr_ir] = scml_mul_staged(t.wi_table, b.re);
  ButterflyTraced result{quantize(combine(a, p_rr, p_ii, p_ri, p_ir), q),
                         {std::move(tr_rr), std::move(tr_ii), std::move(tr_ri),
                          std::move(tr_ir)}};
  return result;
}

}  // namespace dsfft
