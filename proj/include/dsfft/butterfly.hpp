// Copyright dsfft contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>

#include "dsfft/scml.hpp"

namespace dsfft {

/// Constant bank for one twiddle factor W = wr - j*wi. Both tables are built
/// from the same slice parameters.
struct TwiddleTables {
  FxWord wr;
  FxWord wi;
  ScmlTable wr_table;
  ScmlTable wi_table;
};

TwiddleTables make_twiddle_tables(const FxWord& wr, const FxWord& wi,
                                  const SliceParams& slice);

enum class StageShift { None, Half };

/// Output quantization applied once, at the butterfly outputs. Half shifting
/// divides both outputs by two before requantizing (the standard per-stage
/// overflow guard).
struct RequantPolicy {
  QFormat out_fmt{};
  Rounding rounding = Rounding::Truncate;
  Overflow overflow = Overflow::Saturate;
  StageShift stage_shift = StageShift::Half;
};

struct ButterflyOut {
  ComplexFx x;
  ComplexFx y;

  bool operator==(const ButterflyOut&) const = default;
};

/// Radix-2 DIT butterfly, direct form: X = A + WB, Y = A - WB with
/// W = wr - j*wi realized as four real multiplies and two real adds, then the
/// complex add/sub, then the output quantization.
ButterflyOut butterfly_conventional(const ComplexFx& a, const ComplexFx& b,
                                    const FxWord& wr, const FxWord& wi,
                                    const RequantPolicy& q);

/// Same butterfly with the four real products taken from the constant tables
/// (wr_table and wi_table each looked up twice). Bit-identical to
/// butterfly_conventional for the same constants and policy.
ButterflyOut butterfly_ds(const ComplexFx& a, const ComplexFx& b,
                          const TwiddleTables& t, const RequantPolicy& q);

/// butterfly_ds plus the four staged-recombination traces, in the order
/// wr*b_re, wi*b_im, wr*b_im, wi*b_re.
struct ButterflyTraced {
  ButterflyOut out;
  std::array<ScmlStageTrace, 4> traces;
};

ButterflyTraced butterfly_ds_traced(const ComplexFx& a, const ComplexFx& b,
                                    const TwiddleTables& t, const RequantPolicy& q);

/// Full-precision butterfly (no requantization): exact X = A + WB, Y = A - WB
/// at the product scale. Used by conservation checks and oracles.
struct ButterflyFull {
  FxWord x_re, x_im, y_re, y_im;
};

ButterflyFull butterfly_full_precision(const ComplexFx& a, const ComplexFx& b,
                                       const FxWord& wr, const FxWord& wi);

}  // namespace dsfft
