// Copyright dsfft contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>
#include <vector>

#include "dsfft/fixedpoint.hpp"

namespace dsfft {

/// Two block layouts are supported.
///
/// A1 slices a p*b-bit word into b blocks of p bits, least significant block
/// first; block k carries weight 2^(p*k) and the top block is signed. Word
/// widths are p*b (8, 16, ...).
///
/// A2 covers p*(b-1)+1-bit words (5, 9, 17, ...): block 0 holds only the sign
/// (stored as 0 or -1), blocks 1..b-1 are successive p-bit groups of the
/// fraction, most significant first, with weight (2^p)^-k relative to the
/// sign block.
enum class SliceAlgorithm { A1, A2 };

struct SliceParams {
  int p = 4;
  int b = 4;
  SliceAlgorithm algorithm = SliceAlgorithm::A1;

  SliceParams() = default;
  SliceParams(int p_, int b_, SliceAlgorithm algorithm_ = SliceAlgorithm::A1);

  /// Width of the word this parameter set slices.
  int word_width() const {
    return algorithm == SliceAlgorithm::A1 ? p * b : p * (b - 1) + 1;
  }

  bool operator==(const SliceParams&) const = default;
};

/// A fixed-point word decomposed into blocks. Block ranges:
/// A1: blocks[k] in [0, 2^p-1] for k < b-1, blocks[b-1] in [-2^(p-1), 2^(p-1)-1].
/// A2: blocks[0] in {0, -1}, blocks[k] in [0, 2^p-1] for k >= 1.
struct SlicedWord {
  std::vector<raw_t> blocks;
  SliceParams params;
  QFormat src_fmt;

  bool operator==(const SlicedWord&) const = default;
};

SlicedWord slice_a1(const FxWord& x, const SliceParams& params);
FxWord unslice_a1(const SlicedWord& s);

SlicedWord slice_a2(const FxWord& x, const SliceParams& params);
FxWord unslice_a2(const SlicedWord& s);

/// Slice real and imaginary parts independently with the same parameters.
std::pair<SlicedWord, SlicedWord> slice_complex(const ComplexFx& z, const SliceParams& params);

}  // namespace dsfft
