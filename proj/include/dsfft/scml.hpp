// Copyright dsfft contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dsfft/digit_slicing.hpp"
#include "dsfft/fixedpoint.hpp"

namespace dsfft {

/// Single Constant Multiplier-Less: one ROM bank per input block, each
/// holding the exact product of the constant with every possible block code.
/// roms[k][s] == constant.raw * decode(k, s), where the slice code s decodes
/// as unsigned for k < b-1 and as a signed p-bit value for the top block.
/// Entries fit in entry_width = constant width + p bits.
struct ScmlTable {
  FxWord constant;
  SliceParams params;
  std::vector<std::vector<raw_t>> roms;  // [b][2^p]
  int entry_width = 0;

  bool operator==(const ScmlTable&) const = default;
};

/// Recombination trace of one staged evaluation. level_partials[0] holds the
/// b raw ROM outputs; each following level holds the pairwise shift-add
/// results (an odd partial passes to the next level unchanged).
/// passthrough[l] holds, for each pair combined at level l+1, the low bits of
/// the lower partial that the adder never touches (the shifted upper operand
/// is zero there).
struct ScmlStageTrace {
  std::vector<std::vector<raw_t>> level_partials;
  std::vector<std::vector<raw_t>> passthrough;
  raw_t result = 0;

  bool operator==(const ScmlStageTrace&) const = default;
};

/// Fill every ROM entry with the exact product constant.raw * decode(k, s).
/// Requires A1 slice parameters.
ScmlTable build_table(const FxWord& c, const SliceParams& params);

/// Multiply by the table's constant via block lookups and shift-adds.
/// Bit-identical to fx_mul_full(constant, x); result format
/// Q(wc + wx, fc + fx). Requires x.fmt.width == p*b.
FxWord scml_mul(const ScmlTable& t, const FxWord& x);

/// Same product, evaluated through the explicit balanced adder tree, with the
/// per-stage partials recorded for pipeline simulation and testbench checks.
std::pair<FxWord, ScmlStageTrace> scml_mul_staged(const ScmlTable& t, const FxWord& x);

/// Text dump: header "p b entry_width constant_raw", then b*2^p lines of
/// "k s value" in decimal, k outer ascending, s inner ascending.
std::string dump_table(const ScmlTable& t);

/// Total ROM storage in bits: b * 2^p * entry_width.
std::int64_t table_rom_bits(const ScmlTable& t);

}  // namespace dsfft
