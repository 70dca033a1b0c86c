// Copyright dsfft contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "dsfft/butterfly.hpp"
#include "dsfft/digit_slicing.hpp"
#include "dsfft/fixedpoint.hpp"
#include "dsfft/scml.hpp"

namespace dsfft {

/// One pipeline register stage of the digit-slicing butterfly datapath.
enum class StageKind {
  SliceRomLookup,   // input slicing plus ROM read
  PartialAdd,       // one adder-tree level
  ButterflyAddSub,  // complex combine and A +/- WB
  Requant           // output rounding/saturation
};

std::string to_string(StageKind kind);

/// Ordered stage list; depth() == stages.size() registers, initiation
/// interval 1.
struct PipelineConfig {
  std::vector<StageKind> stages;

  int depth() const { return static_cast<int>(stages.size()); }

  /// 1 slice+ROM stage, ceil(log2(b)) tree levels, 1 add/sub, 1 requant.
  static PipelineConfig standard(const SliceParams& slice);

  /// A config of exactly `depth` stages: shallower than standard merges
  /// trailing work into earlier stages, deeper adds tree-level registers.
  static PipelineConfig of_depth(int depth, const SliceParams& slice);

  bool operator==(const PipelineConfig&) const = default;
};

/// Natural stage count for a slicing geometry: 3 + ceil(log2(b)).
int natural_depth(const SliceParams& slice);

struct StreamOutput {
  std::uint64_t cycle = 0;
  ComplexFx x;
  ComplexFx y;

  bool operator==(const StreamOutput&) const = default;
};

/// Per-input SCML recombination traces, multiplier order as
/// butterfly_ds_traced: wr*b_re, wi*b_im, wr*b_im, wi*b_re.
struct StreamTraceEntry {
  std::array<ScmlStageTrace, 4> scml;

  bool operator==(const StreamTraceEntry&) const = default;
};

/// Cycle-level simulation of the pipelined butterfly. Input i enters at
/// cycle i; output i is stamped cycle depth + i and is bit-identical to
/// butterfly_ds on the same operands. When `traces` is non-null it receives
/// one entry per input. Throws std::invalid_argument on an empty stream.
std::vector<StreamOutput> simulate_stream(
    const PipelineConfig& cfg,
    const TwiddleTables& t,
    const RequantPolicy& q,
    const std::vector<std::pair<ComplexFx, ComplexFx>>& inputs,
    std::vector<StreamTraceEntry>* traces = nullptr);

/// Header line plus one "cycle,xr,xi,yr,yi" row per output, raw decimal.
void write_stream_csv(std::ostream& out, const std::vector<StreamOutput>& stream);

enum class DesignKind { Conventional, DigitSlicing };

std::string to_string(DesignKind kind);

/// Structural cost score weights. Adders are weighted per result bit,
/// multipliers per width^2. A transparent model, not vendor gate counts.
struct GateProxyWeights {
  double rom_bit = 1.0;
  double adder_bit = 6.0;
  double register_bit = 4.0;
  double multiplier_per_width2 = 6.0;

  bool operator==(const GateProxyWeights&) const = default;
};

struct CostReport {
  DesignKind design = DesignKind::DigitSlicing;
  int width = 0;
  int p = 0;
  int b = 0;
  int constant_pairs = 0;
  std::int64_t rom_bits = 0;
  int adder_count = 0;
  int multiplier_count = 0;
  std::int64_t register_bits = 0;
  int pipeline_depth = 0;
  double gate_proxy = 0.0;

  /// Fixed key order, suitable for byte-stable output.
  nlohmann::ordered_json to_json() const;

  bool operator==(const CostReport&) const = default;
};

/// Closed-form structural cost of one butterfly.
///
/// digit_slicing: per constant, rom_bits = b * 2^p * (width + p); a pair
/// (wr, wi) therefore costs twice that. adder_count = 4*(b-1) tree adders
/// plus 6 combine adders; no hardware multipliers; registers cover the
/// standard pipeline depth at four words per stage.
///
/// conventional: four real multipliers, 2 + 4 adders, one output register
/// stage, no ROM.
CostReport estimate_cost(DesignKind design,
                         QFormat fmt,
                         const SliceParams& slice,
                         int constant_pairs,
                         const GateProxyWeights& weights = {});

}  // namespace dsfft
