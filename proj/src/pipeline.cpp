// Copyright dsfft contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "dsfft/pipeline.hpp"

#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace dsfft {

namespace {

int ceil_log2(int v) {
  int levels = 0;
  int span = 1;
  while (span < v) {
    span *= 2;
    ++levels;
  }
  return levels;
}

}  // namespace

std::string to_string(StageKind kind) {
  switch (kind) {
    case StageKind::SliceRomLookup: return "slice_rom_lookup";
    case StageKind::PartialAdd: return "partial_add";
    case StageKind::ButterflyAddSub: return "butterfly_addsub";
    case StageKind::Requant: return "requant";
  }
  throw std::invalid_argument("unknown StageKind");
}

int natural_depth(const SliceParams& slice) { return 3 + ceil_log2(slice.b); }

PipelineConfig PipelineConfig::standard(const SliceParams& slice) {
  return of_depth(natural_depth(slice), slice);
}

PipelineConfig PipelineConfig::of_depth(int depth, const SliceParams& slice) {
  if (depth < 1) throw std::invalid_argument("pipeline depth must be >= 1");
  (void)slice;  // geometry validated by SliceParams itself
  PipelineConfig cfg;
  cfg.stages.reserve(static_cast<size_t>(depth));
  cfg.stages.push_back(StageKind::SliceRomLookup);
  if (depth >= 4) {
    for (int i = 0; i < depth - 3; ++i) cfg.stages.push_back(StageKind::PartialAdd);
  }
  if (depth >= 3) cfg.stages.push_back(StageKind::ButterflyAddSub);
  if (depth >= 2) cfg.stages.push_back(StageKind::Requant);
  return cfg;
}

std::vector<StreamOutput> simulate_stream(
    const PipelineConfig& cfg,
    const TwiddleTables& t,
    const RequantPolicy& q,
    const std::vector<std::pair<ComplexFx, ComplexFx>>& inputs,
    std::vector<StreamTraceEntry>* traces) {
  if (inputs.empty()) throw std::invalid_argument("simulate_stream: empty input stream");
  const int depth = cfg.depth();
  if (depth < 1) throw std::invalid_argument("simulate_stream: config has no stages");

  if (traces) {
    traces->clear();
    traces->reserve(inputs.size());
  }

  // Shift-register model: the payload latched at the end of cycle i reaches
  // the last register after depth edges, so output i reads out at cycle
  // depth + i. Values are computed once at entry; the stage list fixes only
  // the register count.
  std::vector<std::optional<ButterflyOut>> regs(static_cast<size_t>(depth));
  std::vector<StreamOutput> out;
  out.reserve(inputs.size());

  const std::uint64_t total_cycles = inputs.size() + static_cast<std::uint64_t>(depth);
  for (std::uint64_t cycle = 0; cycle < total_cycles; ++cycle) {
    if (const auto& last = regs[static_cast<size_t>(depth - 1)]; last.has_value()) {
      out.push_back(StreamOutput{cycle, last->x, last->y});
    }
    std::optional<ButterflyOut> incoming;
    if (cycle < inputs.size()) {
      const auto& [a, b] = inputs[static_cast<size_t>(cycle)];
      if (traces) {
        ButterflyTraced traced = butterfly_ds_traced(a, b, t, q);
        traces->push_back(StreamTraceEntry{traced.traces});
        incoming = traced.out;
      } else {
        incoming = butterfly_ds(a, b, t, q);
      }
    }
    for (size_t k = static_cast<size_t>(depth) - 1; k > 0; --k) {
      regs[k] = regs[k - 1];
    }
    regs[0] = incoming;
  }
  return out;
}

void write_stream_csv(std::ostream& out, const std::vector<StreamOutput>& stream) {
  std::ostringstream ss;
  ss << "cycle,xr,xi,yr,yi\n";
  for (const auto& s : stream) {
    ss << s.cycle << ',' << s.x.re.raw << ',' << s.x.im.raw << ',' << s.y.re.raw << ','
       << s.y.im.raw << '\n';
  }
  out << ss.str();
}

std::string to_string(DesignKind kind) {
  switch (kind) {
    case DesignKind::Conventional: return "conventional";
    case DesignKind::DigitSlicing: return "digit_slicing";
  }
  throw std::invalid_argument("unknown DesignKind");
}

nlohmann::ordered_json CostReport::to_json() const {
  nlohmann::ordered_json j;
  j["design"] = to_string(design);
  j["width"] = width;
  j["p"] = p;
  j["b"] = b;
  j["constant_pairs"] = constant_pairs;
  j["rom_bits"] = rom_bits;
  j["adder_count"] = adder_count;
  j["multiplier_count"] = multiplier_count;
  j["register_bits"] = register_bits;
  j["pipeline_depth"] = pipeline_depth;
  j["gate_proxy"] = gate_proxy;
  return j;
}

CostReport estimate_cost(DesignKind design,
                         QFormat fmt,
                         const SliceParams& slice,
                         int constant_pairs,
                         const GateProxyWeights& weights) {
  if (constant_pairs < 0) throw std::invalid_argument("constant_pairs must be >= 0");
  CostReport r;
  r.design = design;
  r.width = fmt.width;
  r.p = slice.p;
  r.b = slice.b;
  r.constant_pairs = constant_pairs;

  if (design == DesignKind::DigitSlicing) {
    const std::int64_t entry_width = fmt.width + slice.p;
    const std::int64_t per_constant =
        static_cast<std::int64_t>(slice.b) * (std::int64_t{1} << slice.p) * entry_width;
    r.rom_bits = 2 * static_cast<std::int64_t>(constant_pairs) * per_constant;
    r.adder_count = 4 * (slice.b - 1) + 6;
    r.multiplier_count = 0;
    r.pipeline_depth = natural_depth(slice);
  } else {
    r.rom_bits = 0;
    r.adder_count = 2 + 4;
    r.multiplier_count = 4;
    r.pipeline_depth = 1;
  }
  // Four registered words per stage: the two complex values in flight.
  r.register_bits = static_cast<std::int64_t>(r.pipeline_depth) * 4 * fmt.width;

  const double w = static_cast<double>(fmt.width);
  r.gate_proxy = static_cast<double>(r.rom_bits) * weights.rom_bit +
                 static_cast<double>(r.adder_count) * w * weights.adder_bit +
                 static_cast<double>(r.register_bits) * weights.register_bit +
                 static_cast<double>(r.multiplier_count) * w * w * weights.multiplier_per_width2;
  return r;
}

}  // namespace dsfft
