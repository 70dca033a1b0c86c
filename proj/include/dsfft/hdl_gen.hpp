// Copyright dsfft contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dsfft/butterfly.hpp"
#include "dsfft/scml.hpp"

namespace dsfft {

struct EmittedFile {
  std::string name;
  std::string content;

  bool operator==(const EmittedFile&) const = default;
};

/// One generator call's output: the RTL (or testbench) source plus its hex
/// side files. Everything is deterministic text with '\n' newlines.
struct Emission {
  EmittedFile rtl;
  std::vector<EmittedFile> files;

  /// rtl followed by files, for uniform writing.
  std::vector<EmittedFile> all() const;

  bool operator==(const Emission&) const = default;
};

/// Registers in the emitted SCML multiplier: ROM stage plus tree levels.
int scml_latency(const SliceParams& slice);

/// Registers in the emitted butterfly: ROM, tree, add/sub, requant.
int butterfly_latency(const SliceParams& slice);

/// Verilog for one constant multiplier built from `table`: input
/// x[p*b-1:0], output prod[width(c)+p*b-1:0], one pipeline register per
/// stage. ROM k initializes from "<module_name>_rom<k>.hex" (2^p lines,
/// two's complement, ceil(entry_width/4) hex digits). Throws
/// std::invalid_argument on a malformed module name.
Emission emit_scml(const ScmlTable& table, const std::string& module_name);

/// Verilog for the full butterfly: ports a_re/a_im/b_re/b_im in,
/// x_re/x_im/y_re/y_im out, all in q.out_fmt. Four constant products share
/// the wr/wi ROM banks ("<module_name>_wr_rom<k>.hex" and ..._wi_rom<k>,
/// contents identical to emit_scml's for the same tables). Requires
/// q.out_fmt.width == the slicing word width.
Emission emit_butterfly(const TwiddleTables& t, const RequantPolicy& q,
                        const std::string& module_name);

struct PortSpec {
  std::string name;
  int width = 0;

  bool operator==(const PortSpec&) const = default;
};

/// One stimulus/expectation pair, raw two's-complement values ordered as the
/// port lists passed to emit_testbench.
struct TestVector {
  std::vector<raw_t> inputs;
  std::vector<raw_t> outputs;

  bool operator==(const TestVector&) const = default;
};

/// Self-checking testbench "<module_name>_tb.v" plus
/// "<module_name>_golden.hex". The golden file holds one line per vector:
/// input tokens then output tokens, every token zero-padded to a common hex
/// digit count; the bench drives one vector per cycle and compares each
/// output `latency` cycles later, reporting pass/fail counts. Throws on an
/// empty vector set or a vector/port arity mismatch.
Emission emit_testbench(const std::string& module_name,
                        const std::vector<PortSpec>& in_ports,
                        const std::vector<PortSpec>& out_ports,
                        int latency,
                        const std::vector<TestVector>& vectors);

/// Decode a ROM init file back to raw entries (inverse of emission).
std::vector<raw_t> parse_rom_hex(const std::string& content, int entry_width);

/// Re-check a golden file against model vectors: returns the number of
/// vectors whose line decodes to different values. Throws if the file shape
/// (line count, token count, token width) does not match.
std::size_t verify_golden(const std::string& golden_content,
                          const std::vector<PortSpec>& in_ports,
                          const std::vector<PortSpec>& out_ports,
                          const std::vector<TestVector>& vectors);

}  // namespace dsfft
