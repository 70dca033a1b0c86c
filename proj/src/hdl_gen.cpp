// Copyright dsfft contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "dsfft/hdl_gen.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>

#include "dsfft/io.hpp"

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

void check_identifier(const std::string& name) {
  auto head = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
  auto tail = [&](char c) { return head(c) || std::isdigit(static_cast<unsigned char>(c)); };
  bool ok = !name.empty() && head(name[0]);
  for (size_t i = 1; ok && i < name.size(); ++i) ok = tail(name[i]);
  if (!ok) throw std::invalid_argument("invalid module identifier: '" + name + "'");
}

std::string range(int width) { return "[" + std::to_string(width - 1) + ":0]"; }

/// Sized signed hex literal of `value` in `bits` bits, e.g. 16'sh8000.
std::string hex_literal(raw_t value, int bits) {
  return std::to_string(bits) + "'sh" + to_hex(value, bits);
}

std::vector<EmittedFile> rom_bank_files(const ScmlTable& t, const std::string& prefix) {
  std::vector<EmittedFile> files;
  files.reserve(t.roms.size());
  for (size_t k = 0; k < t.roms.size(); ++k) {
    std::ostringstream os;
    for (raw_t v : t.roms[k]) os << to_hex(v, t.entry_width) << '\n';
    files.push_back({prefix + std::to_string(k) + ".hex", os.str()});
  }
  return files;
}

/// Registered lookup plus balanced shift-add tree for one constant product.
/// A partial covering `span` blocks needs entry_width + p*(span-1) bits: a
/// block group below the sign block is unsigned, so c * group always fits.
struct ProductTree {
  std::vector<std::string> decls;
  std::vector<std::vector<std::string>> stage_stmts;  // [0] = lookup, then one per level
  std::string out;
};

ProductTree build_product_tree(const std::string& prefix, const std::string& bank,
                               const std::string& src, int p, int b, int ew) {
  ProductTree t;
  std::vector<std::string> names;
  std::vector<int> spans;
  std::vector<std::string> lookup;
  for (int k = 0; k < b; ++k) {
    std::string name = prefix + "_l0_" + std::to_string(k);
    t.decls.push_back("reg signed " + range(ew) + " " + name + ";");
    lookup.push_back(name + " <= " + bank + std::to_string(k) + "[" + src + "[" +
                     std::to_string(p * k + p - 1) + ":" + std::to_string(p * k) + "]];");
    names.push_back(name);
    spans.push_back(1);
  }
  t.stage_stmts.push_back(std::move(lookup));

  int level = 0;
  while (names.size() > 1) {
    ++level;
    std::vector<std::string> next_names, stmts;
    std::vector<int> next_spans;
    size_t i = 0;
    for (; i + 1 < names.size(); i += 2) {
      const int span = spans[i] + spans[i + 1];
      const int shift = p * spans[i];
      std::string name =
          prefix + "_l" + std::to_string(level) + "_" + std::to_string(next_names.size());
      t.decls.push_back("reg signed " + range(ew + p * (span - 1)) + " " + name + ";");
      // Low `shift` bits of the lower partial pass through the adder.
      stmts.push_back(name + " <= $signed({" + names[i + 1] + ", {" + std::to_string(shift) +
                      "{1'b0}}}) + " + names[i] + ";");
      next_names.push_back(name);
      next_spans.push_back(span);
    }
    if (i < names.size()) {  // odd partial rides along to keep stages aligned
      std::string name =
          prefix + "_l" + std::to_string(level) + "_" + std::to_string(next_names.size());
      t.decls.push_back("reg signed " + range(ew + p * (spans[i] - 1)) + " " + name + ";");
      stmts.push_back(name + " <= " + names[i] + ";");
      next_names.push_back(name);
      next_spans.push_back(spans[i]);
    }
    t.stage_stmts.push_back(std::move(stmts));
    names = std::move(next_names);
    spans = std::move(next_spans);
  }
  t.out = names.front();
  return t;
}

std::string describe_requant(const RequantPolicy& q) {
  std::string s = q.stage_shift == StageShift::Half ? "half scaling, " : "no stage shift, ";
  s += q.rounding == Rounding::NearestEven ? "round nearest-even, " : "truncate, ";
  s += q.overflow == Overflow::Saturate ? "saturate" : "wrap";
  return s + " to " + q.out_fmt.to_string();
}

/// Rounding wires for one requant path: <base>_rnd holds the floor/RNE
/// result of <base>_full >>> S at rw bits.
void emit_round_wires(std::ostringstream& os, const std::string& base, int fw, int s, int rw,
                      Rounding rounding) {
  const std::string full = base + "_full";
  if (s == 0) {
    os << "  wire signed " << range(rw) << " " << base << "_rnd = " << full << ";\n";
    return;
  }
  if (rounding == Rounding::Truncate) {
    os << "  wire signed " << range(rw) << " " << base << "_rnd = " << full << " >>> " << s
       << ";\n";
    return;
  }
  os << "  wire signed " << range(rw) << " " << base << "_shift = " << full << " >>> " << s
     << ";\n";
  if (s == 1) {
    os << "  wire " << base << "_up = " << full << "[0] & " << base << "_shift[0];\n";
  } else {
    os << "  wire " << base << "_up = " << full << "[" << s - 1 << "] & ((|" << full << "["
       << s - 2 << ":0]) | " << base << "_shift[0]);\n";
  }
  os << "  wire signed " << range(rw) << " " << base << "_rnd = " << base << "_shift + {{"
     << rw - 1 << "{1'b0}}, " << base << "_up};\n";
  (void)fw;
}

}  // namespace

std::vector<EmittedFile> Emission::all() const {
  std::vector<EmittedFile> v;
  v.reserve(files.size() + 1);
  v.push_back(rtl);
  v.insert(v.end(), files.begin(), files.end());
  return v;
}

int scml_latency(const SliceParams& slice) { return 1 + ceil_log2(slice.b); }

int butterfly_latency(const SliceParams& slice) { return 3 + ceil_log2(slice.b); }

Emission emit_scml(const ScmlTable& table, const std::string& module_name) {
  check_identifier(module_name);
  const int p = table.params.p;
  const int b = table.params.b;
  const int ew = table.entry_width;
  const int in_w = table.params.word_width();
  const int out_w = table.constant.fmt.width + in_w;
  const int lat = scml_latency(table.params);

  ProductTree tree = build_product_tree("pp", "rom", "x", p, b, ew);

  std::ostringstream os;
  os << "// " << module_name << ".v\n";
  os << "// Generated by dsfft hdlgen. Do not edit.\n";
  os << "//\n";
  os << "// Multiplier-less constant multiplier: prod = c * x, c raw = " << table.constant.raw
     << " at " << table.constant.fmt.to_string() << ".\n";
  os << "// x is sliced into " << b << " blocks of " << p
     << " bits; each block addresses one ROM of precomputed c * block\n";
  os << "// values, and a shift-add tree recombines the partial products.\n";
  os << "// Latency " << lat << " cycles, one input per cycle.\n";
  os << "module " << module_name << " (\n";
  os << "  input  wire clk,\n";
  os << "  input  wire signed " << range(in_w) << " x,\n";
  os << "  output wire signed " << range(out_w) << " prod\n";
  os << ");\n";
  os << "  localparam integer LATENCY = " << lat << ";\n\n";
  for (int k = 0; k < b; ++k) {
    os << "  reg signed " << range(ew) << " rom" << k << " [0:" << (1 << p) - 1 << "];\n";
  }
  os << "\n  initial begin\n";
  for (int k = 0; k < b; ++k) {
    os << "    $readmemh(\"" << module_name << "_rom" << k << ".hex\", rom" << k << ");\n";
  }
  os << "  end\n\n";
  for (const auto& d : tree.decls) os << "  " << d << "\n";
  for (size_t s = 0; s < tree.stage_stmts.size(); ++s) {
    os << "\n  // stage " << s + 1 << ": "
       << (s == 0 ? "slice and ROM lookup" : "adder tree level " + std::to_string(s)) << "\n";
    os << "  always @(posedge clk) begin\n";
    for (const auto& st : tree.stage_stmts[s]) os << "    " << st << "\n";
    os << "  end\n";
  }
  os << "\n  assign prod = " << tree.out << ";\n";
  os << "endmodule\n";

  Emission e;
  e.rtl = {module_name + ".v", os.str()};
  e.files = rom_bank_files(table, module_name + "_rom");
  return e;
}

Emission emit_butterfly(const TwiddleTables& t, const RequantPolicy& q,
                        const std::string& module_name) {
  check_identifier(module_name);
  const SliceParams& sp = t.wr_table.params;
  if (t.wi_table.params != sp) {
    throw std::invalid_argument("emit_butterfly: twiddle tables use different slicings");
  }
  const QFormat io_fmt = q.out_fmt;
  const int w = io_fmt.width;
  if (w != sp.word_width()) {
    throw std::invalid_argument("emit_butterfly: out_fmt width must equal the slice word width");
  }
  const int p = sp.p;
  const int b = sp.b;
  const int ew = t.wr_table.entry_width;
  const int fc = t.wr.fmt.frac;
  const int pw = t.wr.fmt.width + w;  // full product width
  const int aw = w + fc;              // A aligned to the product scale
  const int fw = std::max(aw, pw + 1) + 1;
  const int s = t.wr.fmt.frac + io_fmt.frac +
                (q.stage_shift == StageShift::Half ? 1 : 0) - io_fmt.frac;
  if (s < 0) {
    throw std::invalid_argument("emit_butterfly: out_fmt fraction exceeds the datapath scale");
  }
  const int rw = (s == 0) ? fw : std::max(fw - s + 1, w + 1);
  const int levels = ceil_log2(b);
  const int lat = butterfly_latency(sp);

  ProductTree prr = build_product_tree("prr", "wr_rom", "b_re", p, b, ew);
  ProductTree pii = build_product_tree("pii", "wi_rom", "b_im", p, b, ew);
  ProductTree pri = build_product_tree("pri", "wr_rom", "b_im", p, b, ew);
  ProductTree pir = build_product_tree("pir", "wi_rom", "b_re", p, b, ew);
  const ProductTree* trees[4] = {&prr, &pii, &pri, &pir};

  const int a_last = 1 + levels;
  auto a_delay = [&](const std::string& base, int k) { return base + "_d" + std::to_string(k); };
  auto aligned_a = [&](const std::string& base) {
    if (fc == 0) return a_delay(base, a_last);
    return "$signed({" + a_delay(base, a_last) + ", {" + std::to_string(fc) + "{1'b0}}})";
  };

  std::ostringstream os;
  os << "// " << module_name << ".v\n";
  os << "// Generated by dsfft hdlgen. Do not edit.\n";
  os << "//\n";
  os << "// Radix-2 DIT butterfly, digit-slicing form: X = A + W*B, Y = A - W*B\n";
  os << "// with W = wr - j*wi, wr raw = " << t.wr.raw << ", wi raw = " << t.wi.raw << " at "
     << t.wr.fmt.to_string() << ".\n";
  os << "// The four real products come from two shared ROM banks (" << b << " blocks of " << p
     << "\n";
  os << "// bits each); no hardware multipliers. Requant: " << describe_requant(q) << ".\n";
  os << "// Latency " << lat << " cycles, one input pair per cycle.\n";
  os << "module " << module_name << " (\n";
  os << "  input  wire clk,\n";
  for (const char* port : {"a_re", "a_im", "b_re", "b_im"}) {
    os << "  input  wire signed " << range(w) << " " << port << ",\n";
  }
  os << "  output wire signed " << range(w) << " x_re,\n";
  os << "  output wire signed " << range(w) << " x_im,\n";
  os << "  output wire signed " << range(w) << " y_re,\n";
  os << "  output wire signed " << range(w) << " y_im\n";
  os << ");\n";
  os << "  localparam integer LATENCY = " << lat << ";\n";
  if (q.overflow == Overflow::Saturate) {
    os << "  localparam signed " << range(rw) << " SAT_MAX = "
       << hex_literal(io_fmt.max_raw(), rw) << ";\n";
    os << "  localparam signed " << range(rw) << " SAT_MIN = "
       << hex_literal(io_fmt.min_raw(), rw) << ";\n";
  }
  os << "\n";
  for (const char* bank : {"wr_rom", "wi_rom"}) {
    for (int k = 0; k < b; ++k) {
      os << "  reg signed " << range(ew) << " " << bank << k << " [0:" << (1 << p) - 1 << "];\n";
    }
  }
  os << "\n  initial begin\n";
  for (const char* bank : {"wr_rom", "wi_rom"}) {
    for (int k = 0; k < b; ++k) {
      os << "    $readmemh(\"" << module_name << "_" << bank << k << ".hex\", " << bank << k
         << ");\n";
    }
  }
  os << "  end\n\n";
  for (const ProductTree* tr : trees) {
    for (const auto& d : tr->decls) os << "  " << d << "\n";
  }
  for (int k = 1; k <= a_last; ++k) {
    os << "  reg signed " << range(w) << " " << a_delay("a_re", k) << ";\n";
    os << "  reg signed " << range(w) << " " << a_delay("a_im", k) << ";\n";
  }
  for (const char* base : {"x_re", "x_im", "y_re", "y_im"}) {
    os << "  reg signed " << range(fw) << " " << base << "_full;\n";
  }
  for (const char* base : {"x_re", "x_im", "y_re", "y_im"}) {
    os << "  reg signed " << range(w) << " " << base << "_q;\n";
  }

  // One always block per pipeline stage.
  for (int stage = 0; stage <= levels; ++stage) {
    os << "\n  // stage " << stage + 1 << ": "
       << (stage == 0 ? "slice B and register the ROM reads"
                      : "adder tree level " + std::to_string(stage))
       << "\n";
    os << "  always @(posedge clk) begin\n";
    for (const ProductTree* tr : trees) {
      for (const auto& st : tr->stage_stmts[static_cast<size_t>(stage)]) {
        os << "    " << st << "\n";
      }
    }
    if (stage == 0) {
      os << "    " << a_delay("a_re", 1) << " <= a_re;\n";
      os << "    " << a_delay("a_im", 1) << " <= a_im;\n";
    } else {
      os << "    " << a_delay("a_re", stage + 1) << " <= " << a_delay("a_re", stage) << ";\n";
      os << "    " << a_delay("a_im", stage + 1) << " <= " << a_delay("a_im", stage) << ";\n";
    }
    os << "  end\n";
  }

  os << "\n  // stage " << 2 + levels << ": complex combine and A +/- W*B\n";
  os << "  always @(posedge clk) begin\n";
  os << "    x_re_full <= " << aligned_a("a_re") << " + " << prr.out << " + " << pii.out << ";\n";
  os << "    x_im_full <= " << aligned_a("a_im") << " + " << pri.out << " - " << pir.out << ";\n";
  os << "    y_re_full <= " << aligned_a("a_re") << " - " << prr.out << " - " << pii.out << ";\n";
  os << "    y_im_full <= " << aligned_a("a_im") << " - " << pri.out << " + " << pir.out << ";\n";
  os << "  end\n";

  os << "\n  // stage " << 3 + levels << ": requantize (" << describe_requant(q) << ")\n";
  for (const char* base : {"x_re", "x_im", "y_re", "y_im"}) {
    emit_round_wires(os, base, fw, s, rw, q.rounding);
  }
  os << "  always @(posedge clk) begin\n";
  for (const char* base : {"x_re", "x_im", "y_re", "y_im"}) {
    if (q.overflow == Overflow::Saturate) {
      os << "    " << base << "_q <= (" << base << "_rnd > SAT_MAX) ? "
         << hex_literal(io_fmt.max_raw(), w) << "\n"
         << "        : (" << base << "_rnd < SAT_MIN) ? " << hex_literal(io_fmt.min_raw(), w)
         << "\n"
         << "        : " << base << "_rnd" << range(w) << ";\n";
    } else {
      os << "    " << base << "_q <= " << base << "_rnd" << range(w) << ";\n";
    }
  }
  os << "  end\n\n";
  for (const char* base : {"x_re", "x_im", "y_re", "y_im"}) {
    os << "  assign " << base << " = " << base << "_q;\n";
  }
  os << "endmodule\n";

  Emission e;
  e.rtl = {module_name + ".v", os.str()};
  e.files = rom_bank_files(t.wr_table, module_name + "_wr_rom");
  auto wi_files = rom_bank_files(t.wi_table, module_name + "_wi_rom");
  e.files.insert(e.files.end(), wi_files.begin(), wi_files.end());
  return e;
}

namespace {

int token_digits(const std::vector<PortSpec>& in_ports, const std::vector<PortSpec>& out_ports) {
  int max_w = 0;
  for (const auto& p : in_ports) max_w = std::max(max_w, p.width);
  for (const auto& p : out_ports) max_w = std::max(max_w, p.width);
  if (max_w < 1 || max_w > kMaxWidth) {
    throw std::invalid_argument("testbench: port width out of range");
  }
  return (max_w + 3) / 4;
}

std::string golden_token(raw_t value, int width, int digits) {
  if (value < -(raw_t{1} << (width - 1)) || value > (raw_t{1} << (width - 1)) - 1) {
    throw std::out_of_range("testbench: vector value does not fit its port width");
  }
  std::string tok = to_hex(value, width);
  return std::string(static_cast<size_t>(digits) - tok.size(), '0') + tok;
}

}  // namespace

Emission emit_testbench(const std::string& module_name,
                        const std::vector<PortSpec>& in_ports,
                        const std::vector<PortSpec>& out_ports,
                        int latency,
                        const std::vector<TestVector>& vectors) {
  check_identifier(module_name);
  for (const auto& p : in_ports) check_identifier(p.name);
  for (const auto& p : out_ports) check_identifier(p.name);
  if (vectors.empty()) throw std::invalid_argument("testbench: empty vector set");
  if (in_ports.empty() || out_ports.empty()) {
    throw std::invalid_argument("testbench: port lists must be non-empty");
  }
  if (latency < 1) throw std::invalid_argument("testbench: latency must be >= 1");

  const int digits = token_digits(in_ports, out_ports);
  const int ntok = static_cast<int>(in_ports.size() + out_ports.size());
  const int nvec = static_cast<int>(vectors.size());

  std::ostringstream gold;
  for (const auto& v : vectors) {
    if (v.inputs.size() != in_ports.size() || v.outputs.size() != out_ports.size()) {
      throw std::invalid_argument("testbench: vector arity does not match ports");
    }
    for (size_t k = 0; k < v.inputs.size(); ++k) {
      if (k > 0) gold << ' ';
      gold << golden_token(v.inputs[k], in_ports[k].width, digits);
    }
    for (size_t k = 0; k < v.outputs.size(); ++k) {
      gold << ' ' << golden_token(v.outputs[k], out_ports[k].width, digits);
    }
    gold << '\n';
  }

  const std::string tb_name = module_name + "_tb";
  std::ostringstream os;
  os << "// " << tb_name << ".v\n";
  os << "// Generated by dsfft hdlgen. Do not edit.\n";
  os << "//\n";
  os << "// Self-checking bench for " << module_name << ": drives one golden vector per\n";
  os << "// cycle and compares the outputs LATENCY cycles later.\n";
  os << "`timescale 1ns/1ps\n";
  os << "module " << tb_name << ";\n";
  os << "  localparam integer NVEC = " << nvec << ";\n";
  os << "  localparam integer NTOK = " << ntok << ";\n";
  os << "  localparam integer LATENCY = " << latency << ";\n\n";
  os << "  reg clk;\n";
  os << "  reg " << range(4 * digits) << " vec_mem [0:NVEC*NTOK-1];\n";
  for (const auto& p : in_ports) {
    os << "  reg signed " << range(p.width) << " " << p.name << ";\n";
  }
  for (const auto& p : out_ports) {
    os << "  wire signed " << range(p.width) << " " << p.name << ";\n";
  }
  os << "  integer i;\n";
  os << "  integer fail_count;\n";
  os << "  reg vec_ok;\n\n";
  os << "  " << module_name << " dut (\n";
  os << "    .clk(clk)";
  for (const auto& p : in_ports) os << ",\n    ." << p.name << "(" << p.name << ")";
  for (const auto& p : out_ports) os << ",\n    ." << p.name << "(" << p.name << ")";
  os << "\n  );\n\n";
  os << "  initial $readmemh(\"" << module_name << "_golden.hex\", vec_mem);\n\n";
  os << "  initial begin\n";
  os << "    clk = 1'b0;\n";
  os << "    forever #5 clk = ~clk;\n";
  os << "  end\n\n";
  os << "  initial begin\n";
  os << "    fail_count = 0;\n";
  os << "    for (i = 0; i < NVEC + LATENCY; i = i + 1) begin\n";
  os << "      @(negedge clk);\n";
  os << "      if (i < NVEC) begin\n";
  for (size_t k = 0; k < in_ports.size(); ++k) {
    os << "        " << in_ports[k].name << " = $signed(vec_mem[i*NTOK + " << k << "]"
       << range(in_ports[k].width) << ");\n";
  }
  os << "      end\n";
  os << "      if (i >= LATENCY) begin\n";
  os << "        vec_ok = 1'b1;\n";
  for (size_t k = 0; k < out_ports.size(); ++k) {
    os << "        if (" << out_ports[k].name << " !== $signed(vec_mem[(i-LATENCY)*NTOK + "
       << in_ports.size() + k << "]" << range(out_ports[k].width) << ")) vec_ok = 1'b0;\n";
  }
  os << "        if (!vec_ok) begin\n";
  os << "          fail_count = fail_count + 1;\n";
  os << "          $display(\"MISMATCH vector %0d\", i - LATENCY);\n";
  os << "        end\n";
  os << "      end\n";
  os << "    end\n";
  os << "    $display(\"RESULT: %0d/%0d pass, %0d fail\", NVEC - fail_count, NVEC, "
        "fail_count);\n";
  os << "    if (fail_count == 0) $display(\"PASS\");\n";
  os << "    else $display(\"FAIL\");\n";
  os << "    $finish;\n";
  os << "  end\n";
  os << "endmodule\n";

  Emission e;
  e.rtl = {tb_name + ".v", os.str()};
  e.files = {{module_name + "_golden.hex", gold.str()}};
  return e;
}

std::vector<raw_t> parse_rom_hex(const std::string& content, int entry_width) {
  std::vector<raw_t> entries;
  std::istringstream in(content);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok, extra;
    if (!(ls >> tok)) continue;  // blank line
    if (ls >> extra) {
      throw std::invalid_argument("rom hex: more than one token on line " +
                                  std::to_string(line_no));
    }
    entries.push_back(from_hex(tok, entry_width));
  }
  return entries;
}

std::size_t verify_golden(const std::string& golden_content,
                          const std::vector<PortSpec>& in_ports,
                          const std::vector<PortSpec>& out_ports,
                          const std::vector<TestVector>& vectors) {
  const int digits = token_digits(in_ports, out_ports);
  const size_t ntok = in_ports.size() + out_ports.size();

  std::vector<std::vector<raw_t>> lines;
  std::istringstream in(golden_content);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string tok;
    while (ls >> tok) toks.push_back(tok);
    if (toks.empty()) continue;
    if (toks.size() != ntok) throw std::invalid_argument("golden: wrong token count on a line");
    std::vector<raw_t> vals;
    for (size_t k = 0; k < ntok; ++k) {
      if (toks[k].size() != static_cast<size_t>(digits)) {
        throw std::invalid_argument("golden: token width mismatch");
      }
      const int width = k < in_ports.size() ? in_ports[k].width
                                            : out_ports[k - in_ports.size()].width;
      std::uint64_t pattern = 0;
      for (char c : toks[k]) {
        int d;
        if (c >= '0' && c <= '9') d = c - '0';
        else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
        else throw std::invalid_argument("golden: bad hex token '" + toks[k] + "'");
        pattern = (pattern << 4) | static_cast<std::uint64_t>(d);
      }
      vals.push_back(detail::sign_extend(pattern & detail::bit_mask(width), width));
    }
    lines.push_back(std::move(vals));
  }
  if (lines.size() != vectors.size()) {
    throw std::invalid_argument("golden: line count does not match vector count");
  }

  std::size_t mismatches = 0;
  for (size_t i = 0; i < vectors.size(); ++i) {
    bool ok = true;
    for (size_t k = 0; k < in_ports.size(); ++k) {
      if (lines[i][k] != vectors[i].inputs[k]) ok = false;
    }
    for (size_t k = 0; k < out_ports.size(); ++k) {
      if (lines[i][in_ports.size() + k] != vectors[i].outputs[k]) ok = false;
    }
    if (!ok) ++mismatches;
  }
  return mismatches;
}

}  // namespace dsfft
