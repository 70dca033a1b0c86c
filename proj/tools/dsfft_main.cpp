// Copyright dsfft contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: slicing demos, FFT runs and comparisons, cost
// reports, and RTL emission. Exit codes: 0 success, 1 verification failure,
// 2 usage or parameter error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dsfft/butterfly.hpp"
#include "dsfft/digit_slicing.hpp"
#include "dsfft/fft.hpp"
#include "dsfft/fixedpoint.hpp"
#include "dsfft/hdl_gen.hpp"
#include "dsfft/io.hpp"
#include "dsfft/pipeline.hpp"
#include "dsfft/scml.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

// ---------------------------------------------------------------------------
// --config support: a flat JSON object whose keys are long option names
// (without the leading dashes). Precedence: flag > config > default, achieved
// by applying the config to the option targets before parsing.

std::string find_config_path(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--config" && i + 1 < argc) return argv[i + 1];
    if (a.rfind("--config=", 0) == 0) return a.substr(9);
  }
  return {};
}

nlohmann::json load_config(const std::string& path) {
  if (path.empty()) return nlohmann::json::object();
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config file '" + path + "'");
  nlohmann::json j = nlohmann::json::parse(in);
  if (!j.is_object()) throw std::runtime_error("config must be a JSON object");
  return j;
}

template <typename T>
void apply_cfg(const nlohmann::json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

// ---------------------------------------------------------------------------
// Shared parsing helpers.

dsfft::SliceAlgorithm algorithm_from(int a) {
  if (a == 1) return dsfft::SliceAlgorithm::A1;
  if (a == 2) return dsfft::SliceAlgorithm::A2;
  throw std::invalid_argument("algorithm must be 1 or 2");
}

dsfft::FftImpl impl_from(const std::string& s) {
  if (s == "ds" || s == "digit_slicing") return dsfft::FftImpl::DigitSlicing;
  if (s == "conv" || s == "conventional") return dsfft::FftImpl::Conventional;
  throw std::invalid_argument("impl must be ds|digit_slicing|conv|conventional");
}

dsfft::RequantPolicy policy_from(dsfft::QFormat fmt, const std::string& scaling,
                                 const std::string& rounding, const std::string& overflow) {
  dsfft::RequantPolicy q;
  q.out_fmt = fmt;
  if (scaling == "half") q.stage_shift = dsfft::StageShift::Half;
  else if (scaling == "none") q.stage_shift = dsfft::StageShift::None;
  else throw std::invalid_argument("scaling must be half|none");
  if (rounding == "truncate") q.rounding = dsfft::Rounding::Truncate;
  else if (rounding == "nearest") q.rounding = dsfft::Rounding::NearestEven;
  else throw std::invalid_argument("rounding must be truncate|nearest");
  if (overflow == "saturate") q.overflow = dsfft::Overflow::Saturate;
  else if (overflow == "wrap") q.overflow = dsfft::Overflow::Wrap;
  else throw std::invalid_argument("overflow must be saturate|wrap");
  return q;
}

void write_file(const fs::path& dir, const std::string& name, const std::string& content) {
  const fs::path full = dir / name;
  std::ofstream out(full, std::ios::binary);
  out << content;
  if (!out) throw std::runtime_error("cannot write '" + full.string() + "'");
}

// ---------------------------------------------------------------------------
// slice

struct SliceArgs {
  double value = 0.0;
  bool have_value = false;
  int width = 16;
  int frac = 15;
  int p = 4;
  int b = 4;
  int algorithm = 1;
  bool sweep = false;
};

int run_slice(const SliceArgs& a) {
  const dsfft::QFormat fmt(a.width, a.frac);
  const dsfft::SliceParams params(a.p, a.b, algorithm_from(a.algorithm));
  const bool a1 = params.algorithm == dsfft::SliceAlgorithm::A1;
  auto do_slice = [&](const dsfft::FxWord& x) {
    return a1 ? dsfft::slice_a1(x, params) : dsfft::slice_a2(x, params);
  };
  auto do_unslice = [&](const dsfft::SlicedWord& s) {
    return a1 ? dsfft::unslice_a1(s) : dsfft::unslice_a2(s);
  };

  if (a.sweep) {
    std::int64_t mismatches = 0;
    const std::int64_t total = fmt.max_raw() - fmt.min_raw() + 1;
    for (dsfft::raw_t r = fmt.min_raw(); r <= fmt.max_raw(); ++r) {
      const dsfft::FxWord x(r, fmt);
      if (do_unslice(do_slice(x)).raw != r) ++mismatches;
    }
    std::cout << "sweep " << fmt.to_string() << " algorithm A" << a.algorithm << ": " << total
              << " words, " << mismatches << " reconstruction mismatches\n";
    return mismatches == 0 ? kExitOk : kExitVerification;
  }

  if (!a.have_value) throw std::invalid_argument("slice needs --value (or --sweep)");
  const dsfft::FxWord x = dsfft::fx_from_real(a.value, fmt);
  const dsfft::SlicedWord s = do_slice(x);
  const dsfft::FxWord back = do_unslice(s);

  std::cout << "value: " << a.value << " -> raw " << x.raw << " (" << fmt.to_string() << ")\n";
  if (x.to_real() != a.value) std::cout << "quantized: " << x.to_real() << "\n";
  std::cout << "algorithm: A" << a.algorithm << " (p=" << params.p << ", b=" << params.b
            << ")\n";
  std::ostringstream recon;
  for (size_t k = 0; k < s.blocks.size(); ++k) {
    // Block weight exponent: p*k for A1; p*(b-1-k) for A2 (sign block first).
    const int e = a1 ? params.p * static_cast<int>(k)
                     : params.p * (params.b - 1 - static_cast<int>(k));
    std::cout << "block[" << k << "] = " << s.blocks[k] << "   weight 2^" << e << "\n";
    if (k > 0) recon << " + ";
    recon << "(" << s.blocks[k] << " * 2^" << e << ")";
  }
  std::cout << "reconstruction: " << recon.str() << " = " << back.raw << "\n";
  std::cout << "real: " << back.raw << " * 2^-" << fmt.frac << " = " << back.to_real() << "\n";
  const bool exact = back.raw == x.raw;
  std::cout << "roundtrip: " << (exact ? "exact" : "MISMATCH") << "\n";
  return exact ? kExitOk : kExitVerification;
}

// ---------------------------------------------------------------------------
// fft

struct FftArgs {
  std::string input;
  std::string output;
  int n = 0;
  std::string impl = "ds";
  int width = 16;
  int frac = 15;
  int p = 4;
  int b = 4;
  std::string scaling = "half";
  std::string rounding = "truncate";
  std::string overflow = "saturate";
  bool compare = false;
};

std::vector<dsfft::ComplexFx> read_input_signal(const std::string& path, dsfft::QFormat fmt) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read input '" + path + "'");
  switch (dsfft::signal_format_from_path(path)) {
    case dsfft::SignalFormat::Hex:
      return dsfft::read_signal_hex(in, fmt);
    case dsfft::SignalFormat::Csv:
      return dsfft::quantize_signal(dsfft::read_signal_csv(in), fmt);
    case dsfft::SignalFormat::Json:
      return dsfft::quantize_signal(dsfft::read_signal_json(in), fmt);
  }
  throw std::invalid_argument("unreachable");
}

void write_output_signal(const std::string& path, const std::vector<dsfft::ComplexFx>& v) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write output '" + path + "'");
  switch (dsfft::signal_format_from_path(path)) {
    case dsfft::SignalFormat::Hex:
      dsfft::write_signal_hex(out, v);
      break;
    case dsfft::SignalFormat::Csv:
      dsfft::write_signal_csv(out, dsfft::signal_to_real(v));
      break;
    case dsfft::SignalFormat::Json:
      dsfft::write_signal_json(out, dsfft::signal_to_real(v));
      break;
  }
  if (!out) throw std::runtime_error("cannot write output '" + path + "'");
}

int run_fft(const FftArgs& a) {
  if (a.n <= 0) throw std::invalid_argument("fft needs -n");
  if (a.output.empty() && !a.compare) {
    throw std::invalid_argument("fft needs --output and/or --compare");
  }
  const dsfft::QFormat fmt(a.width, a.frac);
  const dsfft::SliceParams slice(a.p, a.b);
  const dsfft::RequantPolicy q = policy_from(fmt, a.scaling, a.rounding, a.overflow);
  const dsfft::FftImpl impl = impl_from(a.impl);

  const std::vector<dsfft::ComplexFx> x = read_input_signal(a.input, fmt);
  if (static_cast<int>(x.size()) != a.n) {
    throw std::invalid_argument("input has " + std::to_string(x.size()) +
                                " samples, expected n=" + std::to_string(a.n));
  }

  const dsfft::FftPlan plan = dsfft::plan_fft(a.n, fmt, slice, q, impl);
  const std::vector<dsfft::ComplexFx> out = dsfft::fft_execute(plan, x);

  if (!a.output.empty()) {
    write_output_signal(a.output, out);
    std::cout << "wrote " << a.output << " (n=" << a.n << ", impl="
              << (impl == dsfft::FftImpl::DigitSlicing ? "digit_slicing" : "conventional")
              << ", " << fmt.to_string() << ")\n";
  }

  if (!a.compare) return kExitOk;

  const dsfft::FftImpl other_impl = impl == dsfft::FftImpl::DigitSlicing
                                        ? dsfft::FftImpl::Conventional
                                        : dsfft::FftImpl::DigitSlicing;
  const dsfft::FftPlan other = dsfft::plan_fft(a.n, fmt, slice, q, other_impl);
  const std::vector<dsfft::ComplexFx> out2 = dsfft::fft_execute(other, x);
  bool match = true;
  for (size_t i = 0; i < out.size(); ++i) {
    if (out[i].re.raw != out2[i].re.raw || out[i].im.raw != out2[i].im.raw) match = false;
  }

  const auto ref = dsfft::dft_reference(dsfft::signal_to_real(x));
  const dsfft::ErrorMetrics m = dsfft::fft_error_report(out, ref, plan);
  std::cout << "implementations: " << (match ? "MATCH" : "MISMATCH") << "\n";
  std::cout << std::scientific << std::setprecision(6);
  std::cout << "max abs error vs reference: " << m.max_abs_error << "\n";
  std::cout << "rms error: " << m.rms_error << "\n";
  std::cout << std::defaultfloat << std::setprecision(4);
  std::cout << "snr: " << m.snr_db << " dB\n";
  return match ? kExitOk : kExitVerification;
}

// ---------------------------------------------------------------------------
// hdlgen

struct HdlArgs {
  std::string kind = "butterfly";
  std::string module;
  std::string outdir = ".";
  int width = 16;
  int frac = 15;
  int p = 4;
  int b = 4;
  int n = 64;
  int twiddle_index = 1;
  double constant = 0.0;
  bool have_constant = false;
  std::string scaling = "half";
  std::string rounding = "truncate";
  std::string overflow = "saturate";
  int vectors = 100;
  std::uint64_t seed = 1;
  bool table_dump = false;
};

int run_hdlgen(const HdlArgs& a) {
  const dsfft::QFormat fmt(a.width, a.frac);
  const dsfft::SliceParams slice(a.p, a.b);
  const dsfft::RequantPolicy q = policy_from(fmt, a.scaling, a.rounding, a.overflow);
  if (a.vectors < 0) throw std::invalid_argument("--vectors must be >= 0");

  // Constant selection: an explicit --constant wins; otherwise the plan's
  // twiddle at --twiddle-index, quantized exactly as fft planning does.
  dsfft::FxWord wr, wi;
  if (a.have_constant) {
    wr = dsfft::fx_from_real(a.constant, fmt);
    wi = dsfft::fx_from_real(0.0, fmt);
  } else {
    const dsfft::FftPlan plan =
        dsfft::plan_fft(a.n, fmt, slice, q, dsfft::FftImpl::DigitSlicing);
    if (a.twiddle_index < 0 || a.twiddle_index >= a.n / 2) {
      throw std::invalid_argument("--twiddle-index must be in [0, n/2)");
    }
    wr = plan.twiddles[static_cast<size_t>(a.twiddle_index)].wr;
    wi = plan.twiddles[static_cast<size_t>(a.twiddle_index)].wi;
  }

  fs::path dir(a.outdir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create outdir '" + a.outdir + "'");

  std::vector<dsfft::EmittedFile> written;
  std::mt19937_64 rng(a.seed);
  std::uniform_int_distribution<dsfft::raw_t> dist(fmt.min_raw(), fmt.max_raw());

  if (a.kind == "scml") {
    const std::string module = a.module.empty() ? "scml" : a.module;
    const dsfft::ScmlTable table = dsfft::build_table(wr, slice);
    const dsfft::Emission rtl = dsfft::emit_scml(table, module);
    for (const auto& f : rtl.all()) written.push_back(f);
    if (a.vectors > 0) {
      std::vector<dsfft::TestVector> vecs;
      vecs.reserve(static_cast<size_t>(a.vectors));
      const dsfft::QFormat in_fmt(slice.word_width(), a.frac);
      for (int i = 0; i < a.vectors; ++i) {
        const dsfft::FxWord x(dist(rng), in_fmt);
        vecs.push_back({{x.raw}, {dsfft::scml_mul(table, x).raw}});
      }
      const dsfft::Emission tb = dsfft::emit_testbench(
          module, {{"x", slice.word_width()}},
          {{"prod", wr.fmt.width + slice.word_width()}}, dsfft::scml_latency(slice), vecs);
      for (const auto& f : tb.all()) written.push_back(f);
    }
    if (a.table_dump) written.push_back({module + "_table.txt", dsfft::dump_table(table)});
  } else if (a.kind == "butterfly") {
    const std::string module = a.module.empty() ? "butterfly" : a.module;
    const dsfft::TwiddleTables tables = dsfft::make_twiddle_tables(wr, wi, slice);
    const dsfft::Emission rtl = dsfft::emit_butterfly(tables, q, module);
    for (const auto& f : rtl.all()) written.push_back(f);
    if (a.vectors > 0) {
      std::vector<dsfft::TestVector> vecs;
      vecs.reserve(static_cast<size_t>(a.vectors));
      for (int i = 0; i < a.vectors; ++i) {
        const dsfft::ComplexFx av(dsfft::FxWord(dist(rng), fmt), dsfft::FxWord(dist(rng), fmt));
        const dsfft::ComplexFx bv(dsfft::FxWord(dist(rng), fmt), dsfft::FxWord(dist(rng), fmt));
        const dsfft::ButterflyOut o = dsfft::butterfly_ds(av, bv, tables, q);
        vecs.push_back({{av.re.raw, av.im.raw, bv.re.raw, bv.im.raw},
                        {o.x.re.raw, o.x.im.raw, o.y.re.raw, o.y.im.raw}});
      }
      const int w = fmt.width;
      const dsfft::Emission tb = dsfft::emit_testbench(
          module, {{"a_re", w}, {"a_im", w}, {"b_re", w}, {"b_im", w}},
          {{"x_re", w}, {"x_im", w}, {"y_re", w}, {"y_im", w}},
          dsfft::butterfly_latency(slice), vecs);
      for (const auto& f : tb.all()) written.push_back(f);
    }
    if (a.table_dump) {
      written.push_back({module + "_wr_table.txt", dsfft::dump_table(tables.wr_table)});
      written.push_back({module + "_wi_table.txt", dsfft::dump_table(tables.wi_table)});
    }
  } else {
    throw std::invalid_argument("--kind must be scml|butterfly");
  }

  for (const auto& f : written) {
    write_file(dir, f.name, f.content);
    std::cout << (dir / f.name).string() << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// cost

struct CostArgs {
  std::string design = "digit_slicing";
  int width = 16;
  int frac = 15;
  int p = 4;
  int b = 4;
  int pairs = 1;
  double rom_bit_weight = 1.0;
  double adder_bit_weight = 6.0;
  double register_bit_weight = 4.0;
  double multiplier_weight = 6.0;
};

int run_cost(const CostArgs& a) {
  dsfft::DesignKind design;
  if (a.design == "digit_slicing" || a.design == "ds") {
    design = dsfft::DesignKind::DigitSlicing;
  } else if (a.design == "conventional" || a.design == "conv") {
    design = dsfft::DesignKind::Conventional;
  } else {
    throw std::invalid_argument("--design must be digit_slicing|conventional");
  }
  dsfft::GateProxyWeights weights;
  weights.rom_bit = a.rom_bit_weight;
  weights.adder_bit = a.adder_bit_weight;
  weights.register_bit = a.register_bit_weight;
  weights.multiplier_per_width2 = a.multiplier_weight;
  const dsfft::CostReport r = dsfft::estimate_cost(design, dsfft::QFormat(a.width, a.frac),
                                                   dsfft::SliceParams(a.p, a.b), a.pairs,
                                                   weights);
  std::cout << r.to_json().dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dsfft: bit-exact digit-slicing fixed-point FFT toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --config appear after the subcommand name
  std::string config_path;
  app.add_option("--config", config_path,
                 "JSON object supplying defaults for long option names "
                 "(precedence: flag > config > default)");

  nlohmann::json cfg;
  try {
    cfg = load_config(find_config_path(argc, argv));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  SliceArgs sa;
  apply_cfg(cfg, "value", sa.value);
  apply_cfg(cfg, "width", sa.width);
  apply_cfg(cfg, "frac", sa.frac);
  apply_cfg(cfg, "p", sa.p);
  apply_cfg(cfg, "b", sa.b);
  apply_cfg(cfg, "algorithm", sa.algorithm);
  apply_cfg(cfg, "sweep", sa.sweep);
  CLI::App* slice_cmd =
      app.add_subcommand("slice", "Decompose a fixed-point value into digit slices");
  CLI::Option* value_opt = slice_cmd->add_option("-v,--value", sa.value, "Real value to slice");
  slice_cmd->add_option("-w,--width", sa.width, "Total word bits")->capture_default_str();
  slice_cmd->add_option("-f,--frac", sa.frac, "Fraction bits")->capture_default_str();
  slice_cmd->add_option("-p,--block-bits", sa.p, "Bits per block")->capture_default_str();
  slice_cmd->add_option("-b,--blocks", sa.b, "Block count")->capture_default_str();
  slice_cmd->add_option("-a,--algorithm", sa.algorithm, "Slicing algorithm (1 or 2)")
      ->capture_default_str();
  slice_cmd->add_flag("--sweep", sa.sweep,
                      "Roundtrip every representable word instead of one value");

  FftArgs fa;
  apply_cfg(cfg, "input", fa.input);
  apply_cfg(cfg, "output", fa.output);
  apply_cfg(cfg, "n", fa.n);
  apply_cfg(cfg, "impl", fa.impl);
  apply_cfg(cfg, "width", fa.width);
  apply_cfg(cfg, "frac", fa.frac);
  apply_cfg(cfg, "p", fa.p);
  apply_cfg(cfg, "b", fa.b);
  apply_cfg(cfg, "scaling", fa.scaling);
  apply_cfg(cfg, "rounding", fa.rounding);
  apply_cfg(cfg, "overflow", fa.overflow);
  apply_cfg(cfg, "compare", fa.compare);
  CLI::App* fft_cmd = app.add_subcommand("fft", "Run a fixed-point FFT on a signal file");
  fft_cmd->add_option("--input", fa.input, "Input signal (.csv, .json, or .hex)")->required();
  fft_cmd->add_option("--output", fa.output, "Output spectrum file (.csv, .json, or .hex)");
  fft_cmd->add_option("-n,--size", fa.n, "Transform size (power of two)")->required();
  fft_cmd->add_option("--impl", fa.impl, "Implementation: ds|conv")->capture_default_str();
  fft_cmd->add_option("-w,--width", fa.width, "Total word bits")->capture_default_str();
  fft_cmd->add_option("-f,--frac", fa.frac, "Fraction bits")->capture_default_str();
  fft_cmd->add_option("-p,--block-bits", fa.p, "Bits per block")->capture_default_str();
  fft_cmd->add_option("-b,--blocks", fa.b, "Block count")->capture_default_str();
  fft_cmd->add_option("--scaling", fa.scaling, "Per-stage scaling: half|none")
      ->capture_default_str();
  fft_cmd->add_option("--rounding", fa.rounding, "Requant rounding: truncate|nearest")
      ->capture_default_str();
  fft_cmd->add_option("--overflow", fa.overflow, "Requant overflow: saturate|wrap")
      ->capture_default_str();
  fft_cmd->add_flag("--compare", fa.compare,
                    "Also run the other implementation and the double-precision "
                    "reference; report match/mismatch and error metrics");

  HdlArgs ha;
  apply_cfg(cfg, "kind", ha.kind);
  apply_cfg(cfg, "module", ha.module);
  apply_cfg(cfg, "outdir", ha.outdir);
  apply_cfg(cfg, "width", ha.width);
  apply_cfg(cfg, "frac", ha.frac);
  apply_cfg(cfg, "p", ha.p);
  apply_cfg(cfg, "b", ha.b);
  apply_cfg(cfg, "n", ha.n);
  apply_cfg(cfg, "twiddle-index", ha.twiddle_index);
  apply_cfg(cfg, "constant", ha.constant);
  ha.have_constant = cfg.contains("constant");
  apply_cfg(cfg, "scaling", ha.scaling);
  apply_cfg(cfg, "rounding", ha.rounding);
  apply_cfg(cfg, "overflow", ha.overflow);
  apply_cfg(cfg, "vectors", ha.vectors);
  apply_cfg(cfg, "seed", ha.seed);
  apply_cfg(cfg, "table-dump", ha.table_dump);
  CLI::App* hdl_cmd =
      app.add_subcommand("hdlgen", "Emit Verilog, ROM init files, and a golden testbench");
  hdl_cmd->add_option("--kind", ha.kind, "What to emit: scml|butterfly")->capture_default_str();
  hdl_cmd->add_option("--module", ha.module, "Module name (default: kind)");
  hdl_cmd->add_option("--outdir", ha.outdir, "Output directory")->capture_default_str();
  hdl_cmd->add_option("-w,--width", ha.width, "Total word bits")->capture_default_str();
  hdl_cmd->add_option("-f,--frac", ha.frac, "Fraction bits")->capture_default_str();
  hdl_cmd->add_option("-p,--block-bits", ha.p, "Bits per block")->capture_default_str();
  hdl_cmd->add_option("-b,--blocks", ha.b, "Block count")->capture_default_str();
  hdl_cmd->add_option("-n,--size", ha.n, "FFT size the twiddle belongs to")
      ->capture_default_str();
  hdl_cmd->add_option("--twiddle-index", ha.twiddle_index, "Twiddle index in [0, n/2)")
      ->capture_default_str();
  CLI::Option* const_opt = hdl_cmd->add_option(
      "--constant", ha.constant, "Real constant to multiply by (scml; overrides twiddle)");
  hdl_cmd->add_option("--scaling", ha.scaling, "Per-stage scaling: half|none")
      ->capture_default_str();
  hdl_cmd->add_option("--rounding", ha.rounding, "Requant rounding: truncate|nearest")
      ->capture_default_str();
  hdl_cmd->add_option("--overflow", ha.overflow, "Requant overflow: saturate|wrap")
      ->capture_default_str();
  hdl_cmd->add_option("--vectors", ha.vectors, "Golden vector count (0 = no testbench)")
      ->capture_default_str();
  hdl_cmd->add_option("--seed", ha.seed, "Vector RNG seed")->capture_default_str();
  hdl_cmd->add_flag("--table-dump", ha.table_dump, "Also write the ROM tables as text");

  CostArgs ca;
  apply_cfg(cfg, "design", ca.design);
  apply_cfg(cfg, "width", ca.width);
  apply_cfg(cfg, "frac", ca.frac);
  apply_cfg(cfg, "p", ca.p);
  apply_cfg(cfg, "b", ca.b);
  apply_cfg(cfg, "pairs", ca.pairs);
  apply_cfg(cfg, "rom-bit-weight", ca.rom_bit_weight);
  apply_cfg(cfg, "adder-bit-weight", ca.adder_bit_weight);
  apply_cfg(cfg, "register-bit-weight", ca.register_bit_weight);
  apply_cfg(cfg, "multiplier-weight", ca.multiplier_weight);
  CLI::App* cost_cmd =
      app.add_subcommand("cost", "Print the structural cost report as JSON");
  cost_cmd->add_option("--design", ca.design, "digit_slicing|conventional")
      ->capture_default_str();
  cost_cmd->add_option("-w,--width", ca.width, "Total word bits")->capture_default_str();
  cost_cmd->add_option("-f,--frac", ca.frac, "Fraction bits")->capture_default_str();
  cost_cmd->add_option("-p,--block-bits", ca.p, "Bits per block")->capture_default_str();
  cost_cmd->add_option("-b,--blocks", ca.b, "Block count")->capture_default_str();
  cost_cmd->add_option("-n,--pairs", ca.pairs, "Twiddle constant pairs")->capture_default_str();
  cost_cmd->add_option("--rom-bit-weight", ca.rom_bit_weight, "Gate proxy weight per ROM bit")
      ->capture_default_str();
  cost_cmd->add_option("--adder-bit-weight", ca.adder_bit_weight,
                       "Gate proxy weight per adder result bit")
      ->capture_default_str();
  cost_cmd->add_option("--register-bit-weight", ca.register_bit_weight,
                       "Gate proxy weight per register bit")
      ->capture_default_str();
  cost_cmd->add_option("--multiplier-weight", ca.multiplier_weight,
                       "Gate proxy weight per multiplier, times width^2")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  sa.have_value = cfg.contains("value") || value_opt->count() > 0;
  ha.have_constant = ha.have_constant || const_opt->count() > 0;

  try {
    if (slice_cmd->parsed()) return run_slice(sa);
    if (fft_cmd->parsed()) return run_fft(fa);
    if (hdl_cmd->parsed()) return run_hdlgen(ha);
    if (cost_cmd->parsed()) return run_cost(ca);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
