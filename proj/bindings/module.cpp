// Copyright dsfft contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
//
// Python bindings for the dsfft core: fixed point, slicing, SCML tables,
// butterflies, FFT plans, the pipeline model, and the RTL emitters.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dsfft/butterfly.hpp"
#include "dsfft/digit_slicing.hpp"
#include "dsfft/fft.hpp"
#include "dsfft/fixedpoint.hpp"
#include "dsfft/hdl_gen.hpp"
#include "dsfft/io.hpp"
#include "dsfft/pipeline.hpp"
#include "dsfft/scml.hpp"

namespace py = pybind11;
using namespace dsfft;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bit-exact digit-slicing fixed-point FFT toolkit";

  // --- fixed point -------------------------------------------------------
  py::enum_<Rounding>(m, "Rounding")
      .value("NearestEven", Rounding::NearestEven)
      .value("Truncate", Rounding::Truncate);
  py::enum_<Overflow>(m, "Overflow")
      .value("Saturate", Overflow::Saturate)
      .value("Wrap", Overflow::Wrap);

  py::class_<QFormat>(m, "QFormat")
      .def(py::init<int, int>(), py::arg("width"), py::arg("frac"))
      .def_readonly("width", &QFormat::width)
      .def_readonly("frac", &QFormat::frac)
      .def("min_raw", &QFormat::min_raw)
      .def("max_raw", &QFormat::max_raw)
      .def("__eq__", [](const QFormat& a, const QFormat& b) { return a == b; })
      .def("__repr__", &QFormat::to_string);

  py::class_<FxWord>(m, "FxWord")
      .def(py::init<raw_t, QFormat>(), py::arg("raw"), py::arg("fmt"))
      .def_readonly("raw", &FxWord::raw)
      .def_readonly("fmt", &FxWord::fmt)
      .def("to_real", &FxWord::to_real)
      .def("__eq__", [](const FxWord& a, const FxWord& b) { return a == b; })
      .def("__repr__", [](const FxWord& x) {
        return "FxWord(" + std::to_string(x.raw) + ", " + x.fmt.to_string() + ")";
      });

  py::class_<ComplexFx>(m, "ComplexFx")
      .def(py::init<FxWord, FxWord>(), py::arg("re"), py::arg("im"))
      .def_readonly("re", &ComplexFx::re)
      .def_readonly("im", &ComplexFx::im)
      .def("__eq__", [](const ComplexFx& a, const ComplexFx& b) { return a == b; });

  m.def("fx_from_real", &fx_from_real, py::arg("r"), py::arg("fmt"),
        py::arg("rounding") = Rounding::NearestEven);
  m.def("fx_to_real", &fx_to_real);
  m.def("fx_mul_full", &fx_mul_full);
  m.def("fx_add", &fx_add);
  m.def("fx_sub", &fx_sub);
  m.def("fx_requantize", &fx_requantize, py::arg("x"), py::arg("fmt"),
        py::arg("overflow") = Overflow::Saturate,
        py::arg("rounding") = Rounding::NearestEven);

  // --- digit slicing ------------------------------------------------------
  py::enum_<SliceAlgorithm>(m, "SliceAlgorithm")
      .value("A1", SliceAlgorithm::A1)
      .value("A2", SliceAlgorithm::A2);

  py::class_<SliceParams>(m, "SliceParams")
      .def(py::init<int, int, SliceAlgorithm>(), py::arg("p"), py::arg("b"),
           py::arg("algorithm") = SliceAlgorithm::A1)
      .def_readonly("p", &SliceParams::p)
      .def_readonly("b", &SliceParams::b)
      .def_readonly("algorithm", &SliceParams::algorithm)
      .def("word_width", &SliceParams::word_width)
      .def("__eq__", [](const SliceParams& a, const SliceParams& b) { return a == b; });

  py::class_<SlicedWord>(m, "SlicedWord")
      .def_readonly("blocks", &SlicedWord::blocks)
      .def_readonly("params", &SlicedWord::params)
      .def_readonly("src_fmt", &SlicedWord::src_fmt);

  m.def("slice_a1", &slice_a1);
  m.def("unslice_a1", &unslice_a1);
  m.def("slice_a2", &slice_a2);
  m.def("unslice_a2", &unslice_a2);
  m.def("slice_complex", &slice_complex);

  // --- SCML ---------------------------------------------------------------
  py::class_<ScmlTable>(m, "ScmlTable")
      .def_readonly("constant", &ScmlTable::constant)
      .def_readonly("params", &ScmlTable::params)
      .def_readonly("roms", &ScmlTable::roms)
      .def_readonly("entry_width", &ScmlTable::entry_width);

  py::class_<ScmlStageTrace>(m, "ScmlStageTrace")
      .def_readonly("level_partials", &ScmlStageTrace::level_partials)
      .def_readonly("passthrough", &ScmlStageTrace::passthrough)
      .def_readonly("result", &ScmlStageTrace::result);

  m.def("build_table", &build_table);
  m.def("scml_mul", &scml_mul);
  m.def("scml_mul_staged", &scml_mul_staged);
  m.def("dump_table", &dump_table);
  m.def("table_rom_bits", &table_rom_bits);

  // --- butterfly ----------------------------------------------------------
  py::enum_<StageShift>(m, "StageShift")
      .value("NoShift", StageShift::None)
      .value("Half", StageShift::Half);

  py::class_<RequantPolicy>(m, "RequantPolicy")
      .def(py::init([](QFormat out_fmt, Rounding rounding, Overflow overflow,
                       StageShift stage_shift) {
             return RequantPolicy{out_fmt, rounding, overflow, stage_shift};
           }),
           py::arg("out_fmt"), py::arg("rounding") = Rounding::Truncate,
           py::arg("overflow") = Overflow::Saturate,
           py::arg("stage_shift") = StageShift::Half)
      .def_readonly("out_fmt", &RequantPolicy::out_fmt)
      .def_readonly("rounding", &RequantPolicy::rounding)
      .def_readonly("overflow", &RequantPolicy::overflow)
      .def_readonly("stage_shift", &RequantPolicy::stage_shift);

  py::class_<TwiddleTables>(m, "TwiddleTables")
      .def_readonly("wr", &TwiddleTables::wr)
      .def_readonly("wi", &TwiddleTables::wi)
      .def_readonly("wr_table", &TwiddleTables::wr_table)
      .def_readonly("wi_table", &TwiddleTables::wi_table);
  m.def("make_twiddle_tables", &make_twiddle_tables);

  py::class_<ButterflyOut>(m, "ButterflyOut")
      .def_readonly("x", &ButterflyOut::x)
      .def_readonly("y", &ButterflyOut::y)
      .def("__eq__", [](const ButterflyOut& a, const ButterflyOut& b) { return a == b; });

  m.def("butterfly_conventional", &butterfly_conventional);
  m.def("butterfly_ds", &butterfly_ds);

  // --- fft ----------------------------------------------------------------
  py::enum_<FftImpl>(m, "FftImpl")
      .value("Conventional", FftImpl::Conventional)
      .value("DigitSlicing", FftImpl::DigitSlicing);

  py::class_<FftPlan>(m, "FftPlan")
      .def_readonly("n", &FftPlan::n)
      .def_readonly("fmt", &FftPlan::fmt)
      .def_readonly("slice", &FftPlan::slice)
      .def_readonly("requant", &FftPlan::requant)
      .def_readonly("impl", &FftPlan::impl)
      .def_readonly("twiddles", &FftPlan::twiddles)
      .def("stages", &FftPlan::stages);

  m.def("bit_reverse_permute", &bit_reverse_permute);
  m.def("plan_fft", &plan_fft, py::arg("n"), py::arg("fmt"), py::arg("slice"),
        py::arg("requant"), py::arg("impl") = FftImpl::DigitSlicing);
  m.def("fft_execute", &fft_execute);
  m.def("dft_reference", &dft_reference);

  py::class_<ErrorMetrics>(m, "ErrorMetrics")
      .def_readonly("max_abs_error", &ErrorMetrics::max_abs_error)
      .def_readonly("rms_error", &ErrorMetrics::rms_error)
      .def_readonly("snr_db", &ErrorMetrics::snr_db);
  m.def("fft_error_report", &fft_error_report);

  // --- signal helpers -----------------------------------------------------
  m.def("quantize_signal", &quantize_signal, py::arg("v"), py::arg("fmt"),
        py::arg("rounding") = Rounding::NearestEven);
  m.def("signal_to_real", &signal_to_real);

  // --- pipeline -----------------------------------------------------------
  py::enum_<StageKind>(m, "StageKind")
      .value("SliceRomLookup", StageKind::SliceRomLookup)
      .value("PartialAdd", StageKind::PartialAdd)
      .value("ButterflyAddSub", StageKind::ButterflyAddSub)
      .value("Requant", StageKind::Requant);

  py::class_<PipelineConfig>(m, "PipelineConfig")
      .def_static("standard", &PipelineConfig::standard)
      .def_static("of_depth", &PipelineConfig::of_depth)
      .def_readonly("stages", &PipelineConfig::stages)
      .def("depth", &PipelineConfig::depth);
  m.def("natural_depth", &natural_depth);

  py::class_<StreamOutput>(m, "StreamOutput")
      .def_readonly("cycle", &StreamOutput::cycle)
      .def_readonly("x", &StreamOutput::x)
      .def_readonly("y", &StreamOutput::y);

  m.def("simulate_stream",
        [](const PipelineConfig& cfg, const TwiddleTables& t, const RequantPolicy& q,
           const std::vector<std::pair<ComplexFx, ComplexFx>>& inputs) {
          return simulate_stream(cfg, t, q, inputs);
        });

  py::enum_<DesignKind>(m, "DesignKind")
      .value("Conventional", DesignKind::Conventional)
      .value("DigitSlicing", DesignKind::DigitSlicing);

  py::class_<GateProxyWeights>(m, "GateProxyWeights")
      .def(py::init<>())
      .def_readwrite("rom_bit", &GateProxyWeights::rom_bit)
      .def_readwrite("adder_bit", &GateProxyWeights::adder_bit)
      .def_readwrite("register_bit", &GateProxyWeights::register_bit)
      .def_readwrite("multiplier_per_width2", &GateProxyWeights::multiplier_per_width2);

  py::class_<CostReport>(m, "CostReport")
      .def_readonly("design", &CostReport::design)
      .def_readonly("width", &CostReport::width)
      .def_readonly("p", &CostReport::p)
      .def_readonly("b", &CostReport::b)
      .def_readonly("constant_pairs", &CostReport::constant_pairs)
      .def_readonly("rom_bits", &CostReport::rom_bits)
      .def_readonly("adder_count", &CostReport::adder_count)
      .def_readonly("multiplier_count", &CostReport::multiplier_count)
      .def_readonly("register_bits", &CostReport::register_bits)
      .def_readonly("pipeline_depth", &CostReport::pipeline_depth)
      .def_readonly("gate_proxy", &CostReport::gate_proxy)
      .def("to_json", [](const CostReport& r) { return r.to_json().dump(2); });

  m.def("estimate_cost", &estimate_cost, py::arg("design"), py::arg("fmt"), py::arg("slice"),
        py::arg("constant_pairs"), py::arg("weights") = GateProxyWeights{});

  // --- hdl ----------------------------------------------------------------
  py::class_<EmittedFile>(m, "EmittedFile")
      .def_readonly("name", &EmittedFile::name)
      .def_readonly("content", &EmittedFile::content);

  py::class_<Emission>(m, "Emission")
      .def_readonly("rtl", &Emission::rtl)
      .def_readonly("files", &Emission::files)
      .def("all", &Emission::all);

  py::class_<PortSpec>(m, "PortSpec")
      .def(py::init<std::string, int>(), py::arg("name"), py::arg("width"))
      .def_readonly("name", &PortSpec::name)
      .def_readonly("width", &PortSpec::width);

  py::class_<TestVector>(m, "TestVector")
      .def(py::init<std::vector<raw_t>, std::vector<raw_t>>(), py::arg("inputs"),
           py::arg("outputs"))
      .def_readonly("inputs", &TestVector::inputs)
      .def_readonly("outputs", &TestVector::outputs);

  m.def("scml_latency", &scml_latency);
  m.def("butterfly_latency", &butterfly_latency);
  m.def("emit_scml", &emit_scml);
  m.def("emit_butterfly", &emit_butterfly);
  m.def("emit_testbench", &emit_testbench);
  m.def("parse_rom_hex", &parse_rom_hex);
  m.def("verify_golden", &verify_golden);
}
