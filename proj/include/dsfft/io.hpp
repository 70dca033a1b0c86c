// Copyright dsfft contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "dsfft/fixedpoint.hpp"

namespace dsfft {

/// Signal file formats:
///   csv:  one "re,im" pair of reals per line
///   json: array of [re, im] pairs
///   hex:  one "RRRR IIII" pair per line, zero-padded two's-complement raw
///         words (ceil(width/4) digits each); bit-exact
enum class SignalFormat { Csv, Json, Hex };

/// Pick a format from a file name extension (.csv/.json/.hex).
SignalFormat signal_format_from_path(const std::string& path);

std::vector<std::complex<double>> read_signal_csv(std::istream& in);
void write_signal_csv(std::ostream& out, const std::vector<std::complex<double>>& v);

std::vector<std::complex<double>> read_signal_json(std::istream& in);
void write_signal_json(std::ostream& out, const std::vector<std::complex<double>>& v);

std::vector<ComplexFx> read_signal_hex(std::istream& in, QFormat fmt);
void write_signal_hex(std::ostream& out, const std::vector<ComplexFx>& v);

/// Quantize a real-valued signal sample by sample.
std::vector<ComplexFx> quantize_signal(const std::vector<std::complex<double>>& v,
                                       QFormat fmt,
                                       Rounding rounding = Rounding::NearestEven);

std::vector<std::complex<double>> signal_to_real(const std::vector<ComplexFx>& v);

/// Fixed-width lowercase hex of the low `width` bits of raw (two's
/// complement), zero-padded to ceil(width/4) digits.
std::string to_hex(raw_t raw, int width);

/// Inverse of to_hex: parse a hex token and sign-extend from `width` bits.
raw_t from_hex(const std::string& token, int width);

}  // namespace dsfft
