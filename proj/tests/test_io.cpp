// Copyright dsfft contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <complex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "dsfft/io.hpp"

using namespace dsfft;

TEST_CASE("signal_format_from_path keys off the extension") {
  CHECK(signal_format_from_path("a.csv") == SignalFormat::Csv);
  CHECK(signal_format_from_path("/tmp/x/out.json") == SignalFormat::Json);
  CHECK(signal_format_from_path("vec.hex") == SignalFormat::Hex);
  CHECK_THROWS_AS(signal_format_from_path("notes.txt"), std::invalid_argument);
  CHECK_THROWS_AS(signal_format_from_path("noext"), std::invalid_argument);
}

TEST_CASE("csv signals roundtrip exactly and skip comments") {
  const std::vector<std::complex<double>> v{{0.5, -0.25}, {0.1234567890123456, 1.0}, {0, 0}};
  std::ostringstream out;
  write_signal_csv(out, v);
  std::istringstream in("# header comment\n\n" + out.str());
  CHECK(read_signal_csv(in) == v);

  std::istringstream bad("0.5\n");
  CHECK_THROWS_AS(read_signal_csv(bad), std::invalid_argument);
}

TEST_CASE("json signals roundtrip") {
  const std::vector<std::complex<double>> v{{1.0, -1.0}, {0.3333333333333333, 0.0}};
  std::ostringstream out;
  write_signal_json(out, v);
  std::istringstream in(out.str());
  CHECK(read_signal_json(in) == v);

  std::istringstream bad("{\"not\": \"pairs\"}");
  CHECK_THROWS(read_signal_json(bad));
  std::istringstream garbage("not json at all");
  CHECK_THROWS(read_signal_json(garbage));
}

TEST_CASE("hex signals roundtrip bit-exactly at the rails") {
  const QFormat fmt(16, 15);
  const std::vector<ComplexFx> v{
      ComplexFx(FxWord(fmt.min_raw(), fmt), FxWord(fmt.max_raw(), fmt)),
      ComplexFx(FxWord(-1, fmt), FxWord(0, fmt)),
      ComplexFx(FxWord(-84, fmt), FxWord(84, fmt)),
  };
  std::ostringstream out;
  write_signal_hex(out, v);
  std::istringstream in(out.str());
  CHECK(read_signal_hex(in, fmt) == v);

  std::istringstream bad("abcd\n");  // one token, needs two
  CHECK_THROWS(read_signal_hex(bad, fmt));
}

TEST_CASE("quantize_signal and signal_to_real invert on representable values") {
  const QFormat fmt(16, 15);
  const std::vector<std::complex<double>> v{{0.5, -0.25}, {-0.65625, 0.0078125}};
  const std::vector<ComplexFx> q = quantize_signal(v, fmt);
  CHECK(signal_to_real(q) == v);
}

TEST_CASE("to_hex emits masked fixed-width lowercase digits") {
  CHECK(to_hex(-84, 8) == "ac");
  CHECK(to_hex(-84, 9) == "1ac");
  CHECK(to_hex(-84, 16) == "ffac");
  CHECK(to_hex(172, 12) == "0ac");
  CHECK(to_hex(0, 20) == "00000");
  CHECK(to_hex(-1, 63) == "7fffffffffffffff");
}

TEST_CASE("from_hex inverts to_hex and validates its input") {
  CHECK(from_hex("ac", 8) == -84);
  CHECK(from_hex("1ac", 9) == -84);
  CHECK(from_hex("0ac", 12) == 172);
  CHECK(from_hex("AC", 8) == -84);  // case-insensitive parse

  std::mt19937_64 rng(0x5eed000a);
  for (int width : {2, 5, 8, 13, 16, 20, 33, 63}) {
    const QFormat fmt(width, 0);
    std::uniform_int_distribution<raw_t> dist(fmt.min_raw(), fmt.max_raw());
    for (int i = 0; i < 200; ++i) {
      const raw_t r = dist(rng);
      CHECK(from_hex(to_hex(r, width), width) == r);
    }
  }

  CHECK_THROWS_AS(from_hex("xg", 8), std::invalid_argument);
  CHECK_THROWS_AS(from_hex("", 8), std::invalid_argument);
  CHECK_THROWS_AS(from_hex("100", 8), std::out_of_range);  // 9 bits into 8
  CHECK_THROWS_AS(from_hex("00000000000000000", 63), std::invalid_argument);  // 17 digits
}
