// Copyright dsfft contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include <doctest.h>

#include "dsfft/scml.hpp"
#include "oracles.hpp"

using namespace dsfft;

namespace {

// Block decode mirror: unsigned for the low blocks, signed p bits on top.
raw_t decode(int k, int b, int p, std::size_t code) {
  return k == b - 1 ? oracles::extend_signed(code, p) : static_cast<raw_t>(code);
}

}  // namespace

TEST_CASE("build_table stores the exact product of every block code") {
  const QFormat fmt(16, 15);
  const SliceParams params(4, 4);
  const FxWord c = fx_from_real(std::cos(std::numbers::pi / 8), fmt);
  const ScmlTable t = build_table(c, params);

  CHECK(t.constant == c);
  CHECK(t.entry_width == 20);
  REQUIRE(t.roms.size() == 4);
  for (int k = 0; k < 4; ++k) {
    REQUIRE(t.roms[static_cast<std::size_t>(k)].size() == 16);
    for (std::size_t s = 0; s < 16; ++s) {
      CHECK(t.roms[static_cast<std::size_t>(k)][s] ==
            oracles::mul_shift_add(c.raw, decode(k, 4, 4, s)));
    }
  }
}

TEST_CASE("build_table requires A1 parameters") {
  const FxWord c(100, QFormat(9, 8));
  CHECK_THROWS_AS(build_table(c, SliceParams(4, 3, SliceAlgorithm::A2)),
                  std::invalid_argument);
}

TEST_CASE("scml_mul equals the full multiplier for every input word") {
  const QFormat fmt(16, 15);
  const SliceParams params(4, 4);
  for (const double value : {std::cos(std::numbers::pi / 8), -0.5, 0.987654321}) {
    const FxWord c = fx_from_real(value, fmt);
    const ScmlTable t = build_table(c, params);
    for (raw_t r = fmt.min_raw(); r <= fmt.max_raw(); ++r) {
      const FxWord x(r, fmt);
      const FxWord got = scml_mul(t, x);
      const FxWord want = fx_mul_full(c, x);
      REQUIRE(got.raw == want.raw);
      REQUIRE(got.fmt == want.fmt);
    }
  }
}

TEST_CASE("scml_mul result format is the product format") {
  const FxWord c = fx_from_real(0.25, QFormat(16, 15));
  const ScmlTable t = build_table(c, SliceParams(4, 4));
  CHECK(scml_mul(t, FxWord(1, QFormat(16, 15))).fmt == QFormat(32, 30));
}

TEST_CASE("odd block counts route one partial through unpaired") {
  const QFormat fmt(12, 11);
  const SliceParams params(4, 3);
  const FxWord c = fx_from_real(-0.7071, fmt);
  const ScmlTable t = build_table(c, params);
  for (raw_t r = fmt.min_raw(); r <= fmt.max_raw(); ++r) {
    const FxWord x(r, fmt);
    const auto [staged, trace] = scml_mul_staged(t, x);
    REQUIRE(staged.raw == scml_mul(t, x).raw);
    REQUIRE(staged.raw == fx_mul_full(c, x).raw);
    REQUIRE(trace.level_partials.size() == 3);  // 3 -> 2 -> 1 partials
    REQUIRE(trace.level_partials[0].size() == 3);
    REQUIRE(trace.level_partials[1].size() == 2);
    REQUIRE(trace.level_partials[2].size() == 1);
    // The unpaired top block passes to level 1 unchanged.
    REQUIRE(trace.level_partials[1][1] == trace.level_partials[0][2]);
  }
}

TEST_CASE("staged evaluation reproduces the flat product and its own trace laws") {
  const QFormat fmt(16, 15);
  const SliceParams params(4, 4);
  const FxWord c = fx_from_real(std::sin(2 * std::numbers::pi * 3 / 64), fmt);
  const ScmlTable t = build_table(c, params);

  std::mt19937_64 rng(0x5eed0002);
  std::uniform_int_distribution<raw_t> dist(fmt.min_raw(), fmt.max_raw());
  for (int i = 0; i < 2000; ++i) {
    const FxWord x(dist(rng), fmt);
    const auto [staged, trace] = scml_mul_staged(t, x);
    CHECK(staged.raw == scml_mul(t, x).raw);
    CHECK(trace.result == staged.raw);

    // Level 0 holds the four ROM outputs.
    REQUIRE(trace.level_partials.size() == 3);
    REQUIRE(trace.level_partials[0].size() == 4);
    const std::uint64_t u = static_cast<std::uint64_t>(x.raw) & oracles::mask_bits(16);
    for (int k = 0; k < 4; ++k) {
      const std::size_t code = (u >> (4 * k)) & 0xF;
      CHECK(trace.level_partials[0][static_cast<std::size_t>(k)] ==
            t.roms[static_cast<std::size_t>(k)][code]);
    }

    // Each combine is lo + (hi << p*span), and the low bits pass through.
    REQUIRE(trace.passthrough.size() == 2);
    REQUIRE(trace.passthrough[0].size() == 2);
    REQUIRE(trace.passthrough[1].size() == 1);
    for (std::size_t pair = 0; pair < 2; ++pair) {
      const raw_t lo = trace.level_partials[0][2 * pair];
      const raw_t hi = trace.level_partials[0][2 * pair + 1];
      const raw_t combined = lo + (hi << 4);
      CHECK(trace.level_partials[1][pair] == combined);
      CHECK(trace.passthrough[0][pair] == (lo & 0xF));
      CHECK((combined & 0xF) == trace.passthrough[0][pair]);
    }
    const raw_t lo = trace.level_partials[1][0];
    const raw_t hi = trace.level_partials[1][1];
    CHECK(trace.level_partials[2][0] == lo + (hi << 8));
    CHECK(trace.passthrough[1][0] == (lo & 0xFF));
  }
}

TEST_CASE("a zero constant yields all-zero tables and products") {
  const QFormat fmt(16, 15);
  const ScmlTable t = build_table(FxWord(0, fmt), SliceParams(4, 4));
  for (const auto& rom : t.roms)
    for (raw_t v : rom) CHECK(v == 0);
  CHECK(scml_mul(t, FxWord(-32768, fmt)).raw == 0);
}

TEST_CASE("scml_mul validates the input word") {
  const QFormat fmt(16, 15);
  const ScmlTable t = build_table(fx_from_real(0.5, fmt), SliceParams(4, 4));
  CHECK_THROWS_AS(scml_mul(t, FxWord(0, QFormat(12, 11))), std::invalid_argument);
  auto staged = [&](const FxWord& x) { return scml_mul_staged(t, x); };
  CHECK_THROWS_AS(staged(FxWord(0, QFormat(8, 7))), std::invalid_argument);
}

TEST_CASE("dump_table is a parseable decimal listing") {
  const QFormat fmt(16, 15);
  const FxWord c = fx_from_real(0.75, fmt);
  const ScmlTable t = build_table(c, SliceParams(4, 4));
  const std::string text = dump_table(t);

  std::istringstream in(text);
  int p = 0, b = 0, entry_width = 0;
  raw_t craw = 0;
  REQUIRE((in >> p >> b >> entry_width >> craw));
  CHECK(p == 4);
  CHECK(b == 4);
  CHECK(entry_width == 20);
  CHECK(craw == c.raw);
  int lines = 0;
  int k = 0, s = 0;
  raw_t v = 0;
  while (in >> k >> s >> v) {
    REQUIRE(k == lines / 16);
    REQUIRE(s == lines % 16);
    REQUIRE(v == t.roms[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)]);
    ++lines;
  }
  CHECK(lines == 64);
}

TEST_CASE("table_rom_bits counts entries times entry width") {
  const ScmlTable t = build_table(fx_from_real(0.5, QFormat(16, 15)), SliceParams(4, 4));
  CHECK(table_rom_bits(t) == 4 * 16 * 20);
  const ScmlTable t2 = build_table(fx_from_real(0.5, QFormat(12, 11)), SliceParams(4, 3));
  CHECK(table_rom_bits(t2) == 3 * 16 * 16);
}
