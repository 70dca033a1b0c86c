// Copyright dsfft contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "dsfft/scml.hpp"

#include <sstream>
#include <stdexcept>

namespace dsfft {

namespace {

raw_t decode_block(int k, int b, int p, std::uint64_t code) {
  if (k == b - 1) return detail::sign_extend(code, p);
  return static_cast<raw_t>(code);
}

void check_input(const ScmlTable& t, const FxWord& x) {
  if (x.fmt.width != t.params.word_width())
    throw std::invalid_argument("scml_mul: input width " + std::to_string(x.fmt.width) +
                                " does not match table slicing (expects " +
                                std::to_string(t.params.word_width()) + ")");
  if (t.constant.fmt.width + x.fmt.width > kMaxWidth)
    throw std::domain_error("scml_mul: product width exceeds carrier capacity");
}

QFormat product_format(const ScmlTable& t, const FxWord& x) {
  return QFormat(t.constant.fmt.width + x.fmt.width, t.constant.fmt.frac + x.fmt.frac);
}

}  // namespace

ScmlTable build_table(const FxWord& c, const SliceParams& params) {
  if (params.algorithm != SliceAlgorithm::A1)
    throw std::invalid_argument("build_table: table construction uses A1 slicing");
  const int p = params.p, b = params.b;
  const std::size_t entries = std::size_t(1) << p;

  ScmlTable t{c, params, {}, c.fmt.width + p};
  t.roms.assign(b, std::vector<raw_t>(entries));
  for (int k = 0; k < b; ++k)
    for (std::size_t s = 0; s < entries; ++s)
      t.roms[k][s] = c.raw * decode_block(k, b, p, s);
  return t;
}

FxWord scml_mul(const ScmlTable& t, const FxWord& x) {
  check_input(t, x);
  const int p = t.params.p, b = t.params.b;
  const std::uint64_t u =
      static_cast<std::uint64_t>(x.raw) & detail::bit_mask(x.fmt.width);

  raw_t acc = 0;
  for (int k = 0; k < b; ++k) {
    const std::uint64_t code = (u >> (p * k)) & detail::bit_mask(p);
    acc += t.roms[k][code] << (p * k);
  }
  return FxWord(acc, product_format(t, x));
}

std::pair<FxWord, ScmlStageTrace> scml_mul_staged(const ScmlTable& t, const FxWord& x) {
  check_input(t, x);
  const int p = t.params.p, b = t.params.b;
  const std::uint64_t u =
      static_cast<std::uint64_t>(x.raw) & detail::bit_mask(x.fmt.width);

  // A partial covers `span` consecutive blocks; its value is relative to the
  // weight of its lowest block.
  struct Partial {
    raw_t value;
    int span;
  };
  std::vector<Partial> level;
  level.reserve(b);

  ScmlStageTrace trace;
  trace.level_partials.emplace_back();
  for (int k = 0; k < b; ++k) {
    const std::uint64_t code = (u >> (p * k)) & detail::bit_mask(p);
    const raw_t v = t.roms[k][code];
    level.push_back({v, 1});
    trace.level_partials.back().push_back(v);
  }

  while (level.size() > 1) {
    std::vector<Partial> next;
    std::vector<raw_t> partials;
    std::vector<raw_t> passed;
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) {
      const Partial& lo = level[i];
      const Partial& hi = level[i + 1];
      const int shift = p * lo.span;
      // The shifted upper operand has `shift` low zero bits, so the low
      // `shift` bits of the lower partial pass through the adder untouched.
      passed.push_back(lo.value & static_cast<raw_t>(detail::bit_mask(shift)));
      next.push_back({lo.value + (hi.value << shift), lo.span + hi.span});
      partials.push_back(next.back().value);
    }
    if (level.size() % 2 != 0) {
      next.push_back(level.back());
      partials.push_back(level.back().value);
    }
    trace.level_partials.push_back(std::move(partials));
    trace.passthrough.push_back(std::move(passed));
    level = std::move(next);
  }

  trace.result = level.front().value;
  return {FxWord(trace.result, product_format(t, x)), trace};
}

std::string dump_table(const ScmlTable& t) {
  std::ostringstream out;
  out << t.params.p << ' ' << t.params.b << ' ' << t.entry_width << ' '
      << t.constant.raw << '\n';
  for (std::size_t k = 0; k < t.roms.size(); ++k)
    for (std::size_t s = 0; s < t.roms[k].size(); ++s)
      out << k << ' ' << s << ' ' << t.roms[k][s] << '\n';
  return out.str();
}

std::int64_t table_rom_bits(const ScmlTable& t) {
  return std::int64_t(t.params.b) * (std::int64_t(1) << t.params.p) * t.entry_width;
}

}  // namespace dsfft
