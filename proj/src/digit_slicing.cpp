// Copyright dsfft contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "dsfft/digit_slicing.hpp"

#include <stdexcept>
#include <string>

namespace dsfft {

SliceParams::SliceParams(int p_, int b_, SliceAlgorithm algorithm_)
    : p(p_), b(b_), algorithm(algorithm_) {
  if (p < 2) throw std::invalid_argument("SliceParams: p must be >= 2");
  if (b < 2) throw std::invalid_argument("SliceParams: b must be >= 2");
  if (word_width() > kMaxWidth)
    throw std::invalid_argument("SliceParams: sliced word width exceeds carrier capacity");
}

namespace {

void check_width(const FxWord& x, const SliceParams& params, SliceAlgorithm want,
                 const char* op) {
  if (params.algorithm != want)
    throw std::invalid_argument(std::string(op) + ": wrong slicing algorithm for this call");
  if (x.fmt.width != params.word_width())
    throw std::invalid_argument(std::string(op) + ": word width " +
                                std::to_string(x.fmt.width) + " does not match p,b (expects " +
                                std::to_string(params.word_width()) + ")");
}

void check_block_range(raw_t v, raw_t lo, raw_t hi, int k, const char* op) {
  if (v < lo || v > hi)
    throw std::out_of_range(std::string(op) + ": block " + std::to_string(k) +
                            " value " + std::to_string(v) + " out of range");
}

}  // namespace

SlicedWord slice_a1(const FxWord& x, const SliceParams& params) {
  check_width(x, params, SliceAlgorithm::A1, "slice_a1");
  const int p = params.p, b = params.b;
  const std::uint64_t u =
      static_cast<std::uint64_t>(x.raw) & detail::bit_mask(x.fmt.width);

  SlicedWord s{std::vector<raw_t>(b), params, x.fmt};
  for (int k = 0; k < b; ++k) {
    const std::uint64_t group = (u >> (p * k)) & detail::bit_mask(p);
    s.blocks[k] = (k == b - 1) ? detail::sign_extend(group, p)
                               : static_cast<raw_t>(group);
  }
  return s;
}

FxWord unslice_a1(const SlicedWord& s) {
  if (s.params.algorithm != SliceAlgorithm::A1)
    throw std::invalid_argument("unslice_a1: not an A1 sliced word");
  const int p = s.params.p, b = s.params.b;
  if (static_cast<int>(s.blocks.size()) != b)
    throw std::invalid_argument("unslice_a1: block count mismatch");

  const raw_t top = raw_t(1) << (p - 1);
  raw_t raw = 0;
  for (int k = 0; k < b; ++k) {
    if (k == b - 1)
      check_block_range(s.blocks[k], -top, top - 1, k, "unslice_a1");
    else
      check_block_range(s.blocks[k], 0, (raw_t(1) << p) - 1, k, "unslice_a1");
    raw += s.blocks[k] << (p * k);
  }
  return FxWord(raw, s.src_fmt);
}

SlicedWord slice_a2(const FxWord& x, const SliceParams& params) {
  check_width(x, params, SliceAlgorithm::A2, "slice_a2");
  const int p = params.p, b = params.b;
  const int w = params.word_width();
  const std::uint64_t u = static_cast<std::uint64_t>(x.raw) & detail::bit_mask(w);

  SlicedWord s{std::vector<raw_t>(b), params, x.fmt};
  s.blocks[0] = (u >> (w - 1)) & 1 ? -1 : 0;
  for (int k = 1; k < b; ++k)
    s.blocks[k] = static_cast<raw_t>((u >> (p * (b - 1 - k))) & detail::bit_mask(p));
  return s;
}

FxWord unslice_a2(const SlicedWord& s) {
  if (s.params.algorithm != SliceAlgorithm::A2)
    throw std::invalid_argument("unslice_a2: not an A2 sliced word");
  const int p = s.params.p, b = s.params.b;
  if (static_cast<int>(s.blocks.size()) != b)
    throw std::invalid_argument("unslice_a2: block count mismatch");

  check_block_range(s.blocks[0], -1, 0, 0, "unslice_a2");
  raw_t raw = s.blocks[0] << (p * (b - 1));
  for (int k = 1; k < b; ++k) {
    check_block_range(s.blocks[k], 0, (raw_t(1) << p) - 1, k, "unslice_a2");
    raw += s.blocks[k] << (p * (b - 1 - k));
  }
  return FxWord(raw, s.src_fmt);
}

std::pair<SlicedWord, SlicedWord> slice_complex(const ComplexFx& z, const SliceParams& params) {
  if (params.algorithm == SliceAlgorithm::A1)
    return {slice_a1(z.re, params), slice_a1(z.im, params)};
  return {slice_a2(z.re, params), slice_a2(z.im, params)};
}

}  // namespace dsfft
