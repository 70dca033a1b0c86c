// Copyright dsfft contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>

namespace dsfft {

/// Raw storage for fixed-point words. 64-bit two's complement; every
/// operation checks that its exact result fits (see kMaxWidth) and throws
/// std::domain_error instead of wrapping.
using raw_t = std::int64_t;

/// Largest total word width any QFormat may declare. Products require
/// width_a + width_b <= kMaxWidth, sums max(width_a, width_b) + 1 <= kMaxWidth.
inline constexpr int kMaxWidth = 63;

enum class Rounding { NearestEven, Truncate };
enum class Overflow { Saturate, Wrap };

/// Two's-complement fixed-point format: `width` total bits, `frac` fraction
/// bits. A raw integer r represents the real value r * 2^-frac.
struct QFormat {
  int width = 16;
  int frac = 15;

  QFormat() = default;
  QFormat(int width_, int frac_);

  raw_t min_raw() const { return -(raw_t(1) << (width - 1)); }
  raw_t max_raw() const { return (raw_t(1) << (width - 1)) - 1; }

  bool operator==(const QFormat&) const = default;
  std::string to_string() const;
};

/// A fixed-point scalar: raw integer plus its format. Immutable by
/// convention; construction checks the raw value is representable.
struct FxWord {
  raw_t raw = 0;
  QFormat fmt{};

  FxWord() = default;
  FxWord(raw_t raw_, QFormat fmt_);

  double to_real() const;
  bool operator==(const FxWord&) const = default;
};

/// Complex fixed-point sample; both parts share one format.
struct ComplexFx {
  FxWord re{};
  FxWord im{};

  ComplexFx() = default;
  ComplexFx(FxWord re_, FxWord im_);

  const QFormat& fmt() const { return re.fmt; }
  bool operator==(const ComplexFx&) const = default;
};

/// Quantize a real value. Values outside the representable range saturate to
/// the nearest endpoint; non-finite input throws. Truncate rounds toward
/// negative infinity (plain bit truncation of the two's-complement word).
FxWord fx_from_real(double r, QFormat fmt, Rounding rounding = Rounding::NearestEven);

double fx_to_real(const FxWord& x);

/// Exact full-precision product: result format Q(wa+wb, fa+fb). No rounding,
/// no overflow possible.
FxWord fx_mul_full(const FxWord& a, const FxWord& b);

/// Exact sum/difference of words with equal fraction bits. Result width grows
/// to max(wa, wb) + 1 so the result never overflows.
FxWord fx_add(const FxWord& a, const FxWord& b);
FxWord fx_sub(const FxWord& a, const FxWord& b);

/// Convert to another format: drop or extend fraction bits (rounding applies
/// when bits are dropped), then fit the integer range under the overflow
/// policy.
FxWord fx_requantize(const FxWord& x, QFormat fmt,
                     Overflow overflow = Overflow::Saturate,
                     Rounding rounding = Rounding::NearestEven);

namespace detail {

inline std::uint64_t bit_mask(int bits) {
  return bits >= 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << bits) - 1;
}

/// Interpret the low `width` bits of `pattern` as a signed two's-complement
/// value.
inline raw_t sign_extend(std::uint64_t pattern, int width) {
  const std::uint64_t m = bit_mask(width);
  const std::uint64_t u = pattern & m;
  if (u & (std::uint64_t(1) << (width - 1))) return static_cast<raw_t>(u | ~m);
  return static_cast<raw_t>(u);
}

}  // namespace detail

}  // namespace dsfft
