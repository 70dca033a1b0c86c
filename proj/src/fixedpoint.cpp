// Copyright dsfft contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "dsfft/fixedpoint.hpp"

#include <cmath>
#include <stdexcept>

namespace dsfft {

QFormat::QFormat(int width_, int frac_) : width(width_), frac(frac_) {
  if (width < 2 || width > kMaxWidth)
    throw std::invalid_argument("QFormat: width must be in [2, " +
                                std::to_string(kMaxWidth) + "], got " + std::to_string(width));
  if (frac < 0 || frac > width - 1)
    throw std::invalid_argument("QFormat: frac must be in [0, width-1], got " +
                                std::to_string(frac));
}

std::string QFormat::to_string() const {
  return "Q(" + std::to_string(width) + "," + std::to_string(frac) + ")";
}

FxWord::FxWord(raw_t raw_, QFormat fmt_) : raw(raw_), fmt(fmt_) {
  if (raw < fmt.min_raw() || raw > fmt.max_raw())
    throw std::out_of_range("FxWord: raw " + std::to_string(raw) +
                            " not representable in " + fmt.to_string());
}

double FxWord::to_real() const { return std::ldexp(static_cast<double>(raw), -fmt.frac); }

ComplexFx::ComplexFx(FxWord re_, FxWord im_) : re(re_), im(im_) {
  if (re.fmt != im.fmt)
    throw std::invalid_argument("ComplexFx: real and imaginary formats differ");
}

FxWord fx_from_real(double r, QFormat fmt, Rounding rounding) {
  if (!std::isfinite(r)) throw std::invalid_argument("fx_from_real: non-finite input");
  // ldexp scales by a power of two exactly; only the rounding step loses bits.
  const double scaled = std::ldexp(r, fmt.frac);
  const double limit = std::ldexp(1.0, fmt.width - 1);
  if (scaled >= limit) return FxWord(fmt.max_raw(), fmt);
  if (scaled < -limit) return FxWord(fmt.min_raw(), fmt);

  const double fl = std::floor(scaled);
  raw_t q = static_cast<raw_t>(fl);
  if (rounding == Rounding::NearestEven) {
    const double rem = scaled - fl;
    if (rem > 0.5 || (rem == 0.5 && (q & 1))) ++q;
  }
  if (q > fmt.max_raw()) q = fmt.max_raw();
  if (q < fmt.min_raw()) q = fmt.min_raw();
  return FxWord(q, fmt);
}

double fx_to_real(const FxWord& x) { return x.to_real(); }

FxWord fx_mul_full(const FxWord& a, const FxWord& b) {
  const int w = a.fmt.width + b.fmt.width;
  if (w > kMaxWidth)
    throw std::domain_error("fx_mul_full: product width " + std::to_string(w) +
                            " exceeds carrier capacity");
  const raw_t prod = static_cast<raw_t>(static_cast<__int128>(a.raw) * b.raw);
  return FxWord(prod, QFormat(w, a.fmt.frac + b.fmt.frac));
}

namespace {

QFormat sum_format(const FxWord& a, const FxWord& b, const char* op) {
  if (a.fmt.frac != b.fmt.frac)
    throw std::invalid_argument(std::string(op) + ": fraction bits differ (" +
                                a.fmt.to_string() + " vs " + b.fmt.to_string() + ")");
  const int w = std::max(a.fmt.width, b.fmt.width) + 1;
  if (w > kMaxWidth)
    throw std::domain_error(std::string(op) + ": sum width " + std::to_string(w) +
                            " exceeds carrier capacity");
  return QFormat(w, a.fmt.frac);
}

}  // namespace

FxWord fx_add(const FxWord& a, const FxWord& b) {
  return FxWord(a.raw + b.raw, sum_format(a, b, "fx_add"));
}

FxWord fx_sub(const FxWord& a, const FxWord& b) {
  return FxWord(a.raw - b.raw, sum_format(a, b, "fx_sub"));
}

FxWord fx_requantize(const FxWord& x, QFormat fmt, Overflow overflow, Rounding rounding) {
  const int shift = x.fmt.frac - fmt.frac;
  __int128 v;
  if (shift >= 0) {
    raw_t q = x.raw >> shift;  // arithmetic shift: truncation == floor
    if (rounding == Rounding::NearestEven && shift > 0) {
      const raw_t rem = x.raw - (q << shift);
      const raw_t half = raw_t(1) << (shift - 1);
      if (rem > half || (rem == half && (q & 1))) ++q;
    }
    v = q;
  } else {
    const int up = -shift;
    if (x.fmt.width + up > 127)
      throw std::domain_error("fx_requantize: fraction widening exceeds carrier capacity");
    v = static_cast<__int128>(x.raw) << up;
  }

  raw_t out;
  if (overflow == Overflow::Saturate) {
    if (v > static_cast<__int128>(fmt.max_raw()))
      out = fmt.max_raw();
    else if (v < static_cast<__int128>(fmt.min_raw()))
      out = fmt.min_raw();
    else
      out = static_cast<raw_t>(v);
  } else {
    out = detail::sign_extend(static_cast<std::uint64_t>(v), fmt.width);
  }
  return FxWord(out, fmt);
}

}  // namespace dsfft
