// Copyright dsfft contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "dsfft/io.hpp"

#include <cctype>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace dsfft {

namespace {

std::string lower_ext(const std::string& path) {
  auto dot = path.find_last_of('.');
  if (dot == std::string::npos) return {};
  std::string ext = path.substr(dot + 1);
  for (char& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return ext;
}

bool blank(const std::string& line) {
  for (char c : line) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

double parse_real(const std::string& s, int line_no) {
  try {
    size_t pos = 0;
    double v = std::stod(s, &pos);
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos != s.size()) throw std::invalid_argument("trailing junk");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad number '" + s + "' on line " + std::to_string(line_no));
  }
}

}  // namespace

SignalFormat signal_format_from_path(const std::string& path) {
  std::string ext = lower_ext(path);
  if (ext == "csv") return SignalFormat::Csv;
  if (ext == "json") return SignalFormat::Json;
  if (ext == "hex") return SignalFormat::Hex;
  throw std::invalid_argument("unrecognized signal extension: " + path);
}

std::vector<std::complex<double>> read_signal_csv(std::istream& in) {
  std::vector<std::complex<double>> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line) || line[0] == '#') continue;
    auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw std::invalid_argument("missing comma on line " + std::to_string(line_no));
    }
    double re = parse_real(line.substr(0, comma), line_no);
    double im = parse_real(line.substr(comma + 1), line_no);
    out.emplace_back(re, im);
  }
  return out;
}

void write_signal_csv(std::ostream& out, const std::vector<std::complex<double>>& v) {
  std::ostringstream ss;
  ss.precision(17);
  for (const auto& z : v) {
    ss << z.real() << ',' << z.imag() << '\n';
  }
  out << ss.str();
}

std::vector<std::complex<double>> read_signal_json(std::istream& in) {
  nlohmann::json j = nlohmann::json::parse(in);
  if (!j.is_array()) throw std::invalid_argument("signal JSON must be an array");
  std::vector<std::complex<double>> out;
  out.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw std::invalid_argument("signal JSON entries must be [re, im] number pairs");
    }
    out.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  return out;
}

void write_signal_json(std::ostream& out, const std::vector<std::complex<double>>& v) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& z : v) {
    j.push_back({z.real(), z.imag()});
  }
  out << j.dump(2) << '\n';
}

std::vector<ComplexFx> read_signal_hex(std::istream& in, QFormat fmt) {
  std::vector<ComplexFx> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line) || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tok_re, tok_im, extra;
    if (!(ls >> tok_re >> tok_im) || (ls >> extra)) {
      throw std::invalid_argument("expected two hex tokens on line " + std::to_string(line_no));
    }
    ComplexFx z;
    z.re = FxWord{from_hex(tok_re, fmt.width), fmt};
    z.im = FxWord{from_hex(tok_im, fmt.width), fmt};
    out.push_back(z);
  }
  return out;
}

void write_signal_hex(std::ostream& out, const std::vector<ComplexFx>& v) {
  std::ostringstream ss;
  for (const auto& z : v) {
    ss << to_hex(z.re.raw, z.re.fmt.width) << ' ' << to_hex(z.im.raw, z.im.fmt.width) << '\n';
  }
  out << ss.str();
}

std::vector<ComplexFx> quantize_signal(const std::vector<std::complex<double>>& v,
                                       QFormat fmt,
                                       Rounding rounding) {
  std::vector<ComplexFx> out;
  out.reserve(v.size());
  for (const auto& z : v) {
    ComplexFx q;
    q.re = fx_from_real(z.real(), fmt, rounding);
    q.im = fx_from_real(z.imag(), fmt, rounding);
    out.push_back(q);
  }
  return out;
}

std::vector<std::complex<double>> signal_to_real(const std::vector<ComplexFx>& v) {
  std::vector<std::complex<double>> out;
  out.reserve(v.size());
  for (const auto& z : v) {
    out.emplace_back(fx_to_real(z.re), fx_to_real(z.im));
  }
  return out;
}

std::string to_hex(raw_t raw, int width) {
  if (width < 1 || width > kMaxWidth) throw std::invalid_argument("to_hex: bad width");
  int digits = (width + 3) / 4;
  std::uint64_t pattern = static_cast<std::uint64_t>(raw) & detail::bit_mask(width);
  std::string s(static_cast<size_t>(digits), '0');
  static const char* kDigits = "0123456789abcdef";
  for (int i = digits - 1; i >= 0; --i) {
    s[static_cast<size_t>(i)] = kDigits[pattern & 0xf];
    pattern >>= 4;
  }
  return s;
}

raw_t from_hex(const std::string& token, int width) {
  if (width < 1 || width > kMaxWidth) throw std::invalid_argument("from_hex: bad width");
  if (token.empty() || token.size() > 16) {
    throw std::invalid_argument("from_hex: bad token '" + token + "'");
  }
  std::uint64_t pattern = 0;
  for (char c : token) {
    int d;
    if (c >= '0' && c <= '9') d = c - '0';
    else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
    else throw std::invalid_argument("from_hex: bad token '" + token + "'");
    pattern = (pattern << 4) | static_cast<std::uint64_t>(d);
  }
  if ((pattern & ~detail::bit_mask(width)) != 0) {
    throw std::out_of_range("from_hex: token '" + token + "' exceeds " +
                            std::to_string(width) + " bits");
  }
  return detail::sign_extend(pattern, width);
}

}  // namespace dsfft
