#pragma once

#include <complex>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace phif {

// Complex literals in the round-trippable "a+bi" form: "1.5", "-2i",
// "0.25-1e-3i", "i". Whitespace is not significant.
inline std::complex<double> parse_complex(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text)
    if (c != ' ' && c != '\t') s.push_back(c);
  if (s.empty()) throw std::invalid_argument("parse_complex: empty string");

  const char* p = s.c_str();
  auto read_signed_part = [&](double& out) -> bool {
    // Returns false at end of string. Handles "i", "+i", "-i", "2.5i", "3e-2".
    if (*p == '\0') return false;
    double sign = 1.0;
    const char* q = p;
    if (*q == '+' || *q == '-') {
      sign = *q == '-' ? -1.0 : 1.0;
      ++q;
    }
    if (*q == 'i') {  // bare "i" coefficient; leave the 'i' for the caller
      out = sign;
      p = q;
      return true;
    }
    char* end = nullptr;
    const double v = std::strtod(p, &end);
    if (end == p) throw std::invalid_argument("parse_complex: malformed number");
    out = v;
    p = end;
    return true;
  };

  double re = 0.0, im = 0.0;
  double first = 0.0;
  if (!read_signed_part(first))
    throw std::invalid_argument("parse_complex: empty string");
  if (*p == 'i') {
    im = first;
    ++p;
  } else {
    re = first;
    if (*p != '\0') {
      if (*p != '+' && *p != '-')
        throw std::invalid_argument("parse_complex: expected sign before the "
                                    "imaginary part");
      double second = 0.0;
      read_signed_part(second);
      if (*p != 'i')
        throw std::invalid_argument("parse_complex: imaginary part must end in 'i'");
      ++p;
      im = second;
    }
  }
  if (*p != '\0')
    throw std::invalid_argument("parse_complex: trailing characters in '" +
                                std::string(text) + "'");
  return {re, im};
}

inline std::string format_complex(std::complex<double> z) {
  char buf[64];
  if (z.imag() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.17g", z.real());
    return buf;
  }
  std::string out;
  if (z.real() != 0.0) {
    std::snprintf(buf, sizeof buf, "%.17g", z.real());
    out = buf;
    if (z.imag() > 0) out += "+";
  }
  std::snprintf(buf, sizeof buf, "%.17g", z.imag());
  out += buf;
  out += "i";
  return out;
}

// Binary PGM (P5, maxval 255) hit-count histogram.
struct Pgm {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // row-major, top row first
};

inline Pgm rasterize(const std::vector<std::complex<double>>& points, int width,
                     int height, double xmin, double xmax, double ymin,
                     double ymax) {
  if (width <= 0 || height <= 0)
    throw std::invalid_argument("rasterize: raster dimensions must be positive");
  if (!(xmax > xmin) || !(ymax > ymin))
    throw std::invalid_argument("rasterize: empty bounding box");
  std::vector<std::uint32_t> counts((std::size_t)width * height, 0);
  std::uint32_t peak = 0;
  for (const auto& z : points) {
    const double fx = (z.real() - xmin) / (xmax - xmin);
    const double fy = (ymax - z.imag()) / (ymax - ymin);  // y grows downward
    if (fx < 0.0 || fx >= 1.0 || fy < 0.0 || fy >= 1.0) continue;
    const std::size_t idx = (std::size_t)(fy * height) * width +
                            (std::size_t)(fx * width);
    peak = std::max(peak, ++counts[idx]);
  }
  Pgm img;
  img.width = width;
  img.height = height;
  img.pixels.resize(counts.size(), 0);
  if (peak == 0) return img;
  for (std::size_t i = 0; i < counts.size(); ++i)
    if (counts[i])
      img.pixels[i] =
          (std::uint8_t)(1 + (254ull * counts[i] + peak - 1) / peak);
  return img;
}

inline void write_pgm(std::ostream& os, const Pgm& img) {
  os << "P5\n" << img.width << " " << img.height << "\n255\n";
  os.write(reinterpret_cast<const char*>(img.pixels.data()),
           (std::streamsize)img.pixels.size());
}

}  // namespace phif
