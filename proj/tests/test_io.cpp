#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "phif/io.hpp"

using phif::parse_complex;

TEST_CASE("complex parsing", "[io]") {
  CHECK(parse_complex("0") == std::complex<double>{0.0, 0.0});
  CHECK(parse_complex("1.5") == std::complex<double>{1.5, 0.0});
  CHECK(parse_complex("-2.196") == std::complex<double>{-2.196, 0.0});
  CHECK(parse_complex("2i") == std::complex<double>{0.0, 2.0});
  CHECK(parse_complex("i") == std::complex<double>{0.0, 1.0});
  CHECK(parse_complex("-i") == std::complex<double>{0.0, -1.0});
  CHECK(parse_complex("1+2i") == std::complex<double>{1.0, 2.0});
  CHECK(parse_complex("1-2i") == std::complex<double>{1.0, -2.0});
  CHECK(parse_complex("1+i") == std::complex<double>{1.0, 1.0});
  CHECK(parse_complex("-1.2e-3-4i") == std::complex<double>{-1.2e-3, -4.0});
  CHECK(parse_complex("0.3i") == std::complex<double>{0.0, 0.3});
  CHECK(parse_complex(" 1.5 + 0.3i ") == std::complex<double>{1.5, 0.3});

  CHECK_THROWS_AS(parse_complex(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_complex("1+"), std::invalid_argument);
  CHECK_THROWS_AS(parse_complex("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_complex("1i2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_complex("1+2j"), std::invalid_argument);
  CHECK_THROWS_AS(parse_complex("1..2"), std::invalid_argument);
}

TEST_CASE("format/parse round trip", "[io]") {
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  for (int i = 0; i < 100; ++i) {
    const std::complex<double> z{u(rng), i % 3 == 0 ? 0.0 : u(rng)};
    CHECK(parse_complex(phif::format_complex(z)) == z);
  }
}

TEST_CASE("pgm rasterization", "[io]") {
  std::vector<std::complex<double>> pts{{0.5, 0.5}, {0.5, 0.5}, {-0.5, -0.5}};
  const phif::Pgm img = phif::rasterize(pts, 4, 4, -1, 1, -1, 1);
  REQUIRE(img.pixels.size() == 16);
  int nonzero = 0;
  int peak = 0;
  for (auto p : img.pixels) {
    if (p) ++nonzero;
    peak = std::max(peak, (int)p);
  }
  CHECK(nonzero == 2);
  CHECK(peak == 255);

  std::ostringstream os;
  phif::write_pgm(os, img);
  const std::string bytes = os.str();
  CHECK(bytes.substr(0, 11) == "P5\n4 4\n255\n");
  CHECK(bytes.size() == 11 + 16);

  CHECK_THROWS_AS(phif::rasterize(pts, 0, 4, -1, 1, -1, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(phif::rasterize(pts, 4, 4, 1, 1, -1, 1),
                  std::invalid_argument);
}
