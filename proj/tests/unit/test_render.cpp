#include <doctest.h>

#include <string>

#include "schottky_lab/error.hpp"
#include "schottky_lab/render.hpp"
#include "schottky_lab/schottky.hpp"

using namespace schottky_lab;

namespace {

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

SchottkyMarking genus2() {
  auto pair = [](Complex c, Complex cp) {
    return CirclePair{GeneralizedCircle::circle(c, 1), GeneralizedCircle::circle(cp, 1),
                      Mobius(cp, -cp * c - 1.0, 1.0, -c)};
  };
  return SchottkyMarking({pair(0, 10), pair(30, 40)});
}

}  // namespace

TEST_CASE("image format names") {
  CHECK(parse_image_format("svg") == ImageFormat::Svg);
  CHECK(parse_image_format("ppm") == ImageFormat::Ppm);
  try {
    (void)parse_image_format("png");
    FAIL("expected UnsupportedFormat");
  } catch (const SchottkyError& e) {
    CHECK(e.code() == ErrorCode::UnsupportedFormat);
  }
}

TEST_CASE("svg output holds one circle per disc") {
  const auto m = genus2();
  for (int depth = 1; depth <= 3; ++depth) {
    const auto sample = limit_set(m, depth);
    const std::string svg = render_limit_set(sample, ImageFormat::Svg);
    CHECK(count_of(svg, "<circle ") == sample.discs.size());
    CHECK(svg.find("depth=" + std::to_string(depth)) != std::string::npos);
    CHECK(svg.rfind("</svg>") != std::string::npos);
  }
  const auto one = limit_set(m, 1);
  CHECK(count_of(render_limit_set(one, ImageFormat::Svg), "<circle ") == 4);
}

TEST_CASE("ppm output has a well-formed header and raster") {
  const auto sample = limit_set(genus2(), 2);
  const std::string ppm = render_limit_set(sample, ImageFormat::Ppm, {64, 48});
  CHECK(ppm.rfind("P6\n", 0) == 0);
  CHECK(ppm.find("discs=12") != std::string::npos);
  const auto header_end = ppm.find("\n255\n");
  REQUIRE(header_end != std::string::npos);
  CHECK(ppm.find("64 48") != std::string::npos);
  CHECK(ppm.size() - (header_end + 5) == 64u * 48u * 3u);
  // some pixels are black, most are white
  std::size_t black = 0;
  for (std::size_t i = header_end + 5; i < ppm.size(); i += 3) black += ppm[i] == 0;
  CHECK(black > 0);
  CHECK(black < 64u * 48u);
}

TEST_CASE("rendering is deterministic and validates input") {
  const auto sample = limit_set(genus2(), 3);
  CHECK(render_limit_set(sample, ImageFormat::Svg) == render_limit_set(sample, ImageFormat::Svg));
  CHECK(render_limit_set(sample, ImageFormat::Ppm) == render_limit_set(sample, ImageFormat::Ppm));
  CHECK_THROWS_AS(render_limit_set(LimitSetSample{}, ImageFormat::Svg), SchottkyError);
  CHECK_THROWS_AS(render_limit_set(sample, ImageFormat::Ppm, {0, 10}), SchottkyError);
}
