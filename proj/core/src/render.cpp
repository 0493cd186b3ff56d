#include "schottky_lab/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <vector>

#include "schottky_lab/error.hpp"

namespace schottky_lab {
namespace {

struct Bounds {
  double xmin = std::numeric_limits<double>::infinity();
  double xmax = -std::numeric_limits<double>::infinity();
  double ymin = std::numeric_limits<double>::infinity();
  double ymax = -std::numeric_limits<double>::infinity();
};

Bounds bounds_of(const std::vector<LimitDisc>& discs) {
  Bounds b;
  for (const auto& d : discs) {
    const Circle& c = d.disc;
    b.xmin = std::min(b.xmin, c.center.real() - c.radius);
    b.xmax = std::max(b.xmax, c.center.real() + c.radius);
    b.ymin = std::min(b.ymin, c.center.imag() - c.radius);
    b.ymax = std::max(b.ymax, c.center.imag() + c.radius);
  }
  const double pad = 0.05 * std::max({b.xmax - b.xmin, b.ymax - b.ymin, 1e-300});
  b.xmin -= pad;
  b.xmax += pad;
  b.ymin -= pad;
  b.ymax += pad;
  return b;
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string render_svg(const LimitSetSample& sample, const RenderOptions& opt) {
  const Bounds b = bounds_of(sample.discs);
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(opt.width) + "\" height=\"" + std::to_string(opt.height) +
         "\" viewBox=\"" + num(b.xmin) + " " + num(-b.ymax) + " " + num(b.xmax - b.xmin) + " " +
         num(b.ymax - b.ymin) + "\" preserveAspectRatio=\"xMidYMid meet\">\n";
  out += "<metadata>depth=" + std::to_string(sample.depth) +
         " discs=" + std::to_string(sample.discs.size()) + "</metadata>\n";
  out += "<rect x=\"" + num(b.xmin) + "\" y=\"" + num(-b.ymax) + "\" width=\"" +
         num(b.xmax - b.xmin) + "\" height=\"" + num(b.ymax - b.ymin) + "\" fill=\"white\"/>\n";
  out += "<g fill=\"black\" stroke=\"none\">\n";
  for (const auto& d : sample.discs) {
    // SVG y grows downward.
    out += "<circle cx=\"" + num(d.disc.center.real()) + "\" cy=\"" +
           num(-d.disc.center.imag()) + "\" r=\"" + num(d.disc.radius) + "\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

std::string render_ppm(const LimitSetSample& sample, const RenderOptions& opt) {
  const Bounds b = bounds_of(sample.discs);
  const auto w = static_cast<std::size_t>(opt.width);
  const auto h = static_cast<std::size_t>(opt.height);
  const double scale = std::min(opt.width / (b.xmax - b.xmin), opt.height / (b.ymax - b.ymin));
  const double cx = 0.5 * (b.xmin + b.xmax);
  const double cy = 0.5 * (b.ymin + b.ymax);

  std::vector<unsigned char> pixels(w * h * 3, 255);
  for (const auto& d : sample.discs) {
    const double px = 0.5 * opt.width + (d.disc.center.real() - cx) * scale;
    const double py = 0.5 * opt.height - (d.disc.center.imag() - cy) * scale;
    const double pr = std::max(d.disc.radius * scale, 0.5);
    // Sub-pixel discs still mark the pixel holding their centre.
    const long cxp = static_cast<long>(std::floor(px));
    const long cyp = static_cast<long>(std::floor(py));
    if (cxp >= 0 && cyp >= 0 && cxp < static_cast<long>(w) && cyp < static_cast<long>(h)) {
      const std::size_t at = (static_cast<std::size_t>(cyp) * w + static_cast<std::size_t>(cxp)) * 3;
      pixels[at] = pixels[at + 1] = pixels[at + 2] = 0;
    }
    const long x0 = std::max(0L, static_cast<long>(std::floor(px - pr)));
    const long x1 = std::min(static_cast<long>(w) - 1, static_cast<long>(std::ceil(px + pr)));
    const long y0 = std::max(0L, static_cast<long>(std::floor(py - pr)));
    const long y1 = std::min(static_cast<long>(h) - 1, static_cast<long>(std::ceil(py + pr)));
    for (long y = y0; y <= y1; ++y) {
      for (long x = x0; x <= x1; ++x) {
        const double dx = x + 0.5 - px;
        const double dy = y + 0.5 - py;
        if (dx * dx + dy * dy <= pr * pr) {
          const std::size_t at = (static_cast<std::size_t>(y) * w + static_cast<std::size_t>(x)) * 3;
          pixels[at] = pixels[at + 1] = pixels[at + 2] = 0;
        }
      }
    }
  }

  std::string out = "P6\n# schottky_lab limit set depth=" + std::to_string(sample.depth) +
                    " discs=" + std::to_string(sample.discs.size()) + "\n" +
                    std::to_string(w) + " " + std::to_string(h) + "\n255\n";
  out.append(reinterpret_cast<const char*>(pixels.data()), pixels.size());
  return out;
}

}  // namespace

ImageFormat parse_image_format(std::string_view name) {
  if (name == "svg") return ImageFormat::Svg;
  if (name == "ppm") return ImageFormat::Ppm;
  throw SchottkyError(ErrorCode::UnsupportedFormat, "unknown image format '" + std::string(name) + "'");
}

std::string render_limit_set(const LimitSetSample& sample, ImageFormat format,
                             const RenderOptions& options) {
  if (sample.discs.empty()) throw SchottkyError(ErrorCode::InvalidArgument, "empty sample");
  if (options.width < 1 || options.height < 1) {
    throw SchottkyError(ErrorCode::InvalidArgument, "image size must be positive");
  }
  switch (format) {
    case ImageFormat::Svg: return render_svg(sample, options);
    case ImageFormat::Ppm: return render_ppm(sample, options);
  }
  throw SchottkyError(ErrorCode::UnsupportedFormat, "unknown image format");
}

}  // namespace schottky_lab
