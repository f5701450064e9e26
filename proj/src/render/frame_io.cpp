#include "mercator/render/frame_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "mercator/format.hpp"

namespace mercator::render {

namespace {

std::string coord(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

void write_chains(std::ostream& out, const Frame& frame, const char* cls, const char* stroke) {
  out << "<g class=\"" << cls << "\" fill=\"none\" stroke=\"" << stroke
      << "\" stroke-width=\"0.005\">\n";
  for (const auto& chain : frame.chains) {
    out << "<polyline points=\"";
    for (std::size_t k = 0; k < chain.size(); ++k) {
      const Vec2 p = frame.projected[chain[k]];
      if (k) out << ' ';
      out << coord(p.x) << ',' << coord(-p.y);
    }
    out << "\"/>\n";
  }
  out << "</g>\n";
}

}  // namespace

void write_svg(std::ostream& out, const Frame& frame, const Frame* overlay) {
  const FrameMetadata& m = frame.metadata;
  out << "<!-- v=" << format_g17(m.v) << " psi_tilde=" << format_g17(m.psi_tilde)
      << " T=" << format_g17(m.observation_time) << " phi_predicted=" << format_g17(m.phi_predicted)
      << " -->\n";
  for (const auto& w : m.warnings) out << "<!-- warning: " << w << " -->\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1 -1 2 2\" width=\"512\" "
         "height=\"512\">\n";
  out << "<rect x=\"-1\" y=\"-1\" width=\"2\" height=\"2\" fill=\"white\"/>\n";
  write_chains(out, frame, "apparent", "black");
  if (overlay) write_chains(out, *overlay, "oracle", "red");
  out << "</svg>\n";
}

namespace {

class Raster {
 public:
  Raster(int width, int height)
      : width_(width), height_(height), pixels_(static_cast<std::size_t>(width) * height * 3, 0) {}

  void draw(const Frame& frame, bool white) {
    const double scale = 0.5 * std::min(width_, height_);
    const auto to_pixel = [&](Vec2 p) {
      return Vec2{0.5 * width_ + p.x * scale, 0.5 * height_ - p.y * scale};
    };
    for (const auto& chain : frame.chains)
      for (std::size_t k = 1; k < chain.size(); ++k)
        segment(to_pixel(frame.projected[chain[k - 1]]), to_pixel(frame.projected[chain[k]]), white);
  }

  void write(std::ostream& out) const {
    out << "P6\n" << width_ << ' ' << height_ << "\n255\n";
    out.write(reinterpret_cast<const char*>(pixels_.data()), static_cast<std::streamsize>(pixels_.size()));
  }

 private:
  void plot(int x, int y, bool white) {
    if (x < 0 || y < 0 || x >= width_ || y >= height_) return;
    std::uint8_t* px = &pixels_[(static_cast<std::size_t>(y) * width_ + x) * 3];
    if (white) {
      px[0] = px[1] = px[2] = 255;
    } else {
      px[1] = 255;
    }
  }

  // Liang-Barsky clip to the image rectangle, then DDA.
  void segment(Vec2 a, Vec2 b, bool white) {
    double t0 = 0, t1 = 1;
    const double dx = b.x - a.x, dy = b.y - a.y;
    const double p[4] = {-dx, dx, -dy, dy};
    const double q[4] = {a.x, width_ - 1 - a.x, a.y, height_ - 1 - a.y};
    for (int k = 0; k < 4; ++k) {
      if (p[k] == 0) {
        if (q[k] < 0) return;
        continue;
      }
      const double r = q[k] / p[k];
      if (p[k] < 0) t0 = std::max(t0, r);
      else t1 = std::min(t1, r);
      if (t0 > t1) return;
    }
    const Vec2 s{a.x + t0 * dx, a.y + t0 * dy};
    const Vec2 e{a.x + t1 * dx, a.y + t1 * dy};
    const int steps = static_cast<int>(std::ceil(std::max(std::fabs(e.x - s.x), std::fabs(e.y - s.y))));
    for (int k = 0; k <= steps; ++k) {
      const double t = steps ? static_cast<double>(k) / steps : 0.0;
      plot(static_cast<int>(std::lround(s.x + t * (e.x - s.x))),
           static_cast<int>(std::lround(s.y + t * (e.y - s.y))), white);
    }
  }

  int width_, height_;
  std::vector<std::uint8_t> pixels_;
};

}  // namespace

void write_ppm(std::ostream& out, const Frame& frame, int width, int height, const Frame* overlay) {
  Raster raster(width, height);
  if (overlay) raster.draw(*overlay, false);
  raster.draw(frame, true);
  raster.write(out);
}

}  // namespace mercator::render
