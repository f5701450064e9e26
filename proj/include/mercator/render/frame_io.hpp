#pragma once

#include <iosfwd>

#include "mercator/render/trace.hpp"

namespace mercator::render {

/// SVG in a [-1,1]^2 viewBox (image up is SVG -y), one polyline per chain,
/// with a leading `<!-- v=... psi_tilde=... T=... phi_predicted=... -->`
/// comment. The overlay, if given, is drawn as a second group.
void write_svg(std::ostream& out, const Frame& frame, const Frame* overlay = nullptr);

/// Binary P6, 8-bit: black background, frame in white, overlay (if any) in
/// the green channel only.
void write_ppm(std::ostream& out, const Frame& frame, int width, int height,
               const Frame* overlay = nullptr);

}  // namespace mercator::render
