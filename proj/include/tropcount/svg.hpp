#ifndef TROPCOUNT_SVG_HPP
#define TROPCOUNT_SVG_HPP

#include <string>

#include "tropcount/curve.hpp"

namespace tropcount {

struct RenderOptions {
    int canvas = 640;           // square canvas edge in px
    bool newton_inset = true;   // draw the dual subdivision in a corner
    bool label_weights = true;  // annotate edges of weight >= 2
};

// Static SVG for one curve: edges with weight labels, markings, special
// features highlighted, optional subdivision inset. Byte-stable for fixed
// input and options.
std::string render_svg(const TropicalCurve& curve, const RenderOptions& options = {});

} // namespace tropcount

#endif
