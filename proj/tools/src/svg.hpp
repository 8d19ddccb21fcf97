#pragma once

#include <cstdint>
#include <string>

#include "cprk/types.hpp"

namespace cprk::tool {

/// Static SVG of the alternating drawing given by `witness`: vertices evenly
/// spaced on a circle (pink/black fill), every edge of K_{m,n} as a straight
/// chord (exactly m*n <line> elements), arc boundaries as tick marks, and a
/// caption with m, n, K and the crossing count.  The layout is presentation
/// only; crossing counts come from the caller.
std::string render_svg(const CompleteBipartiteSpec& spec, const ArcProfile& witness,
                       std::int64_t K, std::int64_t crossings);

}  // namespace cprk::tool
