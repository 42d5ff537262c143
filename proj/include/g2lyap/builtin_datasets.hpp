#pragma once

#include <string>

namespace g2lyap::detail {

extern const std::string kG2EllipticSurfaceJson;
extern const std::string kSl2SanityJson;

}  // namespace g2lyap::detail
