#include "g2lyap/builtin_datasets.hpp"

namespace g2lyap::detail {

// Monodromy generators of the rank-7, weight-2 variation over the
// four-punctured sphere. Integer entries; do not edit without updating the
// pinned checksum in monodromy_dataset.cpp.
const std::string kG2EllipticSurfaceJson = R"({
  "name": "g2-elliptic-surface",
  "dim": 7,
  "generators": [
    {
      "label": "M_plus",
      "rows": [
        [1, 0, 1, 0, 0, 0, 0],
        [0, 1, 0, 1, 0, 0, 0],
        [0, 0, 1, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 0, 0],
        [0, 0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 0, 1]
      ]
    },
    {
      "label": "M_minus",
      "rows": [
        [1, 0, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0, 0],
        [-1, 0, 1, 0, 0, 0, 0],
        [0, -1, 0, 1, 0, 0, 0],
        [0, 0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 0, 1]
      ]
    },
    {
      "label": "M_0",
      "rows": [
        [1, 2, -2, -2, 2, -1, -2],
        [-2, -3, 6, 2, -4, 3, 6],
        [2, 6, -3, -2, 6, -3, -4],
        [-2, -2, 2, 1, -2, 1, 2],
        [0, 0, -4, 0, 1, -2, -4],
        [-4, -4, 4, 4, -4, 1, 4],
        [0, -4, 0, 0, -4, 2, 1]
      ]
    },
    {
      "label": "M_inf",
      "rows": [
        [0, -4, 1, 0, -4, 2, 2],
        [4, 0, 4, 1, -2, 2, 4],
        [-1, 4, -3, -2, 6, -3, -4],
        [0, -1, 2, 1, -2, 1, 2],
        [-4, 0, -4, 0, 1, -2, -4],
        [0, 0, 4, 4, -4, 1, 4],
        [0, -4, 0, 0, -4, 2, 1]
      ]
    }
  ],
  "metadata": {
    "genus": 0,
    "punctures": 4,
    "hodge_numbers": [2, 3, 2]
  }
})";

// Two unipotent generators of a rank-2, weight-1 local system; engine
// validation fixture.
const std::string kSl2SanityJson = R"({
  "name": "sl2-sanity",
  "dim": 2,
  "generators": [
    {
      "label": "L",
      "rows": [
        [1, 2],
        [0, 1]
      ]
    },
    {
      "label": "R",
      "rows": [
        [1, 0],
        [2, 1]
      ]
    }
  ],
  "metadata": {
    "genus": 0,
    "punctures": 3,
    "hodge_numbers": [1, 1]
  }
})";

}  // namespace g2lyap::detail
