#pragma once

// Literal deformation lists of the global braids for 7 + 7 points, as
// produced by the reference computation. Used to cross-check the formulas.

#include "ecm/braid_words.hpp"

namespace ecm::testing {

inline const TupleDeformation& alpha_hat_reference() {
  static const TupleDeformation t = {
    {{14, -1}, {13, -1}, {12, -1}, {11, -1}, {10, -1}, {9, -1}, {8, -1}, {1, 1}, {8, 1}, {9, 1}, {10, 1}, {11, 1}, {12, 1}, {13, 1}, {14, 1}},
    {{14, -1}, {13, -1}, {12, -1}, {11, -1}, {10, -1}, {9, -1}, {8, -1}, {2, 1}, {8, 1}, {9, 1}, {10, 1}, {11, 1}, {12, 1}, {13, 1}, {14, 1}},
    {{14, -1}, {13, -1}, {12, -1}, {11, -1}, {10, -1}, {9, -1}, {8, -1}, {3, 1}, {8, 1}, {9, 1}, {10, 1}, {11, 1}, {12, 1}, {13, 1}, {14, 1}},
    {{14, -1}, {13, -1}, {12, -1}, {11, -1}, {10, -1}, {9, -1}, {8, -1}, {4, 1}, {8, 1}, {9, 1}, {10, 1}, {11, 1}, {12, 1}, {13, 1}, {14, 1}},
    {{14, -1}, {13, -1}, {12, -1}, {11, -1}, {10, -1}, {9, -1}, {8, -1}, {5, 1}, {8, 1}, {9, 1}, {10, 1}, {11, 1}, {12, 1}, {13, 1}, {14, 1}},
    {{14, -1}, {13, -1}, {12, -1}, {11, -1}, {10, -1}, {9, -1}, {8, -1}, {6, 1}, {8, 1}, {9, 1}, {10, 1}, {11, 1}, {12, 1}, {13, 1}, {14, 1}},
    {{14, -1}, {13, -1}, {12, -1}, {11, -1}, {10, -1}, {9, -1}, {8, -1}, {7, 1}, {8, 1}, {9, 1}, {10, 1}, {11, 1}, {12, 1}, {13, 1}, {14, 1}},
    {{15, 1}, {8, 1}, {15, -1}},
    {{15, 1}, {9, 1}, {15, -1}},
    {{15, 1}, {10, 1}, {15, -1}},
    {{15, 1}, {11, 1}, {15, -1}},
    {{15, 1}, {12, 1}, {15, -1}},
    {{15, 1}, {13, 1}, {15, -1}},
    {{15, 1}, {14, 1}, {15, -1}},
    {{15, 1}},
    {{14, -1}, {13, -1}, {12, -1}, {11, -1}, {10, -1}, {9, -1}, {8, -1}, {16, 1}}};
  return t;
}

inline const TupleDeformation& beta_hat_reference() {
  static const TupleDeformation t = {
    {{16, 1}, {8, 1}, {9, 1}, {10, 1}, {11, 1}, {12, 1}, {13, 1}, {14, 1}, {16, -1}, {1, 1}, {16, 1}, {14, -1}, {13, -1}, {12, -1}, {11, -1}, {10, -1}, {9, -1}, {8, -1}, {16, -1}},
    {{16, 1}, {8, 1}, {9, 1}, {10, 1}, {11, 1}, {12, 1}, {13, 1}, {14, 1}, {16, -1}, {2, 1}, {16, 1}, {14, -1}, {13, -1}, {12, -1}, {11, -1}, {10, -1}, {9, -1}, {8, -1}, {16, -1}},
    {{16, 1}, {8, 1}, {9, 1}, {10, 1}, {11, 1}, {12, 1}, {13, 1}, {14, 1}, {16, -1}, {3, 1}, {16, 1}, {14, -1}, {13, -1}, {12, -1}, {11, -1}, {10, -1}, {9, -1}, {8, -1}, {16, -1}},
    {{16, 1}, {8, 1}, {9, 1}, {10, 1}, {11, 1}, {12, 1}, {13, 1}, {14, 1}, {16, -1}, {4, 1}, {16, 1}, {14, -1}, {13, -1}, {12, -1}, {11, -1}, {10, -1}, {9, -1}, {8, -1}, {16, -1}},
    {{16, 1}, {8, 1}, {9, 1}, {10, 1}, {11, 1}, {12, 1}, {13, 1}, {14, 1}, {16, -1}, {5, 1}, {16, 1}, {14, -1}, {13, -1}, {12, -1}, {11, -1}, {10, -1}, {9, -1}, {8, -1}, {16, -1}},
    {{16, 1}, {8, 1}, {9, 1}, {10, 1}, {11, 1}, {12, 1}, {13, 1}, {14, 1}, {16, -1}, {6, 1}, {16, 1}, {14, -1}, {13, -1}, {12, -1}, {11, -1}, {10, -1}, {9, -1}, {8, -1}, {16, -1}},
    {{16, 1}, {8, 1}, {9, 1}, {10, 1}, {11, 1}, {12, 1}, {13, 1}, {14, 1}, {16, -1}, {7, 1}, {16, 1}, {14, -1}, {13, -1}, {12, -1}, {11, -1}, {10, -1}, {9, -1}, {8, -1}, {16, -1}},
    {{16, 1}, {8, 1}, {16, -1}},
    {{16, 1}, {9, 1}, {16, -1}},
    {{16, 1}, {10, 1}, {16, -1}},
    {{16, 1}, {11, 1}, {16, -1}},
    {{16, 1}, {12, 1}, {16, -1}},
    {{16, 1}, {13, 1}, {16, -1}},
    {{16, 1}, {14, 1}, {16, -1}},
    {{8, 1}, {9, 1}, {10, 1}, {11, 1}, {12, 1}, {13, 1}, {14, 1}, {15, 1}},
    {{16, 1}}};
  return t;
}

}  // namespace ecm::testing
