#pragma once

#include <string>

#include "tautilt/quiver.hpp"

namespace tautilt {

// Plain-text quiver format:
//
//   vertices 4
//   arrow 1 1 2
//   arrow 2 1 3
//   arrow 3 2 4
//   arrow 4 3 4
//   rel 1*1.3 - 1*2.4
//
// Vertices and arrow ids are 1-based.  A relation line is a signed sum of
// coefficient*path terms; paths are dot-separated arrow ids, coefficients
// are integers or fractions a/b.  emit(parse(emit(x))) == emit(x) holds
// byte for byte, and parse(emit(x)) reproduces x exactly.
std::string emit_quiver_text(const BoundQuiver& bq);
BoundQuiver parse_quiver_text(const std::string& text);

}  // namespace tautilt
