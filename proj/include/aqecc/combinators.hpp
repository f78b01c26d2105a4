#pragma once

#include "aqecc/lincode.hpp"

namespace aqecc {

/// Delete coordinate i. Coordinates are 0-indexed.
LinearCode puncture(const LinearCode& c, std::size_t i);
/// Keep codewords with coordinate i zero, then delete coordinate i.
LinearCode shorten(const LinearCode& c, std::size_t i);
/// Append the parity coordinate x_n = -(x_0 + ... + x_{n-1}).
LinearCode extend(const LinearCode& c);
/// Block-diagonal juxtaposition [n1+n2, k1+k2, min{d1, d2}].
LinearCode direct_sum(const LinearCode& a, const LinearCode& b);
/// (u | u+v) construction: [2n, k1+k2, min{2 d1, d2}].
LinearCode uuv(const LinearCode& c1, const LinearCode& c2);

}  // namespace aqecc
