#pragma once

#include <optional>
#include <string>
#include <vector>

#include "greenseq/quiver.hpp"

namespace greenseq {

/* On-disk quiver description; e is optional explicit Euler data. */
struct QuiverFile {
    QuiverSpec spec;
    std::optional<Mat> e;
};

/*
 * Built-in quivers.  Arrows are read off b0 by "b0_ij > 0 means arrows j -> i":
 *   A(n)        linear quiver 1 -> 2 -> ... -> n
 *   C2-paper    d = (2,1), b0 = [[0,-1],[2,0]]
 *   B2          d = (1,2), b0 = [[0,-2],[1,0]]
 *   G2          d = (3,1), b0 = [[0,-1],[3,0]]
 *   kronecker   d = (1,1), b0 = [[0,2],[-2,0]]
 *   Atilde(p,q) cycle on p+q vertices, p arrows clockwise and q against
 */
QuiverFile preset(const std::string& name);

std::vector<std::string> preset_names();

}  // namespace greenseq
