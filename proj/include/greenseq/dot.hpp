#pragma once

#include <string>

#include "greenseq/search.hpp"
#include "greenseq/tame.hpp"

namespace greenseq {

/*
 * Render an exchange graph as a DOT digraph.  Nodes are labeled with the
 * canonical C matrix row-major; edges with the mutation index.  When Euler
 * and tame data are supplied, regular-cluster nodes are tagged with
 * regular="yes" (and doubled peripheries for viewers).
 */
std::string to_dot(const ExchangeGraph& g, const EulerData* ed = nullptr,
                   const TameData* td = nullptr);

}  // namespace greenseq
