#pragma once

#include "isolation/graph.hpp"

namespace isolation {

/// Planarity via Boyer-Myrvold, after the |E| <= 3n - 6 prefilter.
bool is_planar(const Graph& g);

}  // namespace isolation
