#pragma once

#include <string>

#include "hiveflow/flow.hpp"

namespace hiveflow {

// Deterministic SVG picture of a flow on the triangular lattice: every edge
// is labeled with its magnitude and carries an arrowhead in the direction
// the value flows, and the diagonal of every rhombus with positive slack is
// drawn thick.
std::string render_flow_svg(const Lattice& L, const FlowClass& f);

} // namespace hiveflow
