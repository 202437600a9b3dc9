#pragma once

#include <string>

#include "parade/simulator.hpp"

namespace parade {

// One SVG frame: obstacles, route instance points (uncovered points styled
// red), candidate dots, selected guard markers, and sight-lines from each
// guard to the route points it covers. Byte-identical for identical inputs.
std::string render_frame(const Scenario& s, const StepRecord& rec,
                         const RouteInstance& inst, const CandidateSet& cands);

}  // namespace parade
