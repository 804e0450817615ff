#pragma once

#include <string>

#include "schroder/path.hpp"

namespace schroder {

// ASCII picture of the path on an n-by-n grid, one character per lattice
// unit, highest row first. '/' marks a diagonal step, '|' an n step on the
// cell's left edge, '_' an e step on its top edge, '.' the main diagonal.
// Stable across runs; the exact glyphs are non-contractual art.
std::string render_path(const SchroderPath& p);

}  // namespace schroder
