#pragma once

#include <string>
#include <vector>

#include "mkp/drawing.hpp"

namespace mkp {

/// Names accepted by load_asset and asset_text ("fig1-pair" expands to fig1-a and fig1-b).
std::vector<std::string> asset_names();

/// Raw mkpd text of a bundled drawing; MKP_ASSET_DIR/<name>.mkpd wins when present.
std::string asset_text(const std::string& name);

/// Throws "unknown-asset".
TopologicalDrawing load_asset(const std::string& name);

/// Both drawings of the fig1 pair, the 2-planar one first.
std::vector<TopologicalDrawing> load_fig1_pair();

}  // namespace mkp
