#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qrcomp/qr_model.hpp"

namespace qrcomp {

// All valid segments of length d, live ones first.
std::vector<std::vector<ModeStatus>> enumerate_segments(std::size_t d);

QRModel build_component_model(const ComponentSpec& spec);

// Product over slots: r for OPERATING, (1-r) for FAILED, 1 otherwise.
RelExpr state_expr(const Configuration& config, const SlotLayout& layout);

// Factored rendering in slot order, e.g. "(1-r_{3,1}).r_{3,2}.r_{2,1}".
std::string render_state_expr(const Configuration& config, const SlotLayout& layout);

}  // namespace qrcomp
