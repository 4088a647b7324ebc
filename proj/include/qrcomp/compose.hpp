#pragma once

#include <string>
#include <vector>

#include "qrcomp/qr_model.hpp"

namespace qrcomp {

// Output of upstream feeds downstream: for each upstream level l the result
// is downstream.lookup(upstream.lookup(l)).
QualityMap chain_quality_maps(const QualityMap& upstream, const QualityMap& downstream);

// MAX takes the larger output at every level of either map. ORDERED uses the
// preferred (left) branch whenever it is live and falls back to the right one.
QualityMap merge_parallel_maps(const QualityMap& a, const QualityMap& b, ParallelPolicy policy);

// Both compositions keep only state pairs that agree on every shared
// component, and move a shared component in both halves at once.
QRModel compose_series(const QRModel& left, const QRModel& right);
QRModel compose_parallel(const QRModel& left, const QRModel& right, ParallelPolicy policy);

// Folds each input-to-output path with series composition, then the paths
// with parallel composition, and lays components out in the graph's order.
QRModel build_system_model(const SystemGraph& graph, const std::vector<ComponentSpec>& specs,
                           ParallelPolicy policy);
QRModel build_system_model(const SystemGraph& graph, const std::vector<ComponentSpec>& specs);

// `order` must be a permutation of the model's component names.
QRModel reorder_components(const QRModel& model, const std::vector<std::string>& order);

bool models_equivalent(const QRModel& a, const QRModel& b);

}  // namespace qrcomp
