#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qrcomp/qr_model.hpp"

namespace qrcomp {

// States reachable from the initial state by failure edges, without
// suspend edges.
QRModel abstract_failure_model(const QRModel& model);

ModeTuple mode_tuple(const Configuration& config, const SlotLayout& layout);

// Symbolic form: path success over the current-mode variables, with paths
// through a dead component dropped.
RelExpr structural_reliability_expr(const SystemGraph& graph, const SlotLayout& layout,
                                    const Configuration& config);

double structural_reliability(const SystemGraph& graph, const std::vector<ComponentSpec>& specs,
                              const SlotLayout& layout, const Configuration& config);

SystemQRSpec emit_system_qrspec(const SystemGraph& graph, const std::vector<ComponentSpec>& specs,
                                const QRModel& model);

enum class ModeVerdict { Matched, Mismatched, MissingFromGiven, MissingFromDerived };

std::string_view verdict_name(ModeVerdict v);

struct ModeComparison {
  ModeTuple modes;
  ModeVerdict verdict = ModeVerdict::Matched;
  std::optional<double> derived_reliability;
  std::optional<double> given_reliability;
  std::optional<QualityMap> derived_quality;
  std::optional<QualityMap> given_quality;
  std::string detail;
};

struct ConformanceReport {
  bool components_match = true;
  std::vector<std::string> components;  // derived order
  std::vector<std::string> given_components;
  std::vector<ModeComparison> modes;

  bool passed() const;
  std::size_t matched() const;
  std::string summary() const;  // "PASS, 6/6 modes matched"
};

// Compares mode by mode: reliabilities within `tolerance`, quality maps
// exactly. The given spec may list components in another order.
ConformanceReport check_conformance(const SystemQRSpec& derived, const SystemQRSpec& given,
                                    double tolerance = 1e-9);

}  // namespace qrcomp
