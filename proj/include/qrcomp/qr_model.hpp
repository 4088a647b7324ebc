#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qrcomp/model_core.hpp"
#include "qrcomp/rel_algebra.hpp"

namespace qrcomp {

enum class TransitionKind { Failure, Suspend };

struct ModelState {
  Configuration config;
  QualityMap quality;
  RelExpr expr;
};

struct Edge {
  std::size_t from = 0;
  std::size_t to = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Successor {
  std::size_t to = 0;
  TransitionKind kind = TransitionKind::Failure;
  std::size_t component = 0;  // index into the layout
};

// Immutable state-transition model. The constructor puts states into
// canonical order (see canonical_less), so the initial state is index 0.
class QRModel {
 public:
  QRModel(std::vector<ComponentSpec> components, std::vector<ModelState> states,
          std::vector<Edge> failure_edges, std::vector<Edge> suspend_edges);

  const std::vector<ComponentSpec>& components() const noexcept { return components_; }
  const SlotLayout& layout() const noexcept { return layout_; }
  std::vector<VarId> variables() const;
  Assignment assignment() const;  // each variable bound to its mode reliability

  const std::vector<ModelState>& states() const noexcept { return states_; }
  const ModelState& state(std::size_t i) const { return states_.at(i); }
  std::size_t size() const noexcept { return states_.size(); }
  std::size_t initial_state() const noexcept { return 0; }

  const std::vector<Edge>& failure_edges() const noexcept { return failure_edges_; }
  const std::vector<Edge>& suspend_edges() const noexcept { return suspend_edges_; }

  std::optional<std::size_t> find(const Configuration& c) const;
  std::optional<std::size_t> find(const std::string& config) const;

  // Outgoing transitions, failures first, each group by target index.
  std::vector<Successor> successors(std::size_t state) const;

 private:
  std::vector<ComponentSpec> components_;
  SlotLayout layout_;
  std::vector<ModelState> states_;
  std::vector<Edge> failure_edges_;
  std::vector<Edge> suspend_edges_;
  std::vector<std::size_t> failure_begin_;  // CSR offsets into failure_edges_
  std::vector<std::size_t> suspend_begin_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Index of the component whose segment differs between two configurations
// that differ in exactly one component.
std::size_t changed_component(const SlotLayout& layout, const Configuration& a,
                              const Configuration& b);

}  // namespace qrcomp
