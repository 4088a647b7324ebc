#include "qrcomp/qr_model.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <numeric>

namespace qrcomp {

namespace {

std::vector<std::size_t> csr_offsets(const std::vector<Edge>& edges, std::size_t n) {
  std::vector<std::size_t> begin(n + 1, 0);
  for (const Edge& e : edges) ++begin[e.from + 1];
  std::partial_sum(begin.begin(), begin.end(), begin.begin());
  return begin;
}

}  // namespace

QRModel::QRModel(std::vector<ComponentSpec> components, std::vector<ModelState> states,
                 std::vector<Edge> failure_edges, std::vector<Edge> suspend_edges)
    : components_(std::move(components)) {
  std::vector<std::string> names;
  std::vector<std::size_t> counts;
  for (const ComponentSpec& c : components_) {
    if (std::find(names.begin(), names.end(), c.name) != names.end()) {
      throw ValidationError(fmt::format("component {} appears twice in a model", c.name));
    }
    names.push_back(c.name);
    counts.push_back(c.mode_count());
  }
  layout_ = SlotLayout::make(std::move(names), std::move(counts));

  const std::size_t n = states.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return canonical_less(states[a].config, states[b].config);
  });
  std::vector<std::size_t> new_index(n);
  states_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    new_index[order[i]] = i;
    states_.push_back(std::move(states[order[i]]));
  }
  index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!layout_.is_valid(states_[i].config)) {
      throw ValidationError(fmt::format("invalid configuration {}", states_[i].config.str()));
    }
    if (!index_.emplace(states_[i].config.str(), i).second) {
      throw ValidationError(fmt::format("duplicate configuration {}", states_[i].config.str()));
    }
  }
  if (n == 0 || !(states_[0].config == layout_.initial())) {
    throw ValidationError("model lacks its initial state");
  }

  auto remap = [&](std::vector<Edge>& edges) {
    for (Edge& e : edges) {
      if (e.from >= n || e.to >= n) throw ValidationError("edge refers to a missing state");
      e = Edge{new_index[e.from], new_index[e.to]};
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  };
  remap(failure_edges);
  remap(suspend_edges);
  failure_edges_ = std::move(failure_edges);
  suspend_edges_ = std::move(suspend_edges);
  failure_begin_ = csr_offsets(failure_edges_, n);
  suspend_begin_ = csr_offsets(suspend_edges_, n);
}

std::vector<VarId> QRModel::variables() const {
  std::vector<VarId> out;
  for (const ComponentSpec& c : components_) {
    for (std::size_t k = 1; k <= c.mode_count(); ++k) out.push_back(VarId{c.name, k});
  }
  return out;
}

Assignment QRModel::assignment() const {
  Assignment a;
  for (const ComponentSpec& c : components_) {
    for (std::size_t k = 0; k < c.mode_count(); ++k) {
      a.emplace(VarId{c.name, k + 1}, c.mode_reliabilities[k]);
    }
  }
  return a;
}

std::optional<std::size_t> QRModel::find(const Configuration& c) const { return find(c.str()); }

std::optional<std::size_t> QRModel::find(const std::string& config) const {
  auto it = index_.find(config);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Successor> QRModel::successors(std::size_t state) const {
  std::vector<Successor> out;
  const Configuration& from = states_.at(state).config;
  for (std::size_t i = failure_begin_[state]; i < failure_begin_[state + 1]; ++i) {
    const std::size_t to = failure_edges_[i].to;
    out.push_back({to, TransitionKind::Failure, changed_component(layout_, from, states_[to].config)});
  }
  for (std::size_t i = suspend_begin_[state]; i < suspend_begin_[state + 1]; ++i) {
    const std::size_t to = suspend_edges_[i].to;
    out.push_back({to, TransitionKind::Suspend, changed_component(layout_, from, states_[to].config)});
  }
  return out;
}

std::size_t changed_component(const SlotLayout& layout, const Configuration& a,
                              const Configuration& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return layout.component_of_slot(i);
  }
  throw ValidationError(fmt::format("configurations {} and {} do not differ", a.str(), b.str()));
}

}  // namespace qrcomp
