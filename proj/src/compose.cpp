#include "qrcomp/compose.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>

#include "qrcomp/characterize.hpp"

namespace qrcomp {

QualityMap chain_quality_maps(const QualityMap& upstream, const QualityMap& downstream) {
  std::vector<QualityPair> pairs;
  pairs.reserve(upstream.size());
  for (const QualityPair& p : upstream.pairs()) {
    pairs.push_back({p.level, downstream.lookup(p.value)});
  }
  return canonicalize_quality_map(std::move(pairs));
}

QualityMap merge_parallel_maps(const QualityMap& a, const QualityMap& b, ParallelPolicy policy) {
  if (policy == ParallelPolicy::Ordered) return a.empty() ? b : a;
  std::vector<QualityPair> pairs;
  pairs.reserve(a.size() + b.size());
  for (const QualityMap* m : {&a, &b}) {
    for (const QualityPair& p : m->pairs()) {
      pairs.push_back({p.level, std::max(a.lookup(p.level), b.lookup(p.level))});
    }
  }
  return canonicalize_quality_map(std::move(pairs));
}

namespace {

using Combiner = std::function<QualityMap(const QualityMap&, const QualityMap&)>;

std::string shared_key(const QRModel& m, std::size_t state, const std::vector<std::size_t>& comps) {
  std::string key;
  const Configuration& c = m.state(state).config;
  for (std::size_t i : comps) {
    for (ModeStatus s : m.layout().segment(c, i)) key.push_back(status_symbol(s));
    key.push_back('|');
  }
  return key;
}

QRModel compose_models(const QRModel& left, const QRModel& right, const Combiner& combine) {
  const SlotLayout& ll = left.layout();
  const SlotLayout& rl = right.layout();

  std::vector<std::size_t> shared_left;
  std::vector<std::size_t> shared_right;
  std::vector<std::size_t> right_only;
  std::vector<std::optional<std::size_t>> right_to_left(rl.size());
  for (std::size_t j = 0; j < rl.size(); ++j) {
    if (auto i = ll.index_of(rl.components[j])) {
      if (ll.mode_counts[*i] != rl.mode_counts[j]) {
        throw ValidationError(
            fmt::format("component {} has different mode counts in the two models", rl.components[j]));
      }
      shared_left.push_back(*i);
      shared_right.push_back(j);
      right_to_left[j] = *i;
    } else {
      right_only.push_back(j);
    }
  }

  std::vector<ComponentSpec> components = left.components();
  for (std::size_t j : right_only) components.push_back(right.components()[j]);

  std::unordered_map<std::string, std::vector<std::size_t>> right_groups;
  for (std::size_t b = 0; b < right.size(); ++b) {
    right_groups[shared_key(right, b, shared_right)].push_back(b);
  }

  const std::size_t nr = right.size();
  std::unordered_map<std::size_t, std::size_t> pair_index;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<ModelState> states;
  for (std::size_t a = 0; a < left.size(); ++a) {
    auto it = right_groups.find(shared_key(left, a, shared_left));
    if (it == right_groups.end()) continue;
    const ModelState& sa = left.state(a);
    for (std::size_t b : it->second) {
      const ModelState& sb = right.state(b);
      std::vector<ModeStatus> slots(sa.config.slots().begin(), sa.config.slots().end());
      for (std::size_t j : right_only) {
        Segment seg = rl.segment(sb.config, j);
        slots.insert(slots.end(), seg.begin(), seg.end());
      }
      pair_index.emplace(a * nr + b, states.size());
      pairs.emplace_back(a, b);
      states.push_back({Configuration(std::move(slots)), combine(sa.quality, sb.quality),
                        sa.expr * sb.expr});
    }
  }

  std::vector<std::vector<Successor>> left_succ(left.size());
  std::vector<std::vector<Successor>> right_succ(right.size());
  for (std::size_t a = 0; a < left.size(); ++a) left_succ[a] = left.successors(a);
  for (std::size_t b = 0; b < right.size(); ++b) right_succ[b] = right.successors(b);

  std::vector<bool> left_shared(ll.size(), false);
  for (std::size_t i : shared_left) left_shared[i] = true;

  std::vector<Edge> failures;
  std::vector<Edge> suspends;
  auto add = [&](std::size_t from, std::size_t a2, std::size_t b2, TransitionKind kind) {
    auto it = pair_index.find(a2 * nr + b2);
    if (it == pair_index.end()) {
      throw ValidationError("composition produced a transition to an inconsistent state");
    }
    (kind == TransitionKind::Failure ? failures : suspends).push_back(Edge{from, it->second});
  };
  for (std::size_t s = 0; s < pairs.size(); ++s) {
    const auto [a, b] = pairs[s];
    for (const Successor& m : left_succ[a]) {
      if (!left_shared[m.component]) {
        add(s, m.to, b, m.kind);
        continue;
      }
      const std::string& name = ll.components[m.component];
      const std::size_t j = *rl.index_of(name);
      for (const Successor& r : right_succ[b]) {
        if (r.component == j && r.kind == m.kind) add(s, m.to, r.to, m.kind);
      }
    }
    for (const Successor& r : right_succ[b]) {
      if (!right_to_left[r.component]) add(s, a, r.to, r.kind);
    }
  }
  return QRModel(std::move(components), std::move(states), std::move(failures), std::move(suspends));
}

}  // namespace

QRModel compose_series(const QRModel& left, const QRModel& right) {
  return compose_models(left, right, chain_quality_maps);
}

QRModel compose_parallel(const QRModel& left, const QRModel& right, ParallelPolicy policy) {
  return compose_models(left, right, [policy](const QualityMap& a, const QualityMap& b) {
    return merge_parallel_maps(a, b, policy);
  });
}

QRModel build_system_model(const SystemGraph& graph, const std::vector<ComponentSpec>& specs,
                           ParallelPolicy policy) {
  std::map<std::string, QRModel> cache;
  auto component_model = [&](const std::string& name) -> const QRModel& {
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;
    const ComponentSpec* spec = find_spec(specs, name);
    if (!spec) throw ValidationError(fmt::format("no specification for component {}", name));
    return cache.emplace(name, build_component_model(*spec)).first->second;
  };

  std::optional<QRModel> system;
  for (const auto& path : graph.component_paths()) {
    if (path.empty()) throw ValidationError("empty input-to-output path");
    QRModel chain = component_model(path.front());
    for (std::size_t i = 1; i < path.size(); ++i) {
      chain = compose_series(chain, component_model(path[i]));
    }
    system = system ? compose_parallel(*system, chain, policy) : std::move(chain);
  }
  if (!system) throw ValidationError("no input-to-output path");
  return reorder_components(*system, graph.components());
}

QRModel build_system_model(const SystemGraph& graph, const std::vector<ComponentSpec>& specs) {
  return build_system_model(graph, specs, graph.policy());
}

QRModel reorder_components(const QRModel& model, const std::vector<std::string>& order) {
  const SlotLayout& from = model.layout();
  std::vector<std::size_t> source;
  for (const std::string& name : order) {
    auto i = from.index_of(name);
    if (!i) throw ValidationError(fmt::format("component {} is not part of the model", name));
    source.push_back(*i);
  }
  std::vector<std::size_t> sorted = source;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.size() != from.size() || std::unique(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ValidationError("component order is not a permutation of the model's components");
  }
  bool identity = true;
  for (std::size_t i = 0; i < source.size(); ++i) identity = identity && source[i] == i;
  if (identity) return model;

  std::vector<ComponentSpec> components;
  for (std::size_t i : source) components.push_back(model.components()[i]);
  std::vector<ModelState> states;
  states.reserve(model.size());
  for (const ModelState& s : model.states()) {
    std::vector<ModeStatus> slots;
    slots.reserve(from.width);
    for (std::size_t i : source) {
      Segment seg = from.segment(s.config, i);
      slots.insert(slots.end(), seg.begin(), seg.end());
    }
    states.push_back({Configuration(std::move(slots)), s.quality, s.expr});
  }
  return QRModel(std::move(components), std::move(states), model.failure_edges(),
                 model.suspend_edges());
}

bool models_equivalent(const QRModel& a, const QRModel& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::string> names = a.layout().components;
  std::sort(names.begin(), names.end());
  std::vector<std::string> other = b.layout().components;
  std::sort(other.begin(), other.end());
  if (names != other) return false;

  const QRModel ca = reorder_components(a, names);
  const QRModel cb = reorder_components(b, names);
  if (!(ca.layout() == cb.layout())) return false;
  for (std::size_t i = 0; i < ca.size(); ++i) {
    const ModelState& x = ca.state(i);
    const ModelState& y = cb.state(i);
    if (!(x.config == y.config) || !(x.quality == y.quality) || !(x.expr == y.expr)) return false;
  }
  return ca.failure_edges() == cb.failure_edges() && ca.suspend_edges() == cb.suspend_edges();
}

}  // namespace qrcomp
