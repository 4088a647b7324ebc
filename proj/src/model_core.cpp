#include "qrcomp/model_core.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>

#include "qrcomp/rel_algebra.hpp"

namespace qrcomp {

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto head = static_cast<unsigned char>(s[0]);
  if (!(std::isalpha(head) || head == '_')) return false;
  return std::all_of(s.begin() + 1, s.end(), [](char ch) {
    auto c = static_cast<unsigned char>(ch);
    return std::isalnum(c) || c == '_';
  });
}

ComponentSpec validate_component_spec(const RawComponentSpec& raw) {
  if (!is_identifier(raw.name)) {
    throw ValidationError(fmt::format("invalid component name '{}'", raw.name));
  }
  if (raw.reliabilities.empty()) {
    throw ValidationError(fmt::format("component {} has no operating modes", raw.name));
  }
  if (raw.reliabilities.size() != raw.quality.size()) {
    throw ValidationError(fmt::format("component {} declares {} reliabilities but {} quality maps",
                                      raw.name, raw.reliabilities.size(), raw.quality.size()));
  }
  ComponentSpec spec;
  spec.name = raw.name;
  for (std::size_t k = 0; k < raw.reliabilities.size(); ++k) {
    const double z = raw.reliabilities[k];
    if (!(z > 0.0 && z <= 1.0)) {
      throw ValidationError(fmt::format("component {} mode {}: reliability {} outside (0,1]",
                                        raw.name, k + 1, format_number(z)));
    }
    const auto& listed = raw.quality[k];
    for (std::size_t i = 1; i < listed.size(); ++i) {
      if (!(listed[i].level < listed[i - 1].level)) {
        throw ValidationError(fmt::format(
            "component {} mode {}: input levels must be strictly decreasing", raw.name, k + 1));
      }
    }
    try {
      spec.mode_quality.push_back(canonicalize_quality_map(listed));
    } catch (const ValidationError& e) {
      throw ValidationError(fmt::format("component {} mode {}: {}", raw.name, k + 1, e.message()));
    }
    spec.mode_reliabilities.push_back(z);
  }
  return spec;
}

const ComponentSpec* find_spec(const std::vector<ComponentSpec>& specs, std::string_view name) {
  for (const ComponentSpec& s : specs) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

// ---- statuses and segments ------------------------------------------------------

char status_symbol(ModeStatus s) { return static_cast<char>(s); }

std::optional<ModeStatus> status_from_symbol(char c) {
  switch (c) {
    case '1': return ModeStatus::Operating;
    case '0': return ModeStatus::Failed;
    case 'X': return ModeStatus::NotAvailed;
    case 'Y': return ModeStatus::Suspended;
    default: return std::nullopt;
  }
}

std::string_view status_code(ModeStatus s) {
  switch (s) {
    case ModeStatus::Operating: return "OP";
    case ModeStatus::Failed: return "FL";
    case ModeStatus::NotAvailed: return "NA";
    case ModeStatus::Suspended: return "SU";
  }
  return "??";
}

namespace {

bool is_down(ModeStatus s) { return s == ModeStatus::Failed || s == ModeStatus::Suspended; }

int status_rank(ModeStatus s) {
  switch (s) {
    case ModeStatus::Operating: return 0;
    case ModeStatus::Failed: return 1;
    case ModeStatus::Suspended: return 2;
    case ModeStatus::NotAvailed: return 3;
  }
  return 4;
}

}  // namespace

bool is_valid_segment(Segment seg) {
  if (seg.empty()) return false;
  std::size_t i = 0;
  while (i < seg.size() && is_down(seg[i])) ++i;
  if (i == seg.size()) return true;
  if (seg[i] != ModeStatus::Operating) return false;
  for (++i; i < seg.size(); ++i) {
    if (seg[i] != ModeStatus::NotAvailed) return false;
  }
  return true;
}

std::optional<std::size_t> operating_mode(Segment seg) {
  for (std::size_t i = 0; i < seg.size(); ++i) {
    if (seg[i] == ModeStatus::Operating) return i + 1;
  }
  return std::nullopt;
}

bool is_dead(Segment seg) { return !operating_mode(seg).has_value(); }

bool is_all_failed(Segment seg) {
  return std::all_of(seg.begin(), seg.end(), [](ModeStatus s) { return s == ModeStatus::Failed; });
}

// ---- configurations ---------------------------------------------------------------

Configuration Configuration::parse(std::string_view symbols) {
  std::vector<ModeStatus> slots;
  slots.reserve(symbols.size());
  for (char c : symbols) {
    auto s = status_from_symbol(c);
    if (!s) throw ValidationError(fmt::format("invalid mode status symbol '{}'", c));
    slots.push_back(*s);
  }
  return Configuration(std::move(slots));
}

std::string Configuration::str() const {
  std::string out;
  out.reserve(slots_.size());
  for (ModeStatus s : slots_) out.push_back(status_symbol(s));
  return out;
}

std::size_t Configuration::depth() const {
  return static_cast<std::size_t>(std::count_if(slots_.begin(), slots_.end(), is_down));
}

bool canonical_less(const Configuration& a, const Configuration& b) {
  const std::size_t da = a.depth();
  const std::size_t db = b.depth();
  if (da != db) return da < db;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int ra = status_rank(a[i]);
    const int rb = status_rank(b[i]);
    if (ra != rb) return ra < rb;
  }
  return a.size() < b.size();
}

SlotLayout SlotLayout::make(std::vector<std::string> names, std::vector<std::size_t> counts) {
  SlotLayout layout;
  layout.components = std::move(names);
  layout.mode_counts = std::move(counts);
  for (std::size_t d : layout.mode_counts) {
    layout.offsets.push_back(layout.width);
    layout.width += d;
  }
  return layout;
}

std::optional<std::size_t> SlotLayout::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t SlotLayout::component_of_slot(std::size_t slot) const {
  auto it = std::upper_bound(offsets.begin(), offsets.end(), slot);
  return static_cast<std::size_t>(it - offsets.begin()) - 1;
}

Segment SlotLayout::segment(const Configuration& c, std::size_t component) const {
  return c.slots().subspan(offsets[component], mode_counts[component]);
}

bool SlotLayout::is_valid(const Configuration& c) const {
  if (c.size() != width) return false;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (!is_valid_segment(segment(c, i))) return false;
  }
  return true;
}

Configuration SlotLayout::initial() const {
  std::vector<ModeStatus> slots(width, ModeStatus::NotAvailed);
  for (std::size_t off : offsets) slots[off] = ModeStatus::Operating;
  return Configuration(std::move(slots));
}

// ---- system graph ---------------------------------------------------------------------

std::string_view policy_name(ParallelPolicy p) {
  return p == ParallelPolicy::Max ? "max" : "ordered";
}

std::optional<ParallelPolicy> policy_from_name(std::string_view s) {
  if (s == "max") return ParallelPolicy::Max;
  if (s == "ordered") return ParallelPolicy::Ordered;
  return std::nullopt;
}

const std::string& SystemGraph::label(std::string_view vertex) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i] == vertex) return labels_[i];
  }
  throw ValidationError(fmt::format("unknown vertex '{}'", vertex));
}

std::vector<std::vector<std::string>> SystemGraph::component_paths() const {
  std::vector<std::vector<std::string>> out;
  out.reserve(paths_.size());
  for (const auto& p : paths_) {
    std::vector<std::string> names;
    names.reserve(p.size());
    for (const auto& v : p) names.push_back(label(v));
    out.push_back(std::move(names));
  }
  return out;
}

namespace {

constexpr std::size_t kMaxPaths = 100000;

}  // namespace

SystemGraph validate_system_graph(const RawSystemGraph& raw,
                                  const std::optional<std::set<std::string>>& known_components) {
  auto vertex_at = [&](std::size_t i) -> std::optional<SourceLocation> {
    if (i < raw.vertex_locations.size()) return raw.vertex_locations[i];
    return raw.end_location;
  };
  auto edge_at = [&](std::size_t i) -> std::optional<SourceLocation> {
    if (i < raw.edge_locations.size()) return raw.edge_locations[i];
    return raw.end_location;
  };

  if (!raw.input) throw ValidationError("missing input declaration", raw.end_location);
  if (!raw.output) throw ValidationError("missing output declaration", raw.end_location);
  if (*raw.input == *raw.output) {
    throw ValidationError("input and output must be distinct", raw.end_location);
  }
  if (raw.vertices.empty()) throw ValidationError("no vertices declared", raw.end_location);

  SystemGraph g;
  g.input_ = *raw.input;
  g.output_ = *raw.output;
  g.policy_ = raw.policy;

  std::map<std::string, std::size_t> index;  // vertex id -> position
  for (std::size_t i = 0; i < raw.vertices.size(); ++i) {
    const auto& [id, component] = raw.vertices[i];
    if (id == g.input_ || id == g.output_) {
      throw ValidationError(fmt::format("vertex '{}' clashes with a terminal", id), vertex_at(i));
    }
    if (!index.emplace(id, i).second) {
      throw ValidationError(fmt::format("duplicate vertex '{}'", id), vertex_at(i));
    }
    if (component.empty()) {
      throw ValidationError(fmt::format("vertex '{}' has no component label", id), vertex_at(i));
    }
    if (known_components && !known_components->count(component)) {
      throw ValidationError(fmt::format("unknown component label '{}'", component), vertex_at(i));
    }
    g.vertices_.push_back(id);
    g.labels_.push_back(component);
    if (std::find(g.components_.begin(), g.components_.end(), component) == g.components_.end()) {
      g.components_.push_back(component);
    }
  }

  // Node numbering: vertices 0..n-1, input n, output n+1.
  const std::size_t n = raw.vertices.size();
  const std::size_t in_node = n;
  const std::size_t out_node = n + 1;
  auto node_of = [&](const std::string& id) -> std::optional<std::size_t> {
    if (id == g.input_) return in_node;
    if (id == g.output_) return out_node;
    auto it = index.find(id);
    if (it == index.end()) return std::nullopt;
    return it->second;
  };

  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> succ(n + 2);  // (node, edge idx)
  std::vector<std::vector<std::size_t>> pred(n + 2);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t i = 0; i < raw.edges.size(); ++i) {
    const auto& [from, to] = raw.edges[i];
    auto u = node_of(from);
    auto v = node_of(to);
    if (!u) throw ValidationError(fmt::format("edge from undeclared vertex '{}'", from), edge_at(i));
    if (!v) throw ValidationError(fmt::format("edge to undeclared vertex '{}'", to), edge_at(i));
    if (*u == out_node) throw ValidationError("edge leaves the output node", edge_at(i));
    if (*v == in_node) throw ValidationError("edge enters the input node", edge_at(i));
    if (*u == in_node && *v == out_node) {
      throw ValidationError("direct input-to-output edge", edge_at(i));
    }
    if (*u == *v) throw ValidationError(fmt::format("cycle detected at '{}'", from), edge_at(i));
    if (!seen.emplace(*u, *v).second) {
      throw ValidationError(fmt::format("duplicate edge {} -> {}", from, to), edge_at(i));
    }
    succ[*u].emplace_back(*v, i);
    pred[*v].push_back(*u);
    g.edges_.emplace_back(from, to);
  }

  // Cycle check by iterative DFS with colors.
  {
    std::vector<int> color(n + 2, 0);
    for (std::size_t root = 0; root < n + 2; ++root) {
      if (color[root]) continue;
      std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
      color[root] = 1;
      while (!stack.empty()) {
        auto& [node, next] = stack.back();
        if (next < succ[node].size()) {
          auto [child, edge] = succ[node][next++];
          if (color[child] == 1) {
            throw ValidationError(
                fmt::format("cycle detected through '{}'", raw.edges[edge].second), edge_at(edge));
          }
          if (color[child] == 0) {
            color[child] = 1;
            stack.emplace_back(child, 0);
          }
        } else {
          color[node] = 2;
          stack.pop_back();
        }
      }
    }
  }

  std::vector<bool> from_input(n + 2, false);
  std::vector<bool> to_output(n + 2, false);
  {
    std::vector<std::size_t> work{in_node};
    from_input[in_node] = true;
    while (!work.empty()) {
      std::size_t u = work.back();
      work.pop_back();
      for (auto [v, e] : succ[u]) {
        if (!from_input[v]) from_input[v] = true, work.push_back(v);
      }
    }
    work = {out_node};
    to_output[out_node] = true;
    while (!work.empty()) {
      std::size_t v = work.back();
      work.pop_back();
      for (std::size_t u : pred[v]) {
        if (!to_output[u]) to_output[u] = true, work.push_back(u);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!from_input[i] || !to_output[i]) {
      throw ValidationError(fmt::format("dangling vertex '{}' is not on an input-to-output path",
                                        g.vertices_[i]),
                            vertex_at(i));
    }
  }

  // Path enumeration, depth-first in edge declaration order.
  std::vector<std::size_t> current;
  std::function<void(std::size_t)> walk = [&](std::size_t node) {
    for (auto [v, e] : succ[node]) {
      if (v == out_node) {
        if (g.paths_.size() >= kMaxPaths) {
          throw ValidationError(fmt::format("more than {} input-to-output paths", kMaxPaths),
                                raw.end_location);
        }
        std::vector<std::string> path;
        path.reserve(current.size());
        for (std::size_t x : current) path.push_back(g.vertices_[x]);
        g.paths_.push_back(std::move(path));
      } else {
        current.push_back(v);
        walk(v);
        current.pop_back();
      }
    }
  };
  walk(in_node);
  if (g.paths_.empty()) throw ValidationError("no input-to-output path", raw.end_location);
  return g;
}

// ---- system specs -----------------------------------------------------------------------

const SystemMode* SystemQRSpec::find(const ModeTuple& t) const {
  for (const SystemMode& m : modes) {
    if (m.modes == t) return &m;
  }
  return nullptr;
}

SystemQRSpec validate_system_qrspec(SystemQRSpec spec) {
  if (spec.components.empty()) throw ValidationError("system spec lists no components");
  for (std::size_t i = 0; i < spec.components.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (spec.components[i] == spec.components[j]) {
        throw ValidationError(fmt::format("component {} listed twice", spec.components[i]));
      }
    }
  }
  const bool infer_counts = spec.mode_counts.empty();
  if (infer_counts) spec.mode_counts.assign(spec.components.size(), 0);
  if (spec.mode_counts.size() != spec.components.size()) {
    throw ValidationError("mode count list does not match component list");
  }
  std::set<ModeTuple> seen;
  std::set<double> levels;
  for (const SystemMode& m : spec.modes) {
    if (m.modes.size() != spec.components.size()) {
      throw ValidationError(fmt::format("mode tuple has {} entries, expected {}", m.modes.size(),
                                        spec.components.size()));
    }
    if (!seen.insert(m.modes).second) {
      throw ValidationError(fmt::format("mode {} listed twice",
                                        render_mode_tuple(m.modes, spec.components)));
    }
    if (!(m.reliability >= 0.0 && m.reliability <= 1.0)) {
      throw ValidationError(fmt::format("mode {}: reliability {} outside [0,1]",
                                        render_mode_tuple(m.modes, spec.components),
                                        format_number(m.reliability)));
    }
    for (std::size_t i = 0; i < m.modes.size(); ++i) {
      if (infer_counts) {
        spec.mode_counts[i] = std::max(spec.mode_counts[i], m.modes[i]);
      } else if (m.modes[i] > spec.mode_counts[i]) {
        throw ValidationError(fmt::format("component {} has no mode {}", spec.components[i],
                                          m.modes[i]));
      }
    }
    for (double l : m.quality.levels()) levels.insert(l);
  }
  spec.input_levels.assign(levels.rbegin(), levels.rend());
  return spec;
}

std::string render_mode_tuple(const ModeTuple& t, const std::vector<std::string>& components) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ",";
    const std::string label = i < components.size() ? component_label(components[i]) : "?";
    out += fmt::format("m{}^{}", label, t[i]);
  }
  return out + ")";
}

}  // namespace qrcomp
