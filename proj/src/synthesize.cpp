#include "qrcomp/synthesize.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <set>

namespace qrcomp {

QRModel abstract_failure_model(const QRModel& model) {
  const std::size_t n = model.size();
  std::vector<std::vector<std::size_t>> out(n);
  for (const Edge& e : model.failure_edges()) out[e.from].push_back(e.to);

  std::vector<std::size_t> keep_index(n, n);
  std::vector<std::size_t> order{model.initial_state()};
  keep_index[model.initial_state()] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (std::size_t v : out[order[head]]) {
      if (keep_index[v] == n) {
        keep_index[v] = order.size();
        order.push_back(v);
      }
    }
  }
  std::vector<ModelState> states;
  states.reserve(order.size());
  for (std::size_t i : order) states.push_back(model.state(i));
  std::vector<Edge> failures;
  for (const Edge& e : model.failure_edges()) {
    if (keep_index[e.from] != n) failures.push_back({keep_index[e.from], keep_index[e.to]});
  }
  return QRModel(model.components(), std::move(states), std::move(failures), {});
}

ModeTuple mode_tuple(const Configuration& config, const SlotLayout& layout) {
  ModeTuple t;
  t.reserve(layout.size());
  for (std::size_t c = 0; c < layout.size(); ++c) {
    t.push_back(operating_mode(layout.segment(config, c)).value_or(0));
  }
  return t;
}

RelExpr structural_reliability_expr(const SystemGraph& graph, const SlotLayout& layout,
                                    const Configuration& config) {
  if (!layout.is_valid(config)) {
    throw ValidationError(fmt::format("configuration {} does not fit the layout", config.str()));
  }
  std::vector<std::vector<VarId>> live_paths;
  for (const auto& path : graph.component_paths()) {
    std::vector<VarId> vars;
    bool live = true;
    for (const std::string& name : path) {
      auto c = layout.index_of(name);
      if (!c) throw ValidationError(fmt::format("component {} missing from configuration", name));
      auto mode = operating_mode(layout.segment(config, *c));
      if (!mode) {
        live = false;
        break;
      }
      vars.push_back(VarId{name, *mode});
    }
    if (live) {
      std::sort(vars.begin(), vars.end());
      vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
      live_paths.push_back(std::move(vars));
    }
  }
  return path_success_expr(live_paths);
}

double structural_reliability(const SystemGraph& graph, const std::vector<ComponentSpec>& specs,
                              const SlotLayout& layout, const Configuration& config) {
  const RelExpr e = structural_reliability_expr(graph, layout, config);
  Assignment values;
  for (const VarId& v : e.variables()) {
    const ComponentSpec* spec = find_spec(specs, v.component);
    if (!spec) throw ValidationError(fmt::format("no specification for component {}", v.component));
    values.emplace(v, spec->mode_reliabilities.at(v.mode - 1));
  }
  return poly_eval(e, values);
}

SystemQRSpec emit_system_qrspec(const SystemGraph& graph, const std::vector<ComponentSpec>& specs,
                                const QRModel& model) {
  const QRModel abstract = abstract_failure_model(model);
  const SlotLayout& layout = abstract.layout();
  SystemQRSpec spec;
  spec.components = layout.components;
  spec.mode_counts = layout.mode_counts;
  for (const ModelState& s : abstract.states()) {
    SystemMode m;
    m.modes = mode_tuple(s.config, layout);
    m.reliability = structural_reliability(graph, specs, layout, s.config);
    m.quality = s.quality;
    spec.modes.push_back(std::move(m));
  }
  return validate_system_qrspec(std::move(spec));
}

std::string_view verdict_name(ModeVerdict v) {
  switch (v) {
    case ModeVerdict::Matched: return "match";
    case ModeVerdict::Mismatched: return "MISMATCH";
    case ModeVerdict::MissingFromGiven: return "missing in expected";
    case ModeVerdict::MissingFromDerived: return "missing in derived";
  }
  return "?";
}

bool ConformanceReport::passed() const {
  if (!components_match) return false;
  return std::all_of(modes.begin(), modes.end(),
                     [](const ModeComparison& m) { return m.verdict == ModeVerdict::Matched; });
}

std::size_t ConformanceReport::matched() const {
  return static_cast<std::size_t>(std::count_if(modes.begin(), modes.end(), [](const ModeComparison& m) {
    return m.verdict == ModeVerdict::Matched;
  }));
}

std::string ConformanceReport::summary() const {
  if (!components_match) return "FAIL, component sets differ";
  return fmt::format("{}, {}/{} modes matched", passed() ? "PASS" : "FAIL", matched(), modes.size());
}

ConformanceReport check_conformance(const SystemQRSpec& derived, const SystemQRSpec& given,
                                    double tolerance) {
  ConformanceReport report;
  report.components = derived.components;
  report.given_components = given.components;

  std::vector<std::size_t> perm;  // derived position -> given position
  for (const std::string& name : derived.components) {
    auto it = std::find(given.components.begin(), given.components.end(), name);
    if (it == given.components.end()) break;
    perm.push_back(static_cast<std::size_t>(it - given.components.begin()));
  }
  if (perm.size() != derived.components.size() || given.components.size() != derived.components.size()) {
    report.components_match = false;
    return report;
  }

  std::set<ModeTuple> given_seen;
  auto to_given = [&](const ModeTuple& t) {
    ModeTuple g(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) g[perm[i]] = t[i];
    return g;
  };
  auto to_derived = [&](const ModeTuple& g) {
    ModeTuple t(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) t[i] = g[perm[i]];
    return t;
  };

  for (const SystemMode& d : derived.modes) {
    ModeComparison row;
    row.modes = d.modes;
    row.derived_reliability = d.reliability;
    row.derived_quality = d.quality;
    const ModeTuple key = to_given(d.modes);
    const SystemMode* g = given.find(key);
    if (!g) {
      row.verdict = ModeVerdict::MissingFromGiven;
      row.detail = "mode not listed in expected spec";
    } else {
      given_seen.insert(key);
      row.given_reliability = g->reliability;
      row.given_quality = g->quality;
      std::vector<std::string> problems;
      if (std::fabs(d.reliability - g->reliability) > tolerance) {
        problems.push_back(fmt::format("reliability {} vs {}", format_number(d.reliability),
                                       format_number(g->reliability)));
      }
      if (!(d.quality == g->quality)) {
        problems.push_back(fmt::format("quality {} vs {}", d.quality.render(), g->quality.render()));
      }
      row.verdict = problems.empty() ? ModeVerdict::Matched : ModeVerdict::Mismatched;
      row.detail = fmt::format("{}", fmt::join(problems, "; "));
    }
    report.modes.push_back(std::move(row));
  }
  for (const SystemMode& g : given.modes) {
    if (given_seen.count(g.modes)) continue;
    ModeComparison row;
    row.modes = to_derived(g.modes);
    row.verdict = ModeVerdict::MissingFromDerived;
    row.given_reliability = g.reliability;
    row.given_quality = g.quality;
    row.detail = "mode not produced by the model";
    report.modes.push_back(std::move(row));
  }
  return report;
}

}  // namespace qrcomp
