#include "qrcomp/query_engine.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <map>

#include "qrcomp/compose.hpp"
#include "qrcomp/spec_files.hpp"
#include "qrcomp/synthesize.hpp"

namespace qrcomp {

std::size_t failure_count(const Configuration& config, const SlotLayout& layout) {
  std::size_t n = 0;
  for (std::size_t c = 0; c < layout.size(); ++c) {
    if (is_all_failed(layout.segment(config, c))) ++n;
  }
  return n;
}

std::size_t suspend_count(const Configuration& config) {
  return static_cast<std::size_t>(std::count(config.slots().begin(), config.slots().end(),
                                             ModeStatus::Suspended));
}

namespace {

template <class T>
bool within(const Bounds<T>& b, T v, T tol) {
  if (b.minimum && v < *b.minimum - tol) return false;
  if (b.maximum && v > *b.maximum + tol) return false;
  return true;
}

bool counts_within(const Bounds<std::uint64_t>& b, std::size_t v) {
  if (b.minimum && v < *b.minimum) return false;
  if (b.maximum && v > *b.maximum) return false;
  return true;
}

// Bound for the largest queried input <= level, if any.
std::optional<double> bound_at(const std::vector<std::pair<double, double>>& sorted_bounds,
                               double level) {
  std::optional<double> out;
  for (const auto& [input, bound] : sorted_bounds) {
    if (input <= level) out = bound;
  }
  return out;
}

std::vector<std::pair<double, double>> pair_bounds(const std::vector<double>& inputs,
                                                   const std::vector<double>& bounds) {
  std::vector<std::pair<double, double>> out;
  for (std::size_t i = 0; i < inputs.size() && i < bounds.size(); ++i) {
    out.emplace_back(inputs[i], bounds[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ResultTable evaluate_query(const Query& q, const SystemGraph& graph,
                           const std::vector<ComponentSpec>& specs, const QRModel& model,
                           double tolerance) {
  ResultTable result;
  result.query_name = q.name;
  result.fields = q.select;
  result.layout = model.layout();
  const SlotLayout& layout = model.layout();
  const Assignment values = model.assignment();

  const bool quality_bounds = q.output_min || q.output_max;
  std::vector<std::pair<double, double>> lower;
  std::vector<std::pair<double, double>> upper;
  if (q.input_levels && q.output_min) lower = pair_bounds(*q.input_levels, *q.output_min);
  if (q.input_levels && q.output_max) upper = pair_bounds(*q.input_levels, *q.output_max);
  std::optional<double> min_listed;
  if (q.input_levels && !q.input_levels->empty()) {
    min_listed = *std::min_element(q.input_levels->begin(), q.input_levels->end());
  }

  for (const ModelState& s : model.states()) {
    ResultRow row;
    row.config = s.config;
    row.failures = failure_count(s.config, layout);
    row.suspensions = suspend_count(s.config);
    if (!counts_within(q.failure, row.failures) || !counts_within(q.suspend, row.suspensions)) {
      continue;
    }
    row.operate_prob = poly_eval(s.expr, values);
    if (!within(q.operate_prob, row.operate_prob, tolerance)) continue;
    row.reliability = structural_reliability(graph, specs, layout, s.config);
    if (!within(q.reliability, row.reliability, tolerance)) continue;

    row.quality = s.quality;
    if (q.input_levels && !quality_bounds) {
      const bool supported = std::all_of(q.input_levels->begin(), q.input_levels->end(),
                                         [&](double l) { return s.quality.lookup(l) > 0.0; });
      if (!supported) continue;
      row.quality = s.quality.clipped_below(*min_listed);
    } else if (quality_bounds) {
      bool ok = !(q.output_min && s.quality.empty());
      for (const QualityPair& p : s.quality.pairs()) {
        if (auto m = bound_at(lower, p.level); m && p.value < *m - tolerance) ok = false;
        if (auto m = bound_at(upper, p.level); m && p.value > *m + tolerance) ok = false;
      }
      if (!ok) continue;
    }
    result.rows.push_back(std::move(row));
  }

  std::sort(result.rows.begin(), result.rows.end(), [](const ResultRow& a, const ResultRow& b) {
    if (a.operate_prob != b.operate_prob) return a.operate_prob > b.operate_prob;
    return a.config.str() < b.config.str();
  });

  std::vector<bool> fully_failed(layout.size(), false);
  for (const ResultRow& r : result.rows) {
    result.max_failures = std::max(result.max_failures, r.failures);
    for (std::size_t c = 0; c < layout.size(); ++c) {
      if (is_all_failed(layout.segment(r.config, c))) fully_failed[c] = true;
    }
  }
  for (std::size_t c = 0; c < layout.size(); ++c) {
    if (!fully_failed[c]) result.inadmissible.push_back(layout.components[c]);
  }
  return result;
}

ResultTable run_query(const Query& q, const QueryOptions& options, std::vector<std::string>* warnings) {
  auto resolve = [&](const std::string& written, const std::optional<std::filesystem::path>& override,
                     std::string_view what) {
    if (override) {
      if (warnings) {
        warnings->push_back(fmt::format("query {}: {} file '{}' overridden by '{}'",
                                        q.name.empty() ? "<unnamed>" : q.name, what, written,
                                        override->string()));
      }
      return *override;
    }
    std::filesystem::path p(written);
    if (p.is_relative()) p = options.base_dir / p;
    return p;
  };
  const auto system_path = resolve(q.system_file, options.system_override, "system");
  const auto qrspec_path = resolve(q.qrspec_file, options.qrspec_override, "qrspec");

  const auto specs = parse_component_specs(read_text_file(qrspec_path));
  std::set<std::string> known;
  for (const auto& s : specs) known.insert(s.name);
  const SystemGraph graph = parse_system_file(read_text_file(system_path), known);
  const QRModel model =
      build_system_model(graph, specs, options.policy_override.value_or(graph.policy()));
  return evaluate_query(q, graph, specs, model, options.tolerance);
}

std::string render_mode_statuses(const Configuration& config, const SlotLayout& layout) {
  std::string out;
  for (std::size_t c = 0; c < layout.size(); ++c) {
    if (c) out += " ";
    out += layout.components[c] + "=(";
    Segment seg = layout.segment(config, c);
    for (std::size_t k = 0; k < seg.size(); ++k) {
      if (k) out += ",";
      out += fmt::format("m{}:{}", k + 1, status_code(seg[k]));
    }
    out += ")";
  }
  return out;
}

Table to_table(const ResultTable& result) {
  Table t;
  t.title = result.query_name.empty() ? "query" : result.query_name;
  auto has = [&](SelectField f) {
    return std::find(result.fields.begin(), result.fields.end(), f) != result.fields.end();
  };
  t.headers = {"configuration"};
  if (has(SelectField::OperatingMode)) t.headers.push_back("operating_mode");
  if (has(SelectField::InputQuality)) t.headers.push_back("input_quality");
  if (has(SelectField::OutputQuality)) t.headers.push_back("output_quality");
  if (has(SelectField::Reliability)) t.headers.push_back("reliability");
  if (has(SelectField::OperateProb)) t.headers.push_back("operate_prob");
  if (has(SelectField::Failure)) t.headers.push_back("failure");
  if (has(SelectField::Suspend)) t.headers.push_back("suspend");

  for (const ResultRow& r : result.rows) {
    std::vector<Cell> row{Cell::of(r.config.str())};
    if (has(SelectField::OperatingMode)) {
      Cell c = Cell::of(render_mode_statuses(r.config, result.layout));
      nlohmann::json modes = nlohmann::json::object();
      for (std::size_t i = 0; i < result.layout.size(); ++i) {
        nlohmann::json seg = nlohmann::json::array();
        for (ModeStatus s : result.layout.segment(r.config, i)) seg.push_back(std::string(status_code(s)));
        modes[result.layout.components[i]] = std::move(seg);
      }
      c.value = std::move(modes);
      row.push_back(std::move(c));
    }
    if (has(SelectField::InputQuality)) row.push_back({r.quality.render_levels(), r.quality.levels()});
    if (has(SelectField::OutputQuality)) row.push_back({r.quality.render_outputs(), r.quality.outputs()});
    if (has(SelectField::Reliability)) row.push_back(Cell::number(r.reliability, 5));
    if (has(SelectField::OperateProb)) row.push_back(Cell::number(r.operate_prob, 5));
    if (has(SelectField::Failure)) row.push_back(Cell::integer(static_cast<long long>(r.failures)));
    if (has(SelectField::Suspend)) row.push_back(Cell::integer(static_cast<long long>(r.suspensions)));
    t.rows.push_back(std::move(row));
  }

  if (result.rows.empty()) {
    t.footnotes.push_back("no configuration satisfies the constraints");
  } else {
    t.footnotes.push_back(fmt::format("max failures tolerated = {}", result.max_failures));
    if (!result.inadmissible.empty()) {
      t.footnotes.push_back(fmt::format("full failure not admissible for: {}",
                                        fmt::join(result.inadmissible, ", ")));
    }
  }
  return t;
}

}  // namespace qrcomp
