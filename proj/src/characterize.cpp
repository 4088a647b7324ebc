#include "qrcomp/characterize.hpp"

#include <fmt/format.h>

namespace qrcomp {

std::vector<std::vector<ModeStatus>> enumerate_segments(std::size_t d) {
  if (d == 0 || d > 30) throw ValidationError(fmt::format("unsupported mode count {}", d));
  std::vector<std::vector<ModeStatus>> out;
  auto prefixes = [](std::size_t len) {
    std::vector<std::vector<ModeStatus>> all;
    for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
      std::vector<ModeStatus> p(len);
      for (std::size_t i = 0; i < len; ++i) {
        p[i] = (bits >> (len - 1 - i)) & 1 ? ModeStatus::Suspended : ModeStatus::Failed;
      }
      all.push_back(std::move(p));
    }
    return all;
  };
  for (std::size_t k = 1; k <= d; ++k) {
    for (auto seg : prefixes(k - 1)) {
      seg.push_back(ModeStatus::Operating);
      seg.resize(d, ModeStatus::NotAvailed);
      out.push_back(std::move(seg));
    }
  }
  for (auto seg : prefixes(d)) out.push_back(std::move(seg));
  return out;
}

RelExpr state_expr(const Configuration& config, const SlotLayout& layout) {
  RelExpr e = RelExpr::constant(1);
  for (std::size_t c = 0; c < layout.size(); ++c) {
    Segment seg = layout.segment(config, c);
    for (std::size_t k = 0; k < seg.size(); ++k) {
      VarId v{layout.components[c], k + 1};
      if (seg[k] == ModeStatus::Operating) {
        e *= RelExpr::variable(std::move(v));
      } else if (seg[k] == ModeStatus::Failed) {
        e *= RelExpr::complement(std::move(v));
      }
    }
  }
  return e;
}

std::string render_state_expr(const Configuration& config, const SlotLayout& layout) {
  std::string out;
  for (std::size_t c = 0; c < layout.size(); ++c) {
    Segment seg = layout.segment(config, c);
    for (std::size_t k = 0; k < seg.size(); ++k) {
      const std::string label = variable_label(VarId{layout.components[c], k + 1});
      std::string factor;
      if (seg[k] == ModeStatus::Operating) {
        factor = label;
      } else if (seg[k] == ModeStatus::Failed) {
        factor = "(1-" + label + ")";
      } else {
        continue;
      }
      if (!out.empty()) out += ".";
      out += factor;
    }
  }
  return out.empty() ? "1" : out;
}

QRModel build_component_model(const ComponentSpec& spec) {
  const std::size_t d = spec.mode_count();
  const SlotLayout layout = SlotLayout::make({spec.name}, {d});
  std::vector<ModelState> states;
  for (auto& seg : enumerate_segments(d)) {
    Configuration config(std::move(seg));
    auto mode = operating_mode(config.slots());
    QualityMap q = mode ? spec.mode_quality[*mode - 1] : QualityMap{};
    RelExpr e = state_expr(config, layout);
    states.push_back({std::move(config), std::move(q), std::move(e)});
  }

  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < states.size(); ++i) index.emplace(states[i].config.str(), i);

  std::vector<Edge> failures;
  std::vector<Edge> suspends;
  for (std::size_t i = 0; i < states.size(); ++i) {
    auto mode = operating_mode(states[i].config.slots());
    if (!mode) continue;
    const std::size_t k = *mode - 1;
    for (ModeStatus down : {ModeStatus::Failed, ModeStatus::Suspended}) {
      Configuration next = states[i].config;
      next.set(k, down);
      if (k + 1 < d) next.set(k + 1, ModeStatus::Operating);
      const Edge e{i, index.at(next.str())};
      (down == ModeStatus::Failed ? failures : suspends).push_back(e);
    }
  }
  return QRModel({spec}, std::move(states), std::move(failures), std::move(suspends));
}

}  // namespace qrcomp
