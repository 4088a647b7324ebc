#include <fmt/format.h>

#include <algorithm>
#include <cmath>

#include "qrcomp/model_core.hpp"

namespace qrcomp {

std::string format_number(double v) {
  if (v == 0.0) return "0";
  return fmt::format("{}", v);
}

QualityMap canonicalize_quality_map(std::vector<QualityPair> pairs) {
  for (const QualityPair& p : pairs) {
    if (!std::isfinite(p.level) || !std::isfinite(p.value)) {
      throw ValidationError("quality levels and values must be finite");
    }
    if (p.level <= 0.0) {
      throw ValidationError(fmt::format("quality level {} must be positive", format_number(p.level)));
    }
    if (p.value < 0.0) {
      throw ValidationError(fmt::format("quality value {} must be non-negative", format_number(p.value)));
    }
    if (p.value > p.level) {
      throw ValidationError(fmt::format("output {} exceeds input level {}", format_number(p.value),
                                        format_number(p.level)));
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const QualityPair& a, const QualityPair& b) {
    return a.level < b.level || (a.level == b.level && a.value > b.value);
  });
  std::vector<QualityPair> kept;
  double best = 0.0;
  for (const QualityPair& p : pairs) {
    if (p.value > best) {
      kept.push_back(p);
      best = p.value;
    }
  }
  std::reverse(kept.begin(), kept.end());
  return QualityMap(std::move(kept));
}

double QualityMap::lookup(double input) const noexcept {
  for (const QualityPair& p : pairs_) {
    if (p.level <= input) return p.value;
  }
  return 0.0;
}

std::vector<double> QualityMap::levels() const {
  std::vector<double> out;
  out.reserve(pairs_.size());
  for (const QualityPair& p : pairs_) out.push_back(p.level);
  return out;
}

std::vector<double> QualityMap::outputs() const {
  std::vector<double> out;
  out.reserve(pairs_.size());
  for (const QualityPair& p : pairs_) out.push_back(p.value);
  return out;
}

QualityMap QualityMap::clipped_below(double min_level) const {
  std::vector<QualityPair> kept;
  for (const QualityPair& p : pairs_) {
    if (p.level >= min_level) kept.push_back(p);
  }
  return QualityMap(std::move(kept));
}

namespace {

std::string bracketed(const std::vector<double>& values) {
  if (values.empty()) return "<0>";
  std::string out = "<";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += format_number(values[i]);
  }
  return out + ">";
}

}  // namespace

std::string QualityMap::render_levels() const { return bracketed(levels()); }
std::string QualityMap::render_outputs() const { return bracketed(outputs()); }
std::string QualityMap::render() const { return render_levels() + "->" + render_outputs(); }

}  // namespace qrcomp
