#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qrcomp/errors.hpp"

namespace qrcomp {

enum class SelectField {
  InputQuality,
  OutputQuality,
  OperatingMode,
  Reliability,
  OperateProb,
  Failure,
  Suspend,
};

std::string_view field_name(SelectField f);
std::optional<SelectField> field_from_name(std::string_view s);  // accepts "control"

template <class T>
struct Bounds {
  std::optional<T> minimum;
  std::optional<T> maximum;

  bool empty() const noexcept { return !minimum && !maximum; }
  friend bool operator==(const Bounds&, const Bounds&) = default;
};

struct Query {
  std::string name;
  std::vector<SelectField> select;  // in written order, no repeats
  std::string system_file;
  std::string qrspec_file;

  std::optional<std::vector<double>> input_levels;
  std::optional<std::vector<double>> output_min;
  std::optional<std::vector<double>> output_max;
  Bounds<double> reliability;
  Bounds<double> operate_prob;
  Bounds<std::uint64_t> failure;
  Bounds<std::uint64_t> suspend;

  SourceLocation location;  // of begin_query; not part of equality

  bool selects(SelectField f) const;

  friend bool operator==(const Query& a, const Query& b) {
    return a.name == b.name && a.select == b.select && a.system_file == b.system_file &&
           a.qrspec_file == b.qrspec_file && a.input_levels == b.input_levels &&
           a.output_min == b.output_min && a.output_max == b.output_max &&
           a.reliability == b.reliability && a.operate_prob == b.operate_prob &&
           a.failure == b.failure && a.suspend == b.suspend;
  }
};

// One or more begin_query ... end_query blocks.
std::vector<Query> parse_queries(std::string_view text);
// Exactly one block.
Query parse_query(std::string_view text);

std::string render_query(const Query& q);

}  // namespace qrcomp
