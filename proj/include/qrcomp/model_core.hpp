#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qrcomp/errors.hpp"

namespace qrcomp {

// ---- quality maps ----------------------------------------------------------

struct QualityPair {
  double level = 0.0;
  double value = 0.0;

  friend bool operator==(const QualityPair&, const QualityPair&) = default;
};

// Step function from input quality to output quality. Stored canonically:
// levels and outputs strictly decreasing, each output paired with the
// smallest level achieving it. Empty means the all-zero map.
class QualityMap {
 public:
  QualityMap() = default;

  const std::vector<QualityPair>& pairs() const noexcept { return pairs_; }
  bool empty() const noexcept { return pairs_.empty(); }
  std::size_t size() const noexcept { return pairs_.size(); }

  // Output paired with the largest level <= input, else 0.
  double lookup(double input) const noexcept;

  std::vector<double> levels() const;
  std::vector<double> outputs() const;

  // Drops the pairs whose level is below min_level.
  QualityMap clipped_below(double min_level) const;

  // "<50,30,20>-><40,25,10>"; the empty map renders as "<0>-><0>".
  std::string render() const;
  std::string render_levels() const;
  std::string render_outputs() const;

  friend bool operator==(const QualityMap&, const QualityMap&) = default;

 private:
  friend QualityMap canonicalize_quality_map(std::vector<QualityPair> pairs);
  explicit QualityMap(std::vector<QualityPair> canonical) : pairs_(std::move(canonical)) {}

  std::vector<QualityPair> pairs_;
};

// Accepts pairs in any order. Where the listed outputs are not monotone the
// result is the monotone envelope: lookup(q) = max output at levels <= q.
QualityMap canonicalize_quality_map(std::vector<QualityPair> pairs);

std::string format_number(double v);

// ---- components --------------------------------------------------------------

struct RawComponentSpec {
  std::string name;
  std::vector<double> reliabilities;
  std::vector<std::vector<QualityPair>> quality;  // as written, per mode
};

struct ComponentSpec {
  std::string name;
  std::vector<double> mode_reliabilities;
  std::vector<QualityMap> mode_quality;

  std::size_t mode_count() const noexcept { return mode_reliabilities.size(); }

  friend bool operator==(const ComponentSpec&, const ComponentSpec&) = default;
};

bool is_identifier(std::string_view s);

ComponentSpec validate_component_spec(const RawComponentSpec& raw);

const ComponentSpec* find_spec(const std::vector<ComponentSpec>& specs, std::string_view name);

// ---- configurations ----------------------------------------------------------

enum class ModeStatus : char {
  Operating = '1',
  Failed = '0',
  NotAvailed = 'X',
  Suspended = 'Y',
};

char status_symbol(ModeStatus s);
std::optional<ModeStatus> status_from_symbol(char c);
std::string_view status_code(ModeStatus s);  // OP FL NA SU

using Segment = std::span<const ModeStatus>;

bool is_valid_segment(Segment seg);
std::optional<std::size_t> operating_mode(Segment seg);  // 1-based
bool is_dead(Segment seg);
bool is_all_failed(Segment seg);

class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::vector<ModeStatus> slots) : slots_(std::move(slots)) {}

  // Throws ValidationError on a symbol outside {1,0,X,Y}.
  static Configuration parse(std::string_view symbols);

  std::span<const ModeStatus> slots() const noexcept { return slots_; }
  std::size_t size() const noexcept { return slots_.size(); }
  ModeStatus operator[](std::size_t i) const { return slots_[i]; }
  void set(std::size_t i, ModeStatus s) { slots_[i] = s; }

  std::string str() const;
  std::size_t depth() const;  // FAILED plus SUSPENDED slots

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  std::vector<ModeStatus> slots_;
};

// Orders by depth, then slot by slot with 1 < 0 < Y < X. The initial
// configuration of any layout sorts first.
bool canonical_less(const Configuration& a, const Configuration& b);

struct SlotLayout {
  std::vector<std::string> components;
  std::vector<std::size_t> mode_counts;
  std::vector<std::size_t> offsets;
  std::size_t width = 0;

  static SlotLayout make(std::vector<std::string> names, std::vector<std::size_t> counts);

  std::size_t size() const noexcept { return components.size(); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t component_of_slot(std::size_t slot) const;
  Segment segment(const Configuration& c, std::size_t component) const;
  bool is_valid(const Configuration& c) const;
  Configuration initial() const;

  friend bool operator==(const SlotLayout&, const SlotLayout&) = default;
};

// ---- system structure ----------------------------------------------------------

enum class ParallelPolicy { Max, Ordered };

std::string_view policy_name(ParallelPolicy p);
std::optional<ParallelPolicy> policy_from_name(std::string_view s);

struct RawSystemGraph {
  std::optional<std::string> input;
  std::optional<std::string> output;
  std::vector<std::pair<std::string, std::string>> vertices;  // id, component
  std::vector<std::pair<std::string, std::string>> edges;
  ParallelPolicy policy = ParallelPolicy::Max;

  // Optional source positions, parallel to vertices/edges.
  std::vector<SourceLocation> vertex_locations;
  std::vector<SourceLocation> edge_locations;
  std::optional<SourceLocation> end_location;
};

class SystemGraph {
 public:
  const std::string& input() const noexcept { return input_; }
  const std::string& output() const noexcept { return output_; }
  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<std::pair<std::string, std::string>>& edges() const noexcept { return edges_; }
  ParallelPolicy policy() const noexcept { return policy_; }

  const std::string& label(std::string_view vertex) const;

  // Distinct component names, in order of first vertex declaration.
  const std::vector<std::string>& components() const noexcept { return components_; }

  // Input-to-output paths as vertex lists (terminals excluded), depth-first
  // following edges in declaration order.
  const std::vector<std::vector<std::string>>& paths() const noexcept { return paths_; }
  std::vector<std::vector<std::string>> component_paths() const;

 private:
  friend SystemGraph validate_system_graph(const RawSystemGraph&,
                                           const std::optional<std::set<std::string>>&);
  std::string input_;
  std::string output_;
  std::vector<std::string> vertices_;
  std::vector<std::string> labels_;
  std::vector<std::pair<std::string, std::string>> edges_;
  ParallelPolicy policy_ = ParallelPolicy::Max;
  std::vector<std::string> components_;
  std::vector<std::vector<std::string>> paths_;
};

// Checks terminals, declarations, acyclicity and that every vertex lies on an
// input-to-output path. With known_components, labels must resolve.
SystemGraph validate_system_graph(const RawSystemGraph& raw,
                                  const std::optional<std::set<std::string>>& known_components =
                                      std::nullopt);

// ---- system-level specification ------------------------------------------------

using ModeTuple = std::vector<std::size_t>;  // 0 is the failure mode

struct SystemMode {
  ModeTuple modes;
  double reliability = 0.0;
  QualityMap quality;

  friend bool operator==(const SystemMode&, const SystemMode&) = default;
};

struct SystemQRSpec {
  std::vector<std::string> components;
  std::vector<std::size_t> mode_counts;
  std::vector<SystemMode> modes;
  std::vector<double> input_levels;  // union of mode levels, decreasing

  const SystemMode* find(const ModeTuple& t) const;
  friend bool operator==(const SystemQRSpec&, const SystemQRSpec&) = default;
};

// Checks tuple arity, distinctness and reliability range; fills mode_counts
// when left empty and recomputes input_levels.
SystemQRSpec validate_system_qrspec(SystemQRSpec spec);

std::string render_mode_tuple(const ModeTuple& t, const std::vector<std::string>& components);

}  // namespace qrcomp
