#include "fixtures.hpp"

#include <stdexcept>

#include "qrcomp/spec_files.hpp"

namespace qrcomp::testing {

std::filesystem::path data_file(const std::string& name) {
  return std::filesystem::path(QRCOMP_DATA_DIR) / name;
}

std::string read_data(const std::string& name) { return read_text_file(data_file(name)); }

const std::vector<ComponentSpec>& example_specs() {
  static const std::vector<ComponentSpec> specs = parse_component_specs(read_data("spec.qr"));
  return specs;
}

const ComponentSpec& example_spec(const std::string& name) {
  const ComponentSpec* s = find_spec(example_specs(), name);
  if (s == nullptr) throw std::out_of_range("no component " + name);
  return *s;
}

SystemGraph load_graph(const std::string& sys_file) { return parse_system_file(read_data(sys_file)); }

QRModel component_model(const std::string& name) {
  return build_component_model(example_spec(name));
}

QRModel system_model(const std::string& sys_file) {
  return build_system_model(load_graph(sys_file), example_specs());
}

QRModel system_model(const std::string& sys_file, ParallelPolicy policy) {
  return build_system_model(load_graph(sys_file), example_specs(), policy);
}

QualityMap qmap(std::vector<QualityPair> pairs) { return canonicalize_quality_map(std::move(pairs)); }

QualityMap qmap(const std::vector<double>& levels, const std::vector<double>& outputs) {
  std::vector<QualityPair> pairs;
  for (std::size_t i = 0; i < levels.size() && i < outputs.size(); ++i) {
    pairs.push_back({levels[i], outputs[i]});
  }
  return canonicalize_quality_map(std::move(pairs));
}

}  // namespace qrcomp::testing
