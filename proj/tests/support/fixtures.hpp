#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "qrcomp/characterize.hpp"
#include "qrcomp/compose.hpp"
#include "qrcomp/model_core.hpp"
#include "qrcomp/qr_model.hpp"

namespace qrcomp::testing {

std::filesystem::path data_file(const std::string& name);
std::string read_data(const std::string& name);

// C1, C2 and C3 from data/spec.qr.
const std::vector<ComponentSpec>& example_specs();
const ComponentSpec& example_spec(const std::string& name);

SystemGraph load_graph(const std::string& sys_file);
QRModel component_model(const std::string& name);
QRModel system_model(const std::string& sys_file);
QRModel system_model(const std::string& sys_file, ParallelPolicy policy);

QualityMap qmap(std::vector<QualityPair> pairs);
QualityMap qmap(const std::vector<double>& levels, const std::vector<double>& outputs);

}  // namespace qrcomp::testing
