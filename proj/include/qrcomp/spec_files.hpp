#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qrcomp/model_core.hpp"

namespace qrcomp {

// Component specifications (.qr):
//   component <name>
//   mode <k> reliability <z>
//   quality <k>: <in>-><out>, <in>-><out>, ...
//   end
std::vector<ComponentSpec> parse_component_specs(std::string_view text);
std::string render_component_specs(const std::vector<ComponentSpec>& specs);

// System structure (.sys):
//   input <id> / output <id> / vertex <id> : <component> / edge <from> <to>
//   parallel_policy max|ordered
SystemGraph parse_system_file(std::string_view text);
SystemGraph parse_system_file(std::string_view text, const std::set<std::string>& known_components);

// System-level specification (.qrs):
//   components <name> <name> ...
//   mode <k1> <k2> ... reliability <z> [quality <in>-><out>, ...]
SystemQRSpec parse_system_spec(std::string_view text);
std::string render_system_spec(const SystemQRSpec& spec);

// Throws IoError when the file cannot be read.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace qrcomp
