#include "qrcomp/spec_files.hpp"

#include <fmt/format.h>

#include <fstream>
#include <map>
#include <sstream>

#include "text_cursor.hpp"

namespace qrcomp {

using detail::TextCursor;

namespace {

// "<in>-><out>, <in>-><out>, ..." up to the end of the line.
std::vector<QualityPair> quality_pairs(TextCursor& cur) {
  std::vector<QualityPair> pairs;
  cur.skip_blanks(false);
  if (cur.at_line_end()) return pairs;
  for (;;) {
    cur.skip_blanks(false);
    QualityPair p;
    p.level = cur.number("quality input level");
    cur.skip_blanks(false);
    cur.expect('-', "'->'");
    cur.expect('>', "'->'");
    cur.skip_blanks(false);
    p.value = cur.number("quality output value");
    pairs.push_back(p);
    cur.skip_blanks(false);
    if (cur.at_line_end()) break;
    cur.expect(',', "',' between quality pairs");
  }
  return pairs;
}

std::string render_pairs(const QualityMap& m) {
  std::vector<std::string> parts;
  for (const QualityPair& p : m.pairs()) {
    parts.push_back(fmt::format("{}->{}", format_number(p.level), format_number(p.value)));
  }
  return fmt::format("{}", fmt::join(parts, ", "));
}

constexpr std::uint64_t kMaxModes = 16;

struct OpenComponent {
  std::string name;
  SourceLocation at;
  std::map<std::uint64_t, double> reliability;
  std::map<std::uint64_t, SourceLocation> mode_at;
  std::map<std::uint64_t, std::vector<QualityPair>> quality;
  std::map<std::uint64_t, SourceLocation> quality_at;
};

ComponentSpec close_component(const OpenComponent& c) {
  if (c.reliability.empty()) {
    throw ValidationError(fmt::format("component {} declares no modes", c.name), c.at);
  }
  for (const auto& [k, at] : c.quality_at) {
    if (!c.reliability.count(k)) {
      throw ValidationError(fmt::format("component {}: quality for undeclared mode {}", c.name, k), at);
    }
  }
  RawComponentSpec raw;
  raw.name = c.name;
  std::uint64_t expected = 1;
  for (const auto& [k, z] : c.reliability) {
    const SourceLocation mode_at = c.mode_at.at(k);
    if (k != expected) {
      throw ValidationError(fmt::format("component {}: mode {} missing", c.name, expected), mode_at);
    }
    auto q = c.quality.find(k);
    if (q == c.quality.end()) {
      throw ValidationError(fmt::format("component {}: mode {} has no quality line", c.name, k), mode_at);
    }
    if (!(z > 0.0 && z <= 1.0)) {
      throw ValidationError(fmt::format("component {} mode {}: reliability {} outside (0,1]", c.name,
                                        k, format_number(z)),
                            mode_at);
    }
    const auto& listed = q->second;
    const SourceLocation quality_at = c.quality_at.at(k);
    for (std::size_t i = 1; i < listed.size(); ++i) {
      if (!(listed[i].level < listed[i - 1].level)) {
        throw ValidationError(
            fmt::format("component {} mode {}: input levels must be strictly decreasing", c.name, k),
            quality_at);
      }
    }
    try {
      canonicalize_quality_map(listed);
    } catch (const ValidationError& e) {
      throw ValidationError(fmt::format("component {} mode {}: {}", c.name, k, e.message()),
                            quality_at);
    }
    raw.reliabilities.push_back(z);
    raw.quality.push_back(q->second);
    ++expected;
  }
  try {
    return validate_component_spec(raw);
  } catch (const ValidationError& e) {
    throw e.located(c.at);
  }
}

}  // namespace

std::vector<ComponentSpec> parse_component_specs(std::string_view text) {
  TextCursor cur(text);
  std::vector<ComponentSpec> specs;
  std::map<std::string, SourceLocation> names;
  std::optional<OpenComponent> open;

  for (;;) {
    cur.skip_blanks(true);
    if (cur.at_end()) break;
    const SourceLocation at = cur.location();
    const std::string directive = cur.identifier("directive");
    cur.skip_blanks(false);
    if (directive == "component") {
      if (open) TextCursor::fail_at(fmt::format("component {} lacks 'end'", open->name), at);
      OpenComponent c;
      c.at = at;
      c.name = cur.identifier("component name");
      if (names.count(c.name)) {
        throw ValidationError(fmt::format("duplicate component {}", c.name), at);
      }
      names.emplace(c.name, at);
      open = std::move(c);
    } else if (directive == "end") {
      if (!open) TextCursor::fail_at("'end' without 'component'", at);
      specs.push_back(close_component(*open));
      open.reset();
    } else if (directive == "mode" || directive == "quality") {
      if (!open) TextCursor::fail_at(fmt::format("'{}' outside a component block", directive), at);
      const SourceLocation k_at = cur.location();
      const std::uint64_t k = cur.integer("mode index");
      if (k == 0 || k > kMaxModes) {
        TextCursor::fail_at(fmt::format("mode index must be in 1..{}", kMaxModes), k_at);
      }
      if (directive == "mode") {
        cur.skip_blanks(false);
        if (!cur.consume_word("reliability")) cur.fail("expected 'reliability'");
        cur.skip_blanks(false);
        const double z = cur.number("reliability");
        if (!open->reliability.emplace(k, z).second) {
          TextCursor::fail_at(fmt::format("mode {} declared twice", k), at);
        }
        open->mode_at.emplace(k, at);
      } else {
        cur.skip_blanks(false);
        cur.expect(':', "':' after mode index");
        auto pairs = quality_pairs(cur);
        if (!open->quality.emplace(k, std::move(pairs)).second) {
          TextCursor::fail_at(fmt::format("quality for mode {} given twice", k), at);
        }
        open->quality_at.emplace(k, at);
      }
    } else {
      TextCursor::fail_at(fmt::format("unknown directive '{}'", directive), at);
    }
    cur.expect_line_end();
  }
  if (open) cur.fail(fmt::format("component {} lacks 'end'", open->name));
  if (specs.empty()) cur.fail("no components");
  return specs;
}

std::string render_component_specs(const std::vector<ComponentSpec>& specs) {
  std::string out;
  for (const ComponentSpec& s : specs) {
    out += fmt::format("component {}\n", s.name);
    for (std::size_t k = 0; k < s.mode_count(); ++k) {
      out += fmt::format("mode {} reliability {}\n", k + 1, format_number(s.mode_reliabilities[k]));
    }
    for (std::size_t k = 0; k < s.mode_count(); ++k) {
      out += fmt::format("quality {}: {}\n", k + 1, render_pairs(s.mode_quality[k]));
    }
    out += "end\n";
  }
  return out;
}

namespace {

RawSystemGraph read_system(std::string_view text) {
  TextCursor cur(text);
  RawSystemGraph raw;
  bool policy_set = false;
  for (;;) {
    cur.skip_blanks(true);
    if (cur.at_end()) break;
    const SourceLocation at = cur.location();
    const std::string directive = cur.identifier("directive");
    cur.skip_blanks(false);
    if (directive == "input" || directive == "output") {
      auto& slot = directive == "input" ? raw.input : raw.output;
      if (slot) {
        throw ValidationError(fmt::format("only one {} node is supported", directive), at);
      }
      slot = cur.identifier(fmt::format("{} node id", directive));
    } else if (directive == "vertex") {
      std::string id = cur.identifier("vertex id");
      cur.skip_blanks(false);
      cur.expect(':', "':' between vertex id and component");
      cur.skip_blanks(false);
      std::string component = cur.identifier("component name");
      raw.vertices.emplace_back(std::move(id), std::move(component));
      raw.vertex_locations.push_back(at);
    } else if (directive == "edge") {
      std::string from = cur.identifier("edge source");
      cur.skip_blanks(false);
      std::string to = cur.identifier("edge target");
      raw.edges.emplace_back(std::move(from), std::move(to));
      raw.edge_locations.push_back(at);
    } else if (directive == "parallel_policy") {
      const SourceLocation p_at = cur.location();
      const std::string name = cur.identifier("'max' or 'ordered'");
      auto p = policy_from_name(name);
      if (!p) TextCursor::fail_at(fmt::format("unknown parallel policy '{}'", name), p_at);
      if (policy_set) throw ValidationError("parallel_policy given twice", at);
      raw.policy = *p;
      policy_set = true;
    } else {
      TextCursor::fail_at(fmt::format("unknown directive '{}'", directive), at);
    }
    cur.expect_line_end();
  }
  raw.end_location = cur.location();
  return raw;
}

}  // namespace

SystemGraph parse_system_file(std::string_view text) {
  return validate_system_graph(read_system(text));
}

SystemGraph parse_system_file(std::string_view text, const std::set<std::string>& known_components) {
  return validate_system_graph(read_system(text), known_components);
}

SystemQRSpec parse_system_spec(std::string_view text) {
  TextCursor cur(text);
  SystemQRSpec spec;
  bool have_components = false;
  std::optional<SourceLocation> first_mode;
  for (;;) {
    cur.skip_blanks(true);
    if (cur.at_end()) break;
    const SourceLocation at = cur.location();
    const std::string directive = cur.identifier("directive");
    cur.skip_blanks(false);
    if (directive == "components") {
      if (have_components) TextCursor::fail_at("'components' given twice", at);
      while (!cur.at_line_end() && cur.peek() != '#') {
        const SourceLocation n_at = cur.location();
        std::string name = cur.identifier("component name");
        if (std::find(spec.components.begin(), spec.components.end(), name) != spec.components.end()) {
          throw ValidationError(fmt::format("component {} listed twice", name), n_at);
        }
        spec.components.push_back(std::move(name));
        cur.skip_blanks(false);
      }
      if (spec.components.empty()) cur.fail("expected component names");
      have_components = true;
    } else if (directive == "mode") {
      if (!have_components) TextCursor::fail_at("'mode' before 'components'", at);
      if (!first_mode) first_mode = at;
      SystemMode m;
      while (cur.starts_number()) {
        const SourceLocation k_at = cur.location();
        const std::uint64_t k = cur.integer("mode index");
        if (k > kMaxModes) TextCursor::fail_at(fmt::format("mode index above {}", kMaxModes), k_at);
        m.modes.push_back(static_cast<std::size_t>(k));
        cur.skip_blanks(false);
      }
      if (m.modes.size() != spec.components.size()) {
        TextCursor::fail_at(fmt::format("mode tuple has {} entries, expected {}", m.modes.size(),
                                        spec.components.size()),
                            at);
      }
      if (!cur.consume_word("reliability")) cur.fail("expected 'reliability'");
      cur.skip_blanks(false);
      m.reliability = cur.number("reliability");
      cur.skip_blanks(false);
      if (cur.consume_word("quality")) {
        try {
          m.quality = canonicalize_quality_map(quality_pairs(cur));
        } catch (const ValidationError& e) {
          throw e.located(at);
        }
      }
      if (spec.find(m.modes)) {
        throw ValidationError(
            fmt::format("mode {} listed twice", render_mode_tuple(m.modes, spec.components)), at);
      }
      spec.modes.push_back(std::move(m));
    } else {
      TextCursor::fail_at(fmt::format("unknown directive '{}'", directive), at);
    }
    cur.expect_line_end();
  }
  if (!have_components) cur.fail("missing 'components' line");
  try {
    return validate_system_qrspec(std::move(spec));
  } catch (const ValidationError& e) {
    throw e.located(first_mode.value_or(SourceLocation{}));
  }
}

std::string render_system_spec(const SystemQRSpec& spec) {
  std::string out = fmt::format("components {}\n", fmt::join(spec.components, " "));
  for (const SystemMode& m : spec.modes) {
    out += fmt::format("mode {} reliability {}", fmt::join(m.modes, " "), format_number(m.reliability));
    if (!m.quality.empty()) out += " quality " + render_pairs(m.quality);
    out += "\n";
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(fmt::format("cannot read {}", path.string()));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace qrcomp
