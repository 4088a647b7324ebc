#include "qrcomp/sqdl.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <type_traits>

#include "qrcomp/model_core.hpp"
#include "text_cursor.hpp"

namespace qrcomp {

using detail::TextCursor;

std::string_view field_name(SelectField f) {
  switch (f) {
    case SelectField::InputQuality: return "input_quality";
    case SelectField::OutputQuality: return "output_quality";
    case SelectField::OperatingMode: return "operating_mode";
    case SelectField::Reliability: return "reliability";
    case SelectField::OperateProb: return "operate_prob";
    case SelectField::Failure: return "failure";
    case SelectField::Suspend: return "suspend";
  }
  return "?";
}

std::optional<SelectField> field_from_name(std::string_view s) {
  for (SelectField f : {SelectField::InputQuality, SelectField::OutputQuality,
                        SelectField::OperatingMode, SelectField::Reliability,
                        SelectField::OperateProb, SelectField::Failure, SelectField::Suspend}) {
    if (field_name(f) == s) return f;
  }
  if (s == "control") return SelectField::Suspend;
  return std::nullopt;
}

bool Query::selects(SelectField f) const {
  return std::find(select.begin(), select.end(), f) != select.end();
}

namespace {

class QueryParser {
 public:
  explicit QueryParser(std::string_view text) : cur_(text) {}

  std::vector<Query> parse_all() {
    std::vector<Query> out;
    cur_.skip_blanks(true);
    while (!cur_.at_end()) {
      out.push_back(parse_block());
      cur_.skip_blanks(true);
    }
    if (out.empty()) cur_.fail("no query block (expected begin_query)");
    return out;
  }

 private:
  void skip() { cur_.skip_blanks(true); }

  void keyword(std::string_view kw) {
    skip();
    if (!cur_.consume_word(kw)) {
      cur_.fail(fmt::format("expected '{}', found {}", kw, found()));
    }
  }

  std::string found() {
    auto m = cur_.mark();
    std::string w;
    while (!cur_.at_end() && cur_.peek() != ' ' && cur_.peek() != '\n' && cur_.peek() != '\t' &&
           cur_.peek() != '\r' && w.size() < 24) {
      w.push_back(cur_.peek());
      cur_.consume(cur_.peek());
    }
    cur_.reset(m);
    if (w.empty()) return detail::describe_char(cur_.peek());
    return fmt::format("'{}'", w);
  }

  // True when the next token is a '-' bullet (consumed).
  bool bullet() {
    skip();
    return cur_.consume('-');
  }

  // Peeks at the word after a bullet without consuming anything.
  std::optional<std::string> peek_bullet_word() {
    auto m = cur_.mark();
    std::optional<std::string> w;
    if (bullet()) {
      skip();
      std::string s;
      while (!cur_.at_end() && (std::isalnum(static_cast<unsigned char>(cur_.peek())) ||
                                cur_.peek() == '_')) {
        s.push_back(cur_.peek());
        cur_.consume(cur_.peek());
      }
      w = s;
    }
    cur_.reset(m);
    return w;
  }

  std::vector<double> value_list(std::string_view what) {
    skip();
    cur_.expect('{', fmt::format("'{{' opening the {} list", what));
    std::vector<double> values;
    skip();
    if (cur_.consume('}')) cur_.fail(fmt::format("empty {} list", what));
    for (;;) {
      skip();
      values.push_back(cur_.number(what));
      skip();
      if (cur_.consume('}')) break;
      cur_.expect(',', "',' or '}' in value list");
    }
    return values;
  }

  template <class T, class Read>
  void bounds(Bounds<T>& b, std::string_view what, Read read) {
    while (auto w = peek_bullet_word()) {
      if (*w != "minimum" && *w != "maximum") break;
      bullet();
      skip();
      const SourceLocation at = cur_.location();
      cur_.identifier("minimum or maximum");
      auto& slot = *w == "minimum" ? b.minimum : b.maximum;
      if (slot) detail::TextCursor::fail_at(fmt::format("duplicate {} bound for {}", *w, what), at);
      skip();
      slot = read(what);
    }
  }

  Query parse_block() {
    Query q;
    skip();
    q.location = cur_.location();
    keyword("begin_query");
    skip();
    {
      auto m = cur_.mark();
      if (!cur_.consume_word("select")) {
        q.name = cur_.identifier("query name or 'select'");
      }
      cur_.reset(m);
      if (!q.name.empty()) cur_.identifier("query name");
    }

    keyword("select");
    while (peek_bullet_word()) {
      bullet();
      skip();
      const SourceLocation at = cur_.location();
      const std::string name = cur_.identifier("select field");
      auto f = field_from_name(name);
      if (!f) TextCursor::fail_at(fmt::format("unknown select field '{}'", name), at);
      if (q.selects(*f)) TextCursor::fail_at(fmt::format("duplicate select field '{}'", name), at);
      q.select.push_back(*f);
    }
    if (q.select.empty()) cur_.fail("select block needs at least one field");

    skip();
    const SourceLocation from_at = cur_.location();
    if (!cur_.consume_word("from")) {
      cur_.fail(fmt::format("missing from block: expected 'from', found {}", found()));
    }
    bool have_system = false;
    bool have_qrspec = false;
    while (peek_bullet_word()) {
      bullet();
      skip();
      const SourceLocation at = cur_.location();
      const std::string kind = cur_.identifier("'system' or 'qrspec'");
      bool* have = nullptr;
      std::string* target = nullptr;
      if (kind == "system") {
        have = &have_system, target = &q.system_file;
      } else if (kind == "qrspec") {
        have = &have_qrspec, target = &q.qrspec_file;
      } else {
        TextCursor::fail_at(fmt::format("unknown from entry '{}'", kind), at);
      }
      if (*have) TextCursor::fail_at(fmt::format("duplicate from entry '{}'", kind), at);
      cur_.skip_blanks(false);
      *target = cur_.word(fmt::format("{} file path", kind));
      *have = true;
    }
    if (!have_system) TextCursor::fail_at("from block lacks '- system FILE'", from_at);
    if (!have_qrspec) TextCursor::fail_at("from block lacks '- qrspec FILE'", from_at);

    skip();
    if (cur_.consume_word("where")) parse_where(q);

    skip();
    const SourceLocation end_at = cur_.location();
    if (!cur_.consume_word("end_query")) {
      cur_.fail(fmt::format("expected 'end_query', found {}", found()));
    }
    for (const auto* list : {&q.output_min, &q.output_max}) {
      if (!*list) continue;
      if (!q.input_levels) {
        TextCursor::fail_at("output_quality bounds need an input_quality list", end_at);
      }
      if ((*list)->size() != q.input_levels->size()) {
        TextCursor::fail_at(
            fmt::format("output_quality list has {} values but input_quality has {}",
                        (*list)->size(), q.input_levels->size()),
            end_at);
      }
    }
    return q;
  }

  void parse_where(Query& q) {
    std::vector<std::string> seen;
    while (peek_bullet_word()) {
      bullet();
      skip();
      const SourceLocation at = cur_.location();
      std::string name = cur_.identifier("where constraint");
      if (name == "control") name = "suspend";
      if (std::find(seen.begin(), seen.end(), name) != seen.end()) {
        TextCursor::fail_at(fmt::format("duplicate where clause '{}'", name), at);
      }
      seen.push_back(name);
      auto real = [this](std::string_view what) { return cur_.number(what); };
      auto count = [this](std::string_view what) { return cur_.integer(what); };
      if (name == "input_quality") {
        q.input_levels = value_list("input_quality");
      } else if (name == "output_quality") {
        Bounds<std::vector<double>> b;
        bounds(b, "output_quality", [this](std::string_view what) { return value_list(what); });
        if (b.minimum) q.output_min = std::move(b.minimum);
        if (b.maximum) q.output_max = std::move(b.maximum);
      } else if (name == "reliability") {
        bounds(q.reliability, "reliability", real);
      } else if (name == "operate_prob") {
        bounds(q.operate_prob, "operate_prob", real);
      } else if (name == "failure") {
        bounds(q.failure, "failure", count);
      } else if (name == "suspend") {
        bounds(q.suspend, "suspend", count);
      } else {
        TextCursor::fail_at(fmt::format("unknown where constraint '{}'", name), at);
      }
    }
  }

  TextCursor cur_;
};

std::string render_list(const std::vector<double>& values) {
  std::vector<std::string> parts;
  for (double v : values) parts.push_back(format_number(v));
  return fmt::format("{{ {} }}", fmt::join(parts, ", "));
}

}  // namespace

std::vector<Query> parse_queries(std::string_view text) { return QueryParser(text).parse_all(); }

Query parse_query(std::string_view text) {
  auto all = parse_queries(text);
  if (all.size() != 1) {
    throw ParseError(fmt::format("expected one query block, found {}", all.size()), all[1].location);
  }
  return std::move(all.front());
}

std::string render_query(const Query& q) {
  std::string out = "begin_query";
  if (!q.name.empty()) out += " " + q.name;
  out += "\n    select\n";
  for (SelectField f : q.select) out += fmt::format("        - {}\n", field_name(f));
  out += "    from\n";
  out += fmt::format("        - system {}\n", q.system_file);
  out += fmt::format("        - qrspec {}\n", q.qrspec_file);

  std::string where;
  auto bound_text = [](const auto& v) {
    if constexpr (std::is_same_v<std::decay_t<decltype(v)>, double>) {
      return format_number(v);
    } else {
      return fmt::format("{}", v);
    }
  };
  auto scalar = [&](std::string_view name, const auto& b) {
    if (b.empty()) return;
    where += fmt::format("        - {}\n", name);
    if (b.minimum) where += fmt::format("            - minimum {}\n", bound_text(*b.minimum));
    if (b.maximum) where += fmt::format("            - maximum {}\n", bound_text(*b.maximum));
  };
  if (q.input_levels) where += fmt::format("        - input_quality {}\n", render_list(*q.input_levels));
  if (q.output_min || q.output_max) {
    where += "        - output_quality\n";
    if (q.output_min) where += fmt::format("            - minimum {}\n", render_list(*q.output_min));
    if (q.output_max) where += fmt::format("            - maximum {}\n", render_list(*q.output_max));
  }
  scalar("reliability", q.reliability);
  scalar("operate_prob", q.operate_prob);
  scalar("failure", q.failure);
  scalar("suspend", q.suspend);
  if (!where.empty()) out += "    where\n" + where;
  out += "end_query\n";
  return out;
}

}  // namespace qrcomp
