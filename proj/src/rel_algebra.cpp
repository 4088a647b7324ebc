#include "qrcomp/rel_algebra.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "qrcomp/errors.hpp"

namespace qrcomp {

std::string component_label(const std::string& component) {
  if (component.size() > 1 && (component[0] == 'C' || component[0] == 'c') &&
      std::all_of(component.begin() + 1, component.end(),
                  [](unsigned char ch) { return std::isdigit(ch) != 0; })) {
    return component.substr(1);
  }
  return component;
}

std::string variable_label(const VarId& v) {
  return fmt::format("r_{{{},{}}}", component_label(v.component), v.mode);
}

RelExpr RelExpr::constant(std::int64_t c) {
  RelExpr e;
  if (c != 0) e.terms_.emplace(Monomial{}, c);
  return e;
}

RelExpr RelExpr::variable(VarId v) {
  RelExpr e;
  e.terms_.emplace(Monomial{std::move(v)}, 1);
  return e;
}

RelExpr RelExpr::complement(VarId v) {
  RelExpr e = constant(1);
  e.terms_.emplace(Monomial{std::move(v)}, -1);
  return e;
}

bool RelExpr::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

std::set<VarId> RelExpr::variables() const {
  std::set<VarId> out;
  for (const auto& [m, c] : terms_) out.insert(m.begin(), m.end());
  return out;
}

void RelExpr::add_term(const Monomial& m, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

RelExpr& RelExpr::operator+=(const RelExpr& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

RelExpr& RelExpr::operator-=(const RelExpr& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

RelExpr operator*(const RelExpr& a, const RelExpr& b) {
  RelExpr out;
  Monomial merged;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      merged.clear();
      std::set_union(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(merged));
      out.add_term(merged, ca * cb);
    }
  }
  return out;
}

RelExpr& RelExpr::operator*=(const RelExpr& other) {
  *this = *this * other;
  return *this;
}

std::string RelExpr::render() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<const Monomial*, std::int64_t>> order;
  order.reserve(terms_.size());
  for (const auto& [m, c] : terms_) order.emplace_back(&m, c);
  std::stable_sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
    return x.first->size() < y.first->size();
  });

  std::string out;
  bool first = true;
  for (const auto& [m, c] : order) {
    const std::int64_t magnitude = std::llabs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string body;
    for (const VarId& v : *m) {
      if (!body.empty()) body += ".";
      body += variable_label(v);
    }
    if (body.empty()) {
      out += std::to_string(magnitude);
    } else if (magnitude == 1) {
      out += body;
    } else {
      out += fmt::format("{}.{}", magnitude, body);
    }
  }
  return out;
}

RelExpr poly_mul(const RelExpr& a, const RelExpr& b) { return a * b; }

double poly_eval(const RelExpr& e, const Assignment& assignment) {
  double total = 0.0;
  for (const auto& [m, c] : e.terms()) {
    double term = static_cast<double>(c);
    for (const VarId& v : m) {
      auto it = assignment.find(v);
      if (it == assignment.end()) {
        throw ValidationError(fmt::format("no value assigned to {}", variable_label(v)));
      }
      term *= it->second;
    }
    total += term;
  }
  return total;
}

RelExpr path_success_expr(const std::vector<std::vector<VarId>>& paths) {
  if (paths.empty()) return RelExpr{};
  RelExpr all_fail = RelExpr::constant(1);
  for (const auto& path : paths) {
    RelExpr success = RelExpr::constant(1);
    for (const VarId& v : path) success *= RelExpr::variable(v);
    all_fail *= RelExpr::constant(1) - success;
  }
  return RelExpr::constant(1) - all_fail;
}

}  // namespace qrcomp
