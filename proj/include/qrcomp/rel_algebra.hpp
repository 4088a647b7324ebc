#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace qrcomp {

// Reliability variable r_{component,mode}; modes are 1-based.
struct VarId {
  std::string component;
  std::size_t mode = 0;

  friend auto operator<=>(const VarId&, const VarId&) = default;
  friend bool operator==(const VarId&, const VarId&) = default;
};

// "C3" renders as "3", any other name verbatim.
std::string component_label(const std::string& component);
std::string variable_label(const VarId& v);

using Monomial = std::vector<VarId>;  // sorted, no repeats
using Assignment = std::map<VarId, double>;

// Multilinear polynomial with integer coefficients. Since every variable is
// a probability of a single event, r*r collapses to r.
class RelExpr {
 public:
  RelExpr() = default;  // zero

  static RelExpr constant(std::int64_t c);
  static RelExpr variable(VarId v);
  static RelExpr complement(VarId v);  // 1 - v

  const std::map<Monomial, std::int64_t>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  std::set<VarId> variables() const;

  RelExpr& operator+=(const RelExpr& other);
  RelExpr& operator-=(const RelExpr& other);
  RelExpr& operator*=(const RelExpr& other);
  friend RelExpr operator+(RelExpr a, const RelExpr& b) { return a += b; }
  friend RelExpr operator-(RelExpr a, const RelExpr& b) { return a -= b; }
  friend RelExpr operator*(const RelExpr& a, const RelExpr& b);
  friend bool operator==(const RelExpr&, const RelExpr&) = default;

  // Expanded form, lower degree first: "1 - r_{1,1} - r_{1,2} + r_{1,1}.r_{1,2}".
  std::string render() const;

 private:
  void add_term(const Monomial& m, std::int64_t c);

  std::map<Monomial, std::int64_t> terms_;
};

RelExpr poly_mul(const RelExpr& a, const RelExpr& b);

// Throws ValidationError when a variable of e has no assigned value.
double poly_eval(const RelExpr& e, const Assignment& assignment);

// 1 - prod_paths (1 - prod_{v in path} v), normalized. No paths gives 0.
RelExpr path_success_expr(const std::vector<std::vector<VarId>>& paths);

}  // namespace qrcomp
