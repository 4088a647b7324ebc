#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qrcomp/qr_model.hpp"
#include "qrcomp/render.hpp"
#include "qrcomp/sqdl.hpp"

namespace qrcomp {

// Components whose whole segment is FAILED.
std::size_t failure_count(const Configuration& config, const SlotLayout& layout);
// SUSPENDED slots over the whole configuration.
std::size_t suspend_count(const Configuration& config);

struct ResultRow {
  Configuration config;
  QualityMap quality;  // as displayed (possibly clipped)
  double reliability = 0.0;
  double operate_prob = 0.0;
  std::size_t failures = 0;
  std::size_t suspensions = 0;
};

struct ResultTable {
  std::string query_name;
  std::vector<SelectField> fields;
  SlotLayout layout;
  std::vector<ResultRow> rows;  // by operate_prob descending, then configuration
  std::size_t max_failures = 0;
  std::vector<std::string> inadmissible;  // no row has these fully failed
};

struct QueryOptions {
  std::filesystem::path base_dir;  // resolves relative paths in the from block
  std::optional<std::filesystem::path> system_override;
  std::optional<std::filesystem::path> qrspec_override;
  std::optional<ParallelPolicy> policy_override;
  double tolerance = 1e-9;
};

ResultTable evaluate_query(const Query& q, const SystemGraph& graph,
                           const std::vector<ComponentSpec>& specs, const QRModel& model,
                           double tolerance = 1e-9);

// Reads the query's files, builds the model and evaluates. Override notices
// are appended to `warnings`.
ResultTable run_query(const Query& q, const QueryOptions& options,
                      std::vector<std::string>* warnings = nullptr);

std::string render_mode_statuses(const Configuration& config, const SlotLayout& layout);

Table to_table(const ResultTable& result);

}  // namespace qrcomp
