#pragma once

#include <nlohmann/json.hpp>
#include <span>
#include <string>

#include "ndi/analysis.hpp"
#include "ndi/centrality.hpp"
#include "ndi/nsi.hpp"
#include "ndi/pipeline.hpp"

namespace ndi {

/// Numbers are rounded to `precision` significant digits before they are
/// stored, so dumps are stable across platforms. 17 keeps full precision.
struct OutputFormat {
  int precision = 6;
};

double round_significant(double x, int digits);

/// `x` printed with at most `digits` significant digits ("%.*g").
std::string format_number(double x, int digits);

/// {network: {...}, nodes: [...]}
nlohmann::json to_json(const NdiReport& report, const OutputFormat& fmt = {});
nlohmann::json to_json(const NsiResult& nsi, const OutputFormat& fmt = {});
nlohmann::json to_json(const CorrelationStudy& study, const OutputFormat& fmt = {});
nlohmann::json to_json(const NetworkSummary& summary, const OutputFormat& fmt = {});

/// Header `node,<lowercased column names>`; labels quoted when needed.
std::string metric_table_csv(const MetricTable& table, const OutputFormat& fmt = {});

/// Per-node rows: label, metrics, node_ndi, rank, category.
std::string ndi_nodes_csv(const NdiReport& report, const OutputFormat& fmt = {});

/// n x n, no header, node index order.
std::string ndm_csv(const NodeDissimilarityMatrix& ndm, const OutputFormat& fmt = {});

/// `name,nodes,edges,lambda_sp,ndi,nsi`
std::string summaries_csv(std::span<const NetworkSummary> summaries, const OutputFormat& fmt = {});

}  // namespace ndi
