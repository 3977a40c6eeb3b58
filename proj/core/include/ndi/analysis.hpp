#pragma once

// Cross-network study: per-network summaries (size, spectral radius ratio,
// NDI, NSI) over a manifest of edge-list files, and linear fits between the
// network-level measures.

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ndi/graph.hpp"
#include "ndi/nsi.hpp"
#include "ndi/numerics.hpp"
#include "ndi/pipeline.hpp"

namespace ndi {

/// Largest adjacency eigenvalue divided by the mean degree. Connected graphs only.
double spectral_radius_ratio(const Graph& g);

struct NetworkSummary {
  std::string name;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  double lambda_sp = 1.0;
  double ndi = 1.0;
  double nsi = 1.0;
};

struct ManifestEntry {
  std::string name;
  std::filesystem::path path;
};

/// CSV with header `name,path`. Relative paths resolve against `base_dir`.
std::vector<ManifestEntry> parse_manifest(std::string_view text,
                                          const std::filesystem::path& base_dir = {});
std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path);

struct BatchOptions {
  bool lcc_mode = false;
  NdiOptions ndi;
  NsiOptions nsi;
  std::size_t threads = 1;
};

enum class FailureKind { none, input, numerical };

struct BatchResult {
  std::string name;
  std::filesystem::path path;
  std::optional<NetworkSummary> summary;
  FailureKind failure = FailureKind::none;
  std::string error;
};

/// Summary of one already-loaded graph; applies LCC extraction if requested.
NetworkSummary summarize_network(std::string name, const Graph& g, const BatchOptions& options);

/// One result per manifest entry, in manifest order. Failures are recorded
/// per entry and never abort the batch.
std::vector<BatchResult> batch_evaluate(std::span<const ManifestEntry> manifest,
                                        const BatchOptions& options = {});

struct FitRecord {
  std::string x_name;
  std::string y_name;
  LinearFit fit;
};

struct CorrelationStudy {
  std::vector<FitRecord> fits;
  std::vector<std::string> omitted;  // predictors that were constant
};

/// Fits ndi against lambda_sp and against nsi. Needs at least 3 summaries.
CorrelationStudy correlation_study(std::span<const NetworkSummary> summaries);

/// `name,nodes,edges,lambda_sp,ndi,nsi`
std::vector<NetworkSummary> parse_summary_csv(std::string_view text);
std::vector<NetworkSummary> read_summary_csv(const std::filesystem::path& path);

}  // namespace ndi
