#include "ndi/report_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "ndi/csv.hpp"

namespace ndi {

using nlohmann::json;

std::string format_number(double x, int digits) {
  digits = std::clamp(digits, 1, 17);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

double round_significant(double x, int digits) {
  if (!std::isfinite(x) || x == 0.0 || digits >= 17) return x;
  return std::strtod(format_number(x, digits).c_str(), nullptr);
}

namespace {

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

json rounded(std::span<const double> xs, int p) {
  json arr = json::array();
  for (double x : xs) arr.push_back(round_significant(x, p));
  return arr;
}

}  // namespace

json to_json(const NdiReport& r, const OutputFormat& fmt) {
  const int p = fmt.precision;
  const std::size_t n = r.node_labels.size();
  const std::size_t m = r.retained_m();

  json network = {
      {"n", n},
      {"edges", r.edges},
      {"ndi", round_significant(r.network_ndi, p)},
      {"ndm_eigenvalue", round_significant(r.ndm_eigenvalue, p)},
      {"ndm_average", round_significant(r.ndm_average, p)},
      {"convention", std::string(to_string(r.averaging))},
      {"retained_m", m},
      {"pc_variances", r.pca ? rounded(r.pca->pc_variances, p) : json::array()},
      {"degenerate", r.degenerate},
      {"degeneracy_flags", r.degeneracy_flags},
      {"elbow_index", r.elbow.elbow_index},
      {"dissimilar_count", r.dissimilar_nodes.size()},
      {"dissimilar_fraction",
       round_significant(static_cast<double>(r.dissimilar_nodes.size()) / static_cast<double>(n), p)},
  };

  std::vector<char> dissimilar(n, 0);
  for (std::size_t v : r.elbow.dissimilar) dissimilar[v] = 1;

  json nodes = json::array();
  for (std::size_t v = 0; v < n; ++v) {
    json node = {{"label", r.node_labels[v]}};
    for (std::size_t c = 0; c < r.metrics.metric_count(); ++c)
      node[lowercase(r.metrics.column_names[c])] = round_significant(r.metrics.values(v, c), p);
    node["scores"] = r.pca ? rounded(r.pca->scores.row(v).first(m), p) : json::array();
    node["node_ndi"] = round_significant(r.node_ndi[v], p);
    node["rank"] = r.rank[v];
    node["category"] = dissimilar[v] ? "dissimilar" : "similar";
    nodes.push_back(std::move(node));
  }
  return {{"network", std::move(network)}, {"nodes", std::move(nodes)}};
}

json to_json(const NsiResult& nsi, const OutputFormat& fmt) {
  return {
      {"nsi", round_significant(nsi.nsi, fmt.precision)},
      {"min_threshold", round_significant(nsi.min_threshold, fmt.precision)},
      {"method", std::string(to_string(nsi.method))},
      {"normalization", std::string(to_string(nsi.normalization))},
      {"degenerate_columns", nsi.degenerate_columns},
  };
}

json to_json(const CorrelationStudy& study, const OutputFormat& fmt) {
  json fits = json::array();
  for (const auto& f : study.fits) {
    fits.push_back({
        {"x", f.x_name},
        {"y", f.y_name},
        {"slope", round_significant(f.fit.slope, fmt.precision)},
        {"intercept", round_significant(f.fit.intercept, fmt.precision)},
        {"r_squared", round_significant(f.fit.r_squared, fmt.precision)},
    });
  }
  return {{"fits", std::move(fits)}, {"omitted", study.omitted}};
}

json to_json(const NetworkSummary& s, const OutputFormat& fmt) {
  return {
      {"name", s.name},
      {"nodes", s.nodes},
      {"edges", s.edges},
      {"lambda_sp", round_significant(s.lambda_sp, fmt.precision)},
      {"ndi", round_significant(s.ndi, fmt.precision)},
      {"nsi", round_significant(s.nsi, fmt.precision)},
  };
}

std::string metric_table_csv(const MetricTable& t, const OutputFormat& fmt) {
  csv::Row header{"node"};
  for (const auto& c : t.column_names) header.push_back(lowercase(c));
  std::string out = csv::join(header) + "\n";
  for (std::size_t r = 0; r < t.node_count(); ++r) {
    csv::Row row{t.node_labels[r]};
    for (double x : t.values.row(r)) row.push_back(format_number(x, fmt.precision));
    out += csv::join(row) + "\n";
  }
  return out;
}

std::string ndi_nodes_csv(const NdiReport& r, const OutputFormat& fmt) {
  csv::Row header{"node"};
  for (const auto& c : r.metrics.column_names) header.push_back(lowercase(c));
  for (const char* h : {"node_ndi", "rank", "category"}) header.emplace_back(h);
  std::string out = csv::join(header) + "\n";

  std::vector<char> dissimilar(r.node_labels.size(), 0);
  for (std::size_t v : r.elbow.dissimilar) dissimilar[v] = 1;
  for (std::size_t v = 0; v < r.node_labels.size(); ++v) {
    csv::Row row{r.node_labels[v]};
    for (double x : r.metrics.values.row(v)) row.push_back(format_number(x, fmt.precision));
    row.push_back(format_number(r.node_ndi[v], fmt.precision));
    row.push_back(std::to_string(r.rank[v]));
    row.emplace_back(dissimilar[v] ? "dissimilar" : "similar");
    out += csv::join(row) + "\n";
  }
  return out;
}

std::string ndm_csv(const NodeDissimilarityMatrix& ndm, const OutputFormat& fmt) {
  std::string out;
  for (std::size_t i = 0; i < ndm.dim(); ++i) {
    for (std::size_t j = 0; j < ndm.dim(); ++j) {
      if (j) out += ',';
      out += format_number(ndm(i, j), fmt.precision);
    }
    out += '\n';
  }
  return out;
}

std::string summaries_csv(std::span<const NetworkSummary> summaries, const OutputFormat& fmt) {
  std::string out = "name,nodes,edges,lambda_sp,ndi,nsi\n";
  for (const auto& s : summaries) {
    out += csv::join({s.name, std::to_string(s.nodes), std::to_string(s.edges),
                      format_number(s.lambda_sp, fmt.precision), format_number(s.ndi, fmt.precision),
                      format_number(s.nsi, fmt.precision)});
    out += '\n';
  }
  return out;
}

}  // namespace ndi
