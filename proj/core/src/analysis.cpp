#include "ndi/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <sstream>
#include <thread>

#include "ndi/csv.hpp"

namespace ndi {

double spectral_radius_ratio(const Graph& g) {
  require_connected(g);
  auto apply = [&g](std::span<const double> x, std::span<double> y) {
    for (NodeIndex v = 0; v < g.node_count(); ++v) {
      double s = 0.0;
      for (NodeIndex w : g.neighbors(v)) s += x[w];
      y[v] = s;
    }
  };
  const auto top = power_iteration_top(g.node_count(), apply);
  const double mean_degree =
      2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.node_count());
  if (mean_degree == 0.0) throw GraphError("spectral radius ratio of an edgeless graph");
  return top.pair.value / mean_degree;
}

namespace {

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::size_t column_of(const csv::Row& header, std::string_view name) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (trim(header[i]) == name) return i;
  }
  throw std::invalid_argument("csv header lacks column '" + std::string(name) + "'");
}

double to_double(const std::string& s, std::string_view what) {
  const std::string t = trim(s);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || ptr != t.data() + t.size())
    throw std::invalid_argument("invalid number for " + std::string(what) + ": '" + s + "'");
  return v;
}

}  // namespace

std::vector<ManifestEntry> parse_manifest(std::string_view text,
                                          const std::filesystem::path& base_dir) {
  const auto rows = csv::parse(text);
  if (rows.empty()) throw std::invalid_argument("manifest is empty (expected header name,path)");
  const std::size_t name_col = column_of(rows[0], "name");
  const std::size_t path_col = column_of(rows[0], "path");

  std::vector<ManifestEntry> out;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (r.size() <= std::max(name_col, path_col))
      throw std::invalid_argument("manifest row " + std::to_string(i + 1) + " is short");
    std::filesystem::path p = trim(r[path_col]);
    if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
    out.push_back({trim(r[name_col]), std::move(p)});
  }
  return out;
}

std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path) {
  return parse_manifest(read_text(path), path.parent_path());
}

NetworkSummary summarize_network(std::string name, const Graph& input,
                                 const BatchOptions& options) {
  const Graph g = options.lcc_mode ? largest_component(input) : input;
  require_connected(g);

  const auto table = centrality_table(g);
  NetworkSummary s;
  s.name = std::move(name);
  s.nodes = g.node_count();
  s.edges = g.edge_count();
  s.lambda_sp = spectral_radius_ratio(g);
  s.ndi = compute_ndi_from_table(table, options.ndi).network_ndi;
  s.nsi = compute_nsi_from_table(table, options.nsi).nsi;
  return s;
}

namespace {

BatchResult evaluate_one(const ManifestEntry& entry, const BatchOptions& options) {
  BatchResult r{entry.name, entry.path, std::nullopt, FailureKind::none, {}};
  try {
    const auto parsed = read_edge_list(entry.path);
    r.summary = summarize_network(entry.name, parsed.graph, options);
  } catch (const NumericalError& e) {
    r.failure = FailureKind::numerical;
    r.error = e.what();
  } catch (const std::exception& e) {
    r.failure = FailureKind::input;
    r.error = e.what();
  }
  return r;
}

}  // namespace

std::vector<BatchResult> batch_evaluate(std::span<const ManifestEntry> manifest,
                                        const BatchOptions& options) {
  std::vector<BatchResult> results(manifest.size());
  const std::size_t workers = std::clamp<std::size_t>(options.threads, 1, manifest.size() + 1);
  if (workers <= 1 || manifest.size() <= 1) {
    for (std::size_t i = 0; i < manifest.size(); ++i) results[i] = evaluate_one(manifest[i], options);
    return results;
  }

  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < manifest.size(); i = next++) {
          results[i] = evaluate_one(manifest[i], options);
        }
      });
    }
  }
  return results;
}

CorrelationStudy correlation_study(std::span<const NetworkSummary> summaries) {
  if (summaries.size() < 3)
    throw std::invalid_argument("correlation study needs at least 3 networks");

  std::vector<double> lambda, ndi, nsi;
  for (const auto& s : summaries) {
    lambda.push_back(s.lambda_sp);
    ndi.push_back(s.ndi);
    nsi.push_back(s.nsi);
  }

  CorrelationStudy study;
  auto fit = [&](std::string x_name, const std::vector<double>& x) {
    if (std::all_of(x.begin(), x.end(), [&](double v) { return v == x.front(); })) {
      study.omitted.push_back(std::move(x_name));
      return;
    }
    study.fits.push_back({std::move(x_name), "ndi", linear_fit(x, ndi)});
  };
  fit("lambda_sp", lambda);
  fit("nsi", nsi);
  return study;
}

std::vector<NetworkSummary> parse_summary_csv(std::string_view text) {
  const auto rows = csv::parse(text);
  if (rows.empty()) throw std::invalid_argument("summary csv is empty");
  const auto& h = rows[0];
  const std::size_t c_name = column_of(h, "name");
  const std::size_t c_nodes = column_of(h, "nodes");
  const std::size_t c_edges = column_of(h, "edges");
  const std::size_t c_lambda = column_of(h, "lambda_sp");
  const std::size_t c_ndi = column_of(h, "ndi");
  const std::size_t c_nsi = column_of(h, "nsi");
  const std::size_t width = std::max({c_name, c_nodes, c_edges, c_lambda, c_ndi, c_nsi}) + 1;

  std::vector<NetworkSummary> out;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (r.size() < width)
      throw std::invalid_argument("summary csv row " + std::to_string(i + 1) + " is short");
    NetworkSummary s;
    s.name = trim(r[c_name]);
    s.nodes = static_cast<std::size_t>(to_double(r[c_nodes], "nodes"));
    s.edges = static_cast<std::size_t>(to_double(r[c_edges], "edges"));
    s.lambda_sp = to_double(r[c_lambda], "lambda_sp");
    s.ndi = to_double(r[c_ndi], "ndi");
    s.nsi = to_double(r[c_nsi], "nsi");
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<NetworkSummary> read_summary_csv(const std::filesystem::path& path) {
  return parse_summary_csv(read_text(path));
}

}  // namespace ndi
