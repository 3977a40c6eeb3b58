#include "cli_app.hpp"

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "ndi/ndi.hpp"

namespace ndi::cli {

namespace {

enum class Command { ndi, nsi, centrality, batch, fit };
enum class Format { json, csv };

struct CliConfig {
  Command command = Command::ndi;
  std::string input;
  bool lcc_mode = false;
  AveragingConvention averaging = AveragingConvention::row_mean;
  StdDivisor divisor = StdDivisor::sample;
  double retention_threshold = 1.0;
  Format format = Format::json;
  std::optional<std::string> svg_output;
  std::optional<std::string> ndm_output;
  std::optional<std::string> output;
  std::optional<std::string> fit_from_csv;
  std::optional<std::string> study_output;
  ThresholdMethod nsi_method = ThresholdMethod::mst_bottleneck;
  NsiNormalization nsi_normalization = NsiNormalization::unit_norm;
  double epsilon = 1e-6;
  int precision = 6;
  std::size_t threads = 1;
};

NdiOptions ndi_options(const CliConfig& c) { return {c.retention_threshold, c.averaging, c.divisor}; }

NsiOptions nsi_options(const CliConfig& c) { return {c.nsi_method, c.nsi_normalization, c.epsilon}; }

// Writes to --output when given, otherwise to `out`.
void emit(const CliConfig& c, std::ostream& out, const std::string& text) {
  if (c.output) {
    write_text_file(*c.output, text);
  } else {
    out << text;
  }
}

Graph load_graph(const CliConfig& c, std::ostream& err) {
  auto parsed = read_edge_list(c.input);
  if (parsed.warnings.self_loops)
    err << "warning: dropped " << parsed.warnings.self_loops << " self-loop(s)\n";
  if (parsed.warnings.duplicate_edges)
    err << "warning: dropped " << parsed.warnings.duplicate_edges << " duplicate edge(s)\n";

  Graph g = std::move(parsed.graph);
  if (c.lcc_mode) {
    const auto cc = connected_components(g);
    if (cc.num_components > 1) {
      err << "note: using largest component (" << cc.largest_component_nodes.size() << " of "
          << g.node_count() << " nodes, " << cc.num_components << " components)\n";
      g = induced_subgraph(g, cc.largest_component_nodes);
    }
  }
  require_connected(g);
  return g;
}

int cmd_ndi(const CliConfig& c, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(c, err);
  const auto table = centrality_table(g);
  auto report = compute_ndi_from_table(table, ndi_options(c));
  report.edges = g.edge_count();
  const OutputFormat fmt{c.precision};

  if (c.format == Format::json) {
    auto doc = to_json(report, fmt);
    doc["nsi"] = to_json(compute_nsi_from_table(table, nsi_options(c)), fmt);
    emit(c, out, doc.dump(2) + "\n");
  } else {
    emit(c, out, ndi_nodes_csv(report, fmt));
  }
  if (c.ndm_output) write_text_file(*c.ndm_output, ndm_csv(report.ndm, fmt));
  if (c.svg_output) {
    const std::string title =
        "Sorted node-level NDI: " + std::filesystem::path(c.input).filename().string();
    write_text_file(*c.svg_output, render_sorted_ndi_svg(report, title));
  }
  return kOk;
}

int cmd_nsi(const CliConfig& c, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(c, err);
  const auto nsi = compute_nsi(g, nsi_options(c));
  const OutputFormat fmt{c.precision};
  if (c.format == Format::json) {
    nlohmann::json doc = {{"n", g.node_count()}, {"edges", g.edge_count()}, {"nsi", to_json(nsi, fmt)}};
    emit(c, out, doc.dump(2) + "\n");
  } else {
    emit(c, out,
         "nsi,min_threshold,method,normalization\n" + format_number(nsi.nsi, c.precision) + "," +
             format_number(nsi.min_threshold, c.precision) + "," + std::string(to_string(nsi.method)) +
             "," + std::string(to_string(nsi.normalization)) + "\n");
  }
  return kOk;
}

int cmd_centrality(const CliConfig& c, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(c, err);
  const auto table = centrality_table(g);
  const OutputFormat fmt{c.precision};
  if (c.format == Format::csv) {
    emit(c, out, metric_table_csv(table, fmt));
    return kOk;
  }
  nlohmann::json nodes = nlohmann::json::array();
  for (std::size_t v = 0; v < table.node_count(); ++v) {
    nlohmann::json node = {{"label", table.node_labels[v]}};
    for (std::size_t k = 0; k < table.metric_count(); ++k) {
      std::string key = table.column_names[k];
      for (char& ch : key) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
      node[key] = round_significant(table.values(v, k), c.precision);
    }
    nodes.push_back(std::move(node));
  }
  nlohmann::json doc = {{"n", g.node_count()}, {"edges", g.edge_count()}, {"nodes", std::move(nodes)}};
  emit(c, out, doc.dump(2) + "\n");
  return kOk;
}

void write_scatter_plots(const std::string& prefix_arg, const std::vector<NetworkSummary>& rows,
                         const std::optional<CorrelationStudy>& study) {
  std::string prefix = prefix_arg;
  if (prefix.size() > 4 && prefix.ends_with(".svg")) prefix.resize(prefix.size() - 4);

  ScatterPlot base;
  for (const auto& s : rows) {
    base.labels.push_back(s.name);
    base.y.push_back(s.ndi);
  }
  base.y_label = "Network-level NDI";

  auto fit_for = [&](std::string_view x) -> std::optional<LinearFit> {
    if (!study) return std::nullopt;
    for (const auto& f : study->fits)
      if (f.x_name == x) return f.fit;
    return std::nullopt;
  };

  ScatterPlot lambda = base;
  lambda.title = "NDI vs spectral radius ratio for node degree";
  lambda.x_label = "lambda_sp";
  for (const auto& s : rows) lambda.x.push_back(s.lambda_sp);
  lambda.fit = fit_for("lambda_sp");
  write_text_file(prefix + "_lambda_sp.svg", render_scatter_svg(lambda));

  ScatterPlot nsi = base;
  nsi.title = "NDI vs node similarity index";
  nsi.x_label = "NSI";
  for (const auto& s : rows) nsi.x.push_back(s.nsi);
  nsi.fit = fit_for("nsi");
  write_text_file(prefix + "_nsi.svg", render_scatter_svg(nsi));
}

std::string_view failure_name(FailureKind k) {
  switch (k) {
    case FailureKind::input: return "input";
    case FailureKind::numerical: return "numerical";
    case FailureKind::none: break;
  }
  return "none";
}

int cmd_batch(const CliConfig& c, std::ostream& out, std::ostream& err) {
  const OutputFormat fmt{c.precision};
  std::vector<NetworkSummary> summaries;
  std::vector<BatchResult> failures;
  std::size_t attempted = 0;

  if (c.fit_from_csv) {
    summaries = read_summary_csv(*c.fit_from_csv);
  } else {
    if (c.input.empty()) throw std::invalid_argument("batch needs a manifest or --fit-from-csv");
    const auto manifest = read_manifest(c.input);
    BatchOptions opts{c.lcc_mode, ndi_options(c), nsi_options(c), c.threads};
    attempted = manifest.size();
    for (auto& r : batch_evaluate(manifest, opts)) {
      if (r.summary) {
        summaries.push_back(*r.summary);
      } else {
        err << "error: " << r.name << " (" << r.path.string() << "): " << r.error << "\n";
        failures.push_back(std::move(r));
      }
    }
  }

  std::optional<CorrelationStudy> study;
  std::string study_error;
  if (summaries.size() >= 3) {
    study = correlation_study(summaries);
  } else {
    study_error = "correlation study needs at least 3 networks";
  }

  nlohmann::json study_json = study ? to_json(*study, fmt) : nlohmann::json{{"error", study_error}};
  if (c.study_output) write_text_file(*c.study_output, study_json.dump(2) + "\n");

  if (c.format == Format::csv) {
    emit(c, out, summaries_csv(summaries, fmt));
  } else {
    nlohmann::json doc;
    doc["networks"] = nlohmann::json::array();
    for (const auto& s : summaries) doc["networks"].push_back(to_json(s, fmt));
    doc["failures"] = nlohmann::json::array();
    for (const auto& f : failures) {
      doc["failures"].push_back({{"name", f.name},
                                 {"path", f.path.string()},
                                 {"kind", std::string(failure_name(f.failure))},
                                 {"error", f.error}});
    }
    doc["study"] = study_json;
    emit(c, out, doc.dump(2) + "\n");
  }

  if (c.svg_output) write_scatter_plots(*c.svg_output, summaries, study);

  if (attempted > 0 && failures.size() == attempted) {
    for (const auto& f : failures)
      if (f.failure == FailureKind::numerical) return kNumericalError;
    return kInputError;
  }
  return kOk;
}

int cmd_fit(const CliConfig& c, std::ostream& out) {
  const auto summaries = read_summary_csv(c.input);
  const auto study = correlation_study(summaries);
  emit(c, out, to_json(study, OutputFormat{c.precision}).dump(2) + "\n");
  return kOk;
}

// Raw spellings of the enum-valued flags, resolved after parsing.
struct EnumFlags {
  std::string format = "json";
  std::string convention = "row-mean";
  std::string divisor = "sample";
  std::string nsi_method = "mst";
  std::string nsi_normalization = "unit-norm";
};

void resolve(const EnumFlags& f, CliConfig& c) {
  c.format = f.format == "csv" ? Format::csv : Format::json;
  c.averaging = *parse_averaging_convention(f.convention);
  c.divisor = f.divisor == "population" ? StdDivisor::population : StdDivisor::sample;
  c.nsi_method = *parse_threshold_method(f.nsi_method);
  c.nsi_normalization = *parse_nsi_normalization(f.nsi_normalization);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Node dissimilarity analysis for complex networks"};
  app.name("ndi");
  app.require_subcommand(1);

  CliConfig c;
  EnumFlags flags;

  auto add_graph_options = [&](CLI::App* sub) {
    sub->add_flag("--lcc", c.lcc_mode, "Analyze the largest connected component");
    sub->add_option("--precision", c.precision, "Significant digits in output")
        ->check(CLI::Range(1, 17));
    sub->add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("-o,--output", c.output, "Write the report here instead of stdout");
  };
  auto add_ndi_options = [&](CLI::App* sub) {
    sub->add_option("--convention", flags.convention, "NDM averaging convention")
        ->check(CLI::IsMember({"row-mean", "nondiag-nm1", "entry-mean"}));
    sub->add_option("--retention", c.retention_threshold, "Minimum PC variance to retain");
    sub->add_option("--divisor", flags.divisor, "Standard deviation divisor")
        ->check(CLI::IsMember({"sample", "population"}));
  };
  auto add_nsi_options = [&](CLI::App* sub) {
    sub->add_option("--epsilon", c.epsilon, "Binary-search tolerance for NSI")
        ->check(CLI::PositiveNumber);
    sub->add_option("--nsi-method", flags.nsi_method, "Connectivity threshold method")
        ->check(CLI::IsMember({"mst", "bsearch"}));
    sub->add_option("--nsi-normalization", flags.nsi_normalization, "Metric normalization for NSI")
        ->check(CLI::IsMember({"unit-norm", "min-max"}));
  };

  auto* ndi_cmd = app.add_subcommand("ndi", "Network- and node-level NDI of one graph");
  ndi_cmd->add_option("edges", c.input, "Edge-list file")->required();
  add_graph_options(ndi_cmd);
  add_ndi_options(ndi_cmd);
  add_nsi_options(ndi_cmd);
  ndi_cmd->add_option("--svg", c.svg_output, "Plot of sorted node-level NDI");
  ndi_cmd->add_option("--ndm-csv", c.ndm_output, "Export the node dissimilarity matrix");
  ndi_cmd->callback([&] { c.command = Command::ndi; });

  auto* nsi_cmd = app.add_subcommand("nsi", "Node similarity index of one graph");
  nsi_cmd->add_option("edges", c.input, "Edge-list file")->required();
  add_graph_options(nsi_cmd);
  add_nsi_options(nsi_cmd);
  nsi_cmd->callback([&] { c.command = Command::nsi; });

  auto* cen_cmd = app.add_subcommand("centrality", "DEG/EVC/BWC/CLC table of one graph");
  cen_cmd->add_option("edges", c.input, "Edge-list file")->required();
  add_graph_options(cen_cmd);
  cen_cmd->callback([&] { c.command = Command::centrality; });

  auto* batch_cmd = app.add_subcommand("batch", "Summaries and correlation study over a manifest");
  batch_cmd->add_option("manifest", c.input, "CSV with header name,path");
  add_graph_options(batch_cmd);
  add_ndi_options(batch_cmd);
  add_nsi_options(batch_cmd);
  batch_cmd->add_option("--svg", c.svg_output, "Prefix for the two scatter plots");
  batch_cmd->add_option("--fit-from-csv", c.fit_from_csv,
                        "Skip evaluation; fit summaries from a name,nodes,edges,lambda_sp,ndi,nsi CSV");
  batch_cmd->add_option("--study", c.study_output, "Write the correlation study JSON here");
  batch_cmd->add_option("--threads", c.threads, "Graphs evaluated concurrently")
      ->check(CLI::PositiveNumber);
  batch_cmd->callback([&] { c.command = Command::batch; });

  auto* fit_cmd = app.add_subcommand("fit", "Correlation study from a summary CSV");
  fit_cmd->add_option("summary", c.input, "CSV name,nodes,edges,lambda_sp,ndi,nsi")->required();
  add_graph_options(fit_cmd);
  fit_cmd->callback([&] { c.command = Command::fit; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  resolve(flags, c);

  try {
    switch (c.command) {
      case Command::ndi: return cmd_ndi(c, out, err);
      case Command::nsi: return cmd_nsi(c, out, err);
      case Command::centrality: return cmd_centrality(c, out, err);
      case Command::batch: return cmd_batch(c, out, err);
      case Command::fit: return cmd_fit(c, out);
    }
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << "\n";
    return kNumericalError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace ndi::cli
