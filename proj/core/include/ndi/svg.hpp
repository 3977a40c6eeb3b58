#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ndi/numerics.hpp"
#include "ndi/pipeline.hpp"

namespace ndi {

/// Descending node-level NDI curve. Dissimilar points are red, similar ones
/// green; a dashed vertical line marks the elbow unless the report is flat.
std::string render_sorted_ndi_svg(const NdiReport& report, std::string_view title = {});

struct ScatterPlot {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<std::string> labels;
  std::vector<double> x;
  std::vector<double> y;
  std::optional<LinearFit> fit;  // drawn as a line with an R^2 annotation
};

std::string render_scatter_svg(const ScatterPlot& plot);

/// Throws std::runtime_error when the file cannot be written.
void write_text_file(const std::filesystem::path& path, std::string_view content);

std::string xml_escape(std::string_view text);

}  // namespace ndi
