#pragma once

#include "dnoether/combinatorial_set.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace dnoether {

inline constexpr const char* kReportSchema = "dnoether-report/1";

// Commands in the order they run; "analyze" expands to all of them.
const std::vector<std::string>& known_commands();

struct PlotWindow {
  std::int64_t x0 = 0, x1 = 0, y0 = 0, y1 = 0;
};

struct AnalysisRequest {
  GeneratorMatrix matrix;
  std::vector<std::string> commands;
  std::optional<PlotWindow> window;
  std::optional<std::size_t> btuple;
  std::optional<std::string> eset_face;  // face name or id; every face when absent
  std::optional<IntVector> eset_alpha;   // origin when absent
  bool metadata = false;                 // inference windows and timings; not deterministic
};

// JSON {"d": 2, "columns": [[0,2], ...]} or a whitespace matrix whose columns are generators
// (rows are generators with transpose). Lines starting with # are ignored.
GeneratorMatrix parse_matrix(const std::string& text, bool transpose = false);

// "a,b" is [0,a] × [0,b]; "x0:x1,y0:y1" gives both ends.
PlotWindow parse_window(const std::string& text);
IntVector parse_vector(const std::string& text);

// Validates commands and options against the matrix. Assumption checks on A happen here.
void validate(const AnalysisRequest& request);

// Rows from top to bottom: ● in S, ○ in the cone but not in S, · outside the cone.
std::vector<std::string> render_plot(const CombinatorialSet& s, const PlotWindow& window);
PlotWindow default_plot_window(const GeneratorMatrix& a);

nlohmann::ordered_json run(const AnalysisRequest& request);
std::string render_text(const nlohmann::ordered_json& report);

}  // namespace dnoether
