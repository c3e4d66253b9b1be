#include "dnoether/errors.hpp"
#include "dnoether/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>

namespace {

enum Exit { kOk = 0, kInput = 2, kAssumption = 3, kInternal = 4, kBudget = 5 };

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw dnoether::ParseError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorics of rings of differential operators on affine semigroup rings"};
  app.require_subcommand(1);
  auto* analyze = app.add_subcommand("analyze", "Analyze the semigroup generated by the columns of a matrix");
  std::string path;
  std::vector<std::string> commands;
  std::string window, alpha, face, format = "json";
  std::optional<std::size_t> btuple;
  bool transpose = false, metadata = false;
  analyze->add_option("input", path, "matrix file, or - for stdin")->required();
  analyze->add_option("--cmd", commands, "std-expr scored s2 eset omega verdict plot, or analyze (default)")
      ->delimiter(',');
  analyze->add_option("--window", window, "plot window a,b or x0:x1,y0:y1");
  analyze->add_option("--btuple", btuple, "index into the compatible tuples used for omega");
  analyze->add_option("--face", face, "face for eset (name such as sigma1 or {0}, or id)");
  analyze->add_option("--alpha", alpha, "point for eset, comma separated");
  analyze->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  analyze->add_flag("--transpose", transpose, "text input lists one generator per row");
  analyze->add_flag("--meta", metadata, "include inference windows and timings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInput;
  }

  try {
    dnoether::AnalysisRequest req;
    req.matrix = dnoether::parse_matrix(slurp(path), transpose);
    req.commands = commands.empty() ? std::vector<std::string>{"analyze"} : commands;
    if (!window.empty()) req.window = dnoether::parse_window(window);
    req.btuple = btuple;
    if (!face.empty()) req.eset_face = face;
    if (!alpha.empty()) req.eset_alpha = dnoether::parse_vector(alpha);
    req.metadata = metadata;
    const auto report = dnoether::run(req);
    if (format == "json")
      std::cout << report.dump(2) << "\n";
    else
      std::cout << dnoether::render_text(report);
    return kOk;
  } catch (const dnoether::AssumptionViolation& e) {
    std::cerr << "assumption violated: " << e.what() << "\n";
    return kAssumption;
  } catch (const dnoether::InternalAssertion& e) {
    std::cerr << "internal assertion failed: " << e.what() << "\n";
    return kInternal;
  } catch (const dnoether::InferenceBudgetExceeded& e) {
    std::cerr << "search budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const dnoether::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const dnoether::UnsupportedDimension& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
}
