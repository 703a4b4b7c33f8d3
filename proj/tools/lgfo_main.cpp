#include "lgfo/csv_io.hpp"
#include "lgfo/measures.hpp"
#include "lgfo/report.hpp"
#include "lgfo/synthetic.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

int cmd_run(const std::string& data_path, const std::string& config_path,
            const std::string& report_path, const std::string& curves_path) {
  const lgfo::Dataset dataset = lgfo::parse_dataset_file(data_path);
  const lgfo::RunConfig config = lgfo::parse_config(read_file(config_path));
  const lgfo::Report report = lgfo::run(dataset, config);
  write_file(report_path, lgfo::report_to_json(report));
  write_file(curves_path, lgfo::emit_curves(report));
  std::cout << "optimal thresholds: t0=" << lgfo::format_double(report.result.optimal.t0)
            << " t1=" << lgfo::format_double(report.result.optimal.t1)
            << " (candidate " << report.result.optimal_index << " of "
            << report.result.candidates.size() << ")\n";
  return 0;
}

int cmd_measures(const std::string& data_path, double t0, double t1) {
  const lgfo::Dataset dataset = lgfo::parse_dataset_file(data_path);
  const lgfo::ThresholdPair pair(t0, t1);
  std::cout << "sp=" << lgfo::format_double(lgfo::statistical_parity(dataset, pair))
            << "\nsuff=" << lgfo::format_double(lgfo::sufficiency(dataset, pair))
            << "\ndelta_f=" << lgfo::format_double(lgfo::delta_f(dataset, pair))
            << "\naccuracy=" << lgfo::format_double(lgfo::accuracy(dataset, pair))
            << "\n";
  return 0;
}

int cmd_synth(const std::string& spec_path, const std::string& out_path) {
  const lgfo::SynthSpec spec = lgfo::parse_synth_spec(read_file(spec_path));
  const lgfo::Dataset dataset = lgfo::generate_synthetic(spec);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
  lgfo::write_dataset(dataset, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Per-group threshold post-processing that minimizes the "
               "expected legal cost of unfair binary classification"};
  app.require_subcommand(1);

  std::string data_path, config_path, report_path, curves_path;
  auto* run_cmd = app.add_subcommand(
      "run", "Optimize thresholds and write a report and curve table");
  run_cmd->add_option("--data", data_path, "input CSV (id,score,group,label)")
      ->required();
  run_cmd->add_option("--config", config_path, "run configuration JSON")
      ->required();
  run_cmd->add_option("--report", report_path, "output report JSON path")
      ->required();
  run_cmd->add_option("--curves", curves_path, "output curves CSV path")
      ->required();

  std::string measures_data;
  double t0 = 0.5, t1 = 0.5;
  auto* measures_cmd = app.add_subcommand(
      "measures", "Print unfairness measures and accuracy at a threshold pair");
  measures_cmd->add_option("--data", measures_data, "input CSV")->required();
  measures_cmd->add_option("--t0", t0, "group-0 threshold")->required();
  measures_cmd->add_option("--t1", t1, "group-1 threshold")->required();

  std::string spec_path, out_path;
  auto* synth_cmd =
      app.add_subcommand("synth", "Generate a seeded synthetic dataset");
  synth_cmd->add_option("--spec", spec_path, "generator spec JSON")->required();
  synth_cmd->add_option("--out", out_path, "output CSV path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed())
      return cmd_run(data_path, config_path, report_path, curves_path);
    if (measures_cmd->parsed()) return cmd_measures(measures_data, t0, t1);
    if (synth_cmd->parsed()) return cmd_synth(spec_path, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
