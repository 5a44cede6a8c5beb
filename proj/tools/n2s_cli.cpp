// n2s: dataset generation, training, evaluation, benchmark import and route
// plots for pickup-and-delivery tours.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "n2s/bench/dataset.hpp"
#include "n2s/bench/eval.hpp"
#include "n2s/bench/plot.hpp"
#include "n2s/bench/train_config.hpp"
#include "n2s/core/instance_io.hpp"
#include "n2s/train/trainer.hpp"

namespace {

using namespace n2s;
namespace fs = std::filesystem;

const std::vector<std::string> kVariants{"pdtsp", "pdtsp-lifo"};

std::optional<Variant> to_variant(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return parse_variant(text);
}

nlohmann::json read_json_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// ------------------------------------------------------------- generate

struct GenerateArgs {
  bench::GenerateOptions options;
  std::string out;
};

void run_generate(const GenerateArgs& a) {
  const auto data = bench::generate_dataset(a.options, a.out);
  std::cout << "wrote " << data.entries.size() << " instances to " << a.out << "\n";
}

// ---------------------------------------------------------------- train

struct TrainArgs {
  std::string config;
  std::string out;
  bench::TrainOverrides flags;
  bool resume = false;
  bool print_only = false;
};

void run_train(const TrainArgs& a) {
  const auto file =
      a.config.empty() ? nlohmann::json::object() : read_json_file(a.config);
  const auto config = bench::resolve_train_config(file, a.flags);
  const std::string echo = nlohmann::json(config).dump(2);
  std::cout << echo << std::endl;
  if (a.print_only) return;
  if (a.out.empty()) throw std::invalid_argument("train: --out is required");
  fs::create_directories(a.out);
  write_file(fs::path(a.out) / "config.json", echo + "\n");
  train::Trainer trainer(config, a.out);
  if (a.resume) {
    if (!trainer.resume()) throw std::runtime_error("--resume: no checkpoint in " + a.out);
    std::cout << "resumed after epoch " << trainer.completed_epochs() << std::endl;
  }
  trainer.run([](const train::EpochMetrics& m) {
    std::printf("epoch %d  best %.5f  improvement %.4f  value loss %.5f  entropy %.3f  %.0fs\n",
                m.epoch, m.mean_best_cost, m.mean_improvement, m.value_loss, m.entropy, m.seconds);
    std::fflush(stdout);
  });
}

// ----------------------------------------------------------------- eval

struct EvalArgs {
  std::string dataset;
  std::string checkpoint;
  std::string decoders;
  std::string ref;
  std::string out;
  std::string csv;
  std::string decode = "sample";
  bench::EvalOptions options;
};

void run_eval(EvalArgs a) {
  if (a.checkpoint.empty() == a.decoders.empty()) {
    throw std::invalid_argument("eval: give exactly one of --checkpoint and --decoders");
  }
  const auto policy = a.checkpoint.empty() ? bench::PolicySource::handcrafted(a.decoders)
                                           : bench::PolicySource::from_checkpoint(a.checkpoint);
  a.options.mode = a.decode == "greedy" ? nn::DecodeMode::kGreedy : nn::DecodeMode::kSample;
  const auto data = bench::load_dataset(a.dataset);
  std::optional<std::vector<double>> ref;
  if (!a.ref.empty()) ref = bench::read_reference_costs(a.ref);
  const auto report = bench::evaluate(data, policy, a.options, ref);
  const std::string json = report.to_json().dump(2) + "\n";
  if (a.out.empty()) {
    std::cout << json;
  } else {
    write_file(a.out, json);
  }
  if (!a.csv.empty()) {
    std::ofstream csv(a.csv);
    if (!csv) throw std::runtime_error("cannot open " + a.csv + " for writing");
    report.write_csv(csv);
  }
  std::fprintf(stderr, "%zu instances, mean cost %.6f", report.records.size(), report.mean_cost);
  if (report.mean_gap) std::fprintf(stderr, ", mean gap %.4f%%", *report.mean_gap);
  std::fprintf(stderr, ", %.2fs\n", report.wall_seconds);
}

// ----------------------------------------------------------------- plot

struct PlotArgs {
  std::string instance;
  std::string route;
  std::string route_file;
  std::string out;
  std::string title;
  std::optional<Variant> variant;
};

void run_plot(const PlotArgs& a) {
  if (a.route.empty() == a.route_file.empty()) {
    throw std::invalid_argument("plot: give exactly one of --route and --route-file");
  }
  const Instance inst = read_instance(a.instance);
  const Route route = bench::parse_route(a.route.empty() ? slurp(a.route_file) : a.route);
  bench::plot_route(inst, route, a.variant.value_or(inst.variant()), a.out, a.title);
  std::cout << "wrote " << a.out << "\n";
}

// --------------------------------------------------------- bench-import

struct ImportArgs {
  std::vector<std::string> files;
  std::string out;
};

void run_import(const ImportArgs& a) {
  std::vector<fs::path> files(a.files.begin(), a.files.end());
  const auto data = bench::import_benchmarks(files, a.out);
  for (const auto& e : data.entries) {
    std::cout << e.id << ": scale " << e.scale << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Neural neighborhood search for pickup-and-delivery tours"};
  app.require_subcommand(1);

  GenerateArgs gen;
  std::string gen_variant, train_variant, eval_variant, plot_variant;
  auto* generate = app.add_subcommand("generate", "Write a dataset of uniform random instances");
  generate->add_option("-n,--n", gen.options.num_requests, "Requests per instance")->required();
  generate->add_option("--count", gen.options.count, "Number of instances")->capture_default_str();
  generate->add_option("--seed", gen.options.seed, "Base seed")->capture_default_str();
  generate->add_option("--variant", gen_variant, "pdtsp or pdtsp-lifo")
      ->check(CLI::IsMember(kVariants));
  generate->add_option("-o,--out", gen.out, "Output directory")->required();

  TrainArgs tr;
  auto* train = app.add_subcommand("train", "Train a policy with n-step PPO");
  train->add_option("-c,--config", tr.config, "JSON config file")->check(CLI::ExistingFile);
  train->add_option("-o,--out", tr.out, "Directory for checkpoints and logs");
  train->add_option("-n,--n", tr.flags.num_requests, "Requests per training instance");
  train->add_option("--variant", train_variant, "pdtsp or pdtsp-lifo")
      ->check(CLI::IsMember(kVariants));
  train->add_option("--seed", tr.flags.seed, "Training seed");
  train->add_option("--dim", tr.flags.dim, "Embedding dimension");
  train->add_option("--epochs", tr.flags.epochs, "Number of epochs");
  train->add_flag("--resume", tr.resume, "Continue from the newest checkpoint in --out");
  train->add_flag("--print-config", tr.print_only, "Print the resolved config and exit");

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "Run the search on a dataset and report costs");
  eval->add_option("dataset", ev.dataset, "Dataset directory or instance file")->required();
  eval->add_option("--checkpoint", ev.checkpoint, "Trained policy checkpoint");
  eval->add_option("--decoders", ev.decoders,
                   "Hand-crafted decoders: random, greedy, eps-greedy:<eps>, or removal/reinsertion");
  eval->add_option("--variant", eval_variant, "Override the instance variant")
      ->check(CLI::IsMember(kVariants));
  eval->add_option("-T,--steps", ev.options.steps, "Search steps per instance")->capture_default_str();
  eval->add_flag("--augment", ev.options.augment, "Search floor(|V|/2) transformed copies");
  eval->add_option("--seed", ev.options.seed, "Base seed")->capture_default_str();
  eval->add_option("--decode", ev.decode, "sample or greedy")
      ->check(CLI::IsMember({"sample", "greedy"}))
      ->capture_default_str();
  eval->add_option("--history", ev.options.history_window, "Action history window, 0 for |V|/2");
  eval->add_option("-j,--workers", ev.options.workers, "Worker threads")->capture_default_str();
  eval->add_option("--ref", ev.ref, "Reference costs, one per line in manifest order");
  eval->add_option("-o,--out", ev.out, "Report JSON path (stdout if omitted)");
  eval->add_option("--csv", ev.csv, "Per-instance CSV path");

  PlotArgs pl;
  auto* plot = app.add_subcommand("plot", "Draw a tour as SVG");
  plot->add_option("-i,--instance", pl.instance, "Instance file")->required();
  plot->add_option("--route", pl.route, "Node ids in visiting order, depot first");
  plot->add_option("--route-file", pl.route_file, "File holding the node ids");
  plot->add_option("--variant", plot_variant, "Constraint set to check against")
      ->check(CLI::IsMember(kVariants));
  plot->add_option("--title", pl.title, "Title prefix");
  plot->add_option("-o,--out", pl.out, "Output SVG path")->required();

  ImportArgs im;
  auto* import = app.add_subcommand("bench-import", "Normalize benchmark files into a dataset");
  import->add_option("files", im.files, "Benchmark instance files")->required();
  import->add_option("-o,--out", im.out, "Output directory")->required();

  CLI11_PARSE(app, argc, argv);
  try {
    gen.options.variant = to_variant(gen_variant).value_or(Variant::kPdtsp);
    tr.flags.variant = to_variant(train_variant);
    ev.options.variant = to_variant(eval_variant);
    pl.variant = to_variant(plot_variant);
    if (*generate) run_generate(gen);
    if (*train) run_train(tr);
    if (*eval) run_eval(ev);
    if (*plot) run_plot(pl);
    if (*import) run_import(im);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
