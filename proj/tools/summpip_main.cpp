// summpip command-line front end: summarize, eval, lead.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif

#include "summpip/errors.hpp"
#include "summpip/pipeline.hpp"
#include "summpip/rouge.hpp"

namespace fs = std::filesystem;

namespace {

fs::path default_data_dir() {
  if (const char* env = std::getenv("SUMMPIP_DATA_DIR"); env != nullptr && *env != '\0') return env;
  return SUMMPIP_DEFAULT_DATA_DIR;
}

struct ResourceFlags {
  std::string data_dir;
  std::string vectors, stopwords, abbreviations, markers, deverbal, gazetteer, verbs, pos_lexicon;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--data-dir", data_dir, "Directory holding the shipped resource files")->envname("SUMMPIP_DATA_DIR");
    cmd.add_option("--vectors", vectors, "word2vec text-format embeddings")->envname("SUMMPIP_VECTORS");
    cmd.add_option("--stopwords", stopwords)->envname("SUMMPIP_STOPWORDS");
    cmd.add_option("--abbreviations", abbreviations)->envname("SUMMPIP_ABBREVIATIONS");
    cmd.add_option("--markers", markers)->envname("SUMMPIP_MARKERS");
    cmd.add_option("--deverbal", deverbal)->envname("SUMMPIP_DEVERBAL");
    cmd.add_option("--gazetteer", gazetteer)->envname("SUMMPIP_GAZETTEER");
    cmd.add_option("--verbs", verbs)->envname("SUMMPIP_VERBS");
    cmd.add_option("--pos-lexicon", pos_lexicon)->envname("SUMMPIP_POS_LEXICON");
  }

  summpip::ResourcePaths resolve() const {
    auto p = summpip::ResourcePaths::in_directory(data_dir.empty() ? default_data_dir() : fs::path(data_dir));
    auto set = [](fs::path& slot, const std::string& v) {
      if (!v.empty()) slot = v;
    };
    set(p.vectors, vectors);
    set(p.stopwords, stopwords);
    set(p.abbreviations, abbreviations);
    set(p.markers, markers);
    set(p.deverbal, deverbal);
    set(p.gazetteer, gazetteer);
    set(p.verbs, verbs);
    set(p.pos_lexicon, pos_lexicon);
    return p;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unsupervised multi-document summarization"};
  app.require_subcommand(1);

  summpip::PipelineConfig cfg;
  ResourceFlags res;
  std::string input, output, manifest, preset, dump_graph, dump_clusters;

  auto* sum = app.add_subcommand("summarize", "Summarize one document cluster per input line");
  sum->add_option("-i,--input", input, "Input file, one cluster per line")->required()->check(CLI::ExistingFile);
  sum->add_option("-o,--output", output, "Output file, one summary per line")->required();
  sum->add_option("--manifest", manifest, "Run manifest path (default: <output>.manifest)");
  sum->add_option("--preset", preset, "Hyperparameter bundle")->check(CLI::IsMember({"multinews", "duc2004"}));
  auto* o_budget = sum->add_option("--token-budget", cfg.token_budget)->check(CLI::PositiveNumber);
  auto* o_k = sum->add_option("--num-clusters", cfg.num_clusters)->check(CLI::PositiveNumber);
  auto* o_alpha = sum->add_option("--min-words", cfg.min_words)->check(CLI::PositiveNumber);
  sum->add_option("--sim-threshold", cfg.sim_threshold)->check(CLI::Range(0.0, 1.0));
  sum->add_option("--neighbor-count", cfg.neighbor_count)->check(CLI::PositiveNumber);
  sum->add_option("--k-paths", cfg.k_paths)->check(CLI::PositiveNumber);
  sum->add_option("--seed", cfg.seed);
  sum->add_flag("--weighted-graph", cfg.weighted_graph);
  sum->add_option("-j,--workers", cfg.workers)->check(CLI::PositiveNumber);
  sum->add_option("--doc-separator", cfg.doc_separator);
  sum->add_option("--dump-graph", dump_graph, "Directory for per-cluster sentence-graph edge lists");
  sum->add_option("--dump-clusters", dump_clusters, "Directory for per-cluster label assignments");
  res.add_to(*sum);

  std::string candidates, references, report_path;
  auto* ev = app.add_subcommand("eval", "Score candidate summaries against references");
  ev->add_option("-c,--candidates", candidates)->required()->check(CLI::ExistingFile);
  ev->add_option("-r,--references", references)->required()->check(CLI::ExistingFile);
  ev->add_option("--report", report_path, "Also write the report to this file");

  std::size_t lead_n = 3;
  ResourceFlags lead_res;
  std::string lead_in, lead_out, lead_sep = std::string(summpip::kDefaultDocSeparator);
  auto* lead = app.add_subcommand("lead", "Lead-n baseline: first n sentences of each cluster");
  lead->add_option("-i,--input", lead_in)->required()->check(CLI::ExistingFile);
  lead->add_option("-o,--output", lead_out)->required();
  lead->add_option("-n,--sentences", lead_n)->check(CLI::PositiveNumber);
  lead->add_option("--doc-separator", lead_sep);
  lead->add_option("--data-dir", lead_res.data_dir)->envname("SUMMPIP_DATA_DIR");
  lead->add_option("--abbreviations", lead_res.abbreviations)->envname("SUMMPIP_ABBREVIATIONS");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sum) {
      if (!preset.empty()) {
        // explicit flags win over the preset
        auto given = cfg;
        summpip::apply_preset(cfg, preset);
        if (o_budget->count() > 0) cfg.token_budget = given.token_budget;
        if (o_k->count() > 0) cfg.num_clusters = given.num_clusters;
        if (o_alpha->count() > 0) cfg.min_words = given.min_words;
      }
      cfg.resources = res.resolve();
      if (cfg.resources.vectors.empty()) {
        std::cerr << "error: no word vectors given (--vectors or SUMMPIP_VECTORS)\n";
        return 2;
      }
      if (!dump_graph.empty()) fs::create_directories(cfg.dump_graph_dir = dump_graph);
      if (!dump_clusters.empty()) fs::create_directories(cfg.dump_clusters_dir = dump_clusters);
      fs::path man = manifest.empty() ? fs::path(output + ".manifest") : fs::path(manifest);
      auto report = summpip::run_pipeline(cfg, input, output, man);
      std::size_t warnings = 0;
      for (const auto& s : report.stats) {
        if (s.warning) ++warnings;
      }
      std::cerr << report.summaries.size() << " summaries written to " << output;
      if (warnings > 0) std::cerr << " (" << warnings << " lead fallbacks, see " << man.string() << ")";
      std::cerr << '\n';
    } else if (*ev) {
      auto report = summpip::run_eval(candidates, references);
      auto text = summpip::format_report(report);
      std::cout << text;
      if (!report_path.empty()) {
        std::ofstream out(report_path, std::ios::binary);
        out << text;
        if (!out) throw summpip::IoError("cannot write " + report_path);
      }
    } else if (*lead) {
      auto paths = lead_res.resolve();
      auto abbreviations = summpip::load_word_set(paths.abbreviations);
      summpip::run_baseline_lead(lead_in, lead_out, lead_n, abbreviations, lead_sep);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
