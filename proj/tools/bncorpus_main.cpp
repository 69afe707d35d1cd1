// bncorpus - quantify stylistic differences between Bengali text corpora.
//
// Decomposes words into script units, syllables, morphemes and words,
// builds n-gram and length distributions, and compares corpora pairwise
// with two-sample Kolmogorov-Smirnov tests.

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bnc/pipeline.hpp"

namespace fs = std::filesystem;

namespace {

std::vector<bnc::CorpusSpec> parse_corpus_args(
    const std::vector<std::string>& args) {
  std::vector<bnc::CorpusSpec> specs;
  for (const auto& arg : args) {
    const auto eq = arg.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == arg.size())
      throw bnc::PipelineError(bnc::ErrorCategory::kConfig,
                               "--corpus expects NAME=PATH[,PATH...], got: " +
                                   arg);
    const std::string name = arg.substr(0, eq);
    bnc::CorpusSpec* spec = nullptr;
    for (auto& existing : specs)
      if (existing.name == name) spec = &existing;
    if (!spec) {
      specs.push_back(bnc::CorpusSpec{name, {}});
      spec = &specs.back();
    }
    std::string paths = arg.substr(eq + 1);
    std::size_t start = 0;
    while (start <= paths.size()) {
      const auto comma = paths.find(',', start);
      const auto end = comma == std::string::npos ? paths.size() : comma;
      if (end > start) spec->paths.push_back(paths.substr(start, end - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (spec->paths.empty())
      throw bnc::PipelineError(bnc::ErrorCategory::kConfig,
                               "--corpus " + name + " has no paths");
  }
  return specs;
}

void add_extraction_flags(CLI::App* cmd, bnc::RunConfig& cfg) {
  cmd->add_option("--segmenter", cfg.segmenter_source,
                  "Morpheme segmenter: 'baseline' or a segmentation file")
      ->capture_default_str();
  cmd->add_option_function<std::string>(
         "--count-mode",
         [&cfg](const std::string& v) {
           cfg.count_mode = v == "types" ? bnc::CountMode::kTypes
                                         : bnc::CountMode::kTokens;
         },
         "Syllable/morpheme counting: tokens or types")
      ->check(CLI::IsMember({"tokens", "types"}))
      ->default_str("tokens");
  cmd->add_flag("--count-foreign-words", cfg.count_foreign_words,
                "Count non-Bengali tokens toward sentence length");
  cmd->add_option("--min-sentence-len", cfg.min_sentence_len,
                  "Drop sentences shorter than this many words")
      ->capture_default_str();
  cmd->add_option("--morpheme-count-roots", cfg.morpheme_count_roots,
                  "Count the root as a morpheme (true/false)")
      ->capture_default_str();
  cmd->add_flag("--strict", cfg.strict,
                "Abort on the first unparseable token");
  cmd->add_option("--min-stem-len", cfg.min_stem_len,
                  "Baseline segmenter: minimum stem codepoints")
      ->capture_default_str();
  cmd->add_option("--min-affix-count", cfg.min_affix_count,
                  "Baseline segmenter: minimum supporting stems per affix")
      ->capture_default_str();
}

void add_compare_flags(CLI::App* cmd, bnc::RunConfig& cfg) {
  cmd->add_option("--top-k", cfg.top_k, "Top-K keys ranked per source corpus")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option_function<std::string>(
         "--length-mode",
         [&cfg](const std::string& v) {
           cfg.length_mode = v == "raw" ? bnc::LengthMode::kRawCount
                                        : bnc::LengthMode::kRelativeFrequency;
         },
         "Length features as 'relative' frequencies or 'raw' counts")
      ->check(CLI::IsMember({"relative", "raw"}))
      ->default_str("relative");
  cmd->add_option("--alpha", cfg.significance_level, "Significance level")
      ->check(CLI::Range(1e-12, 1.0 - 1e-12))
      ->capture_default_str();
  cmd->add_option("--exact-perm-max", cfg.exact_perm_max,
                  "Use exact permutation p-values when n1+n2 is at most "
                  "this (0 = always asymptotic)")
      ->check(CLI::Range(std::size_t{0}, std::size_t{24}))
      ->capture_default_str();
}

int run(int argc, char** argv) {
  CLI::App app{"Statistical comparison of Bengali text corpora"};
  app.require_subcommand(1);

  bnc::RunConfig cfg;
  std::vector<std::string> corpus_args;
  std::vector<std::string> profile_paths;

  auto* analyze = app.add_subcommand(
      "analyze", "Profile corpora and run all pairwise tests");
  analyze->add_option("--corpus", corpus_args, "Corpus as NAME=PATH[,PATH...]")
      ->required();
  analyze->add_option("--out", cfg.output_dir, "Output directory")
      ->capture_default_str();
  add_extraction_flags(analyze, cfg);
  add_compare_flags(analyze, cfg);

  auto* profile_cmd =
      app.add_subcommand("profile", "Build and persist corpus profiles only");
  profile_cmd
      ->add_option("--corpus", corpus_args, "Corpus as NAME=PATH[,PATH...]")
      ->required();
  profile_cmd->add_option("--out", cfg.output_dir, "Output directory")
      ->capture_default_str();
  add_extraction_flags(profile_cmd, cfg);

  auto* compare_cmd = app.add_subcommand(
      "compare", "Compare previously persisted profiles");
  compare_cmd->add_option("--profiles", profile_paths, "Profile JSON files")
      ->required()
      ->expected(-2);
  compare_cmd->add_option("--out", cfg.output_dir, "Output directory")
      ->capture_default_str();
  add_compare_flags(compare_cmd, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    // Usage problems fall under the config error category; --help exits 0.
    return code == 0 ? 0 : static_cast<int>(bnc::ErrorCategory::kConfig);
  }

  if (analyze->parsed()) {
    cfg.corpora = parse_corpus_args(corpus_args);
    const auto cells = bnc::run_analysis(cfg, std::cerr);
    std::cout << "wrote " << cells.size() << " report cells to "
              << cfg.output_dir << "\n";
  } else if (profile_cmd->parsed()) {
    cfg.corpora = parse_corpus_args(corpus_args);
    std::error_code ec;
    fs::create_directories(cfg.output_dir, ec);
    if (ec)
      throw bnc::PipelineError(bnc::ErrorCategory::kIo,
                               "cannot create output directory: " +
                                   cfg.output_dir);
    for (const auto& spec : cfg.corpora) {
      const auto profile = bnc::build_profile(spec, cfg, std::cerr);
      const auto path =
          (fs::path(cfg.output_dir) / ("profile_" + spec.name + ".json"))
              .string();
      bnc::save_profile(profile, path);
      std::cout << "wrote " << path << " (" << profile.stats.word_token_count
                << " word tokens)\n";
    }
  } else if (compare_cmd->parsed()) {
    std::vector<bnc::CorpusProfile> profiles;
    profiles.reserve(profile_paths.size());
    for (const auto& path : profile_paths) {
      try {
        profiles.push_back(bnc::load_profile(path));
      } catch (const std::exception& e) {
        throw bnc::PipelineError(bnc::ErrorCategory::kIo, e.what());
      }
    }
    const auto cells = bnc::compare_all(profiles, cfg, std::cerr);
    bnc::render_report(cells, profiles, cfg, std::cerr);
    std::cout << "wrote " << cells.size() << " report cells to "
              << cfg.output_dir << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const bnc::PipelineError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.category);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
