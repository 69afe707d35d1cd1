#ifndef BNC_PIPELINE_HPP_
#define BNC_PIPELINE_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bnc/features.hpp"
#include "bnc/ks.hpp"
#include "bnc/profile.hpp"
#include "bnc/tokenizer.hpp"

namespace bnc {

/// Process exit categories, also used as exit codes by the CLI.
enum class ErrorCategory : int {
  kConfig = 2,
  kIo = 3,
  kEncoding = 4,
  kData = 5,
};

struct PipelineError : std::runtime_error {
  ErrorCategory category;
  PipelineError(ErrorCategory cat, const std::string& what)
      : std::runtime_error(what), category(cat) {}
};

struct CorpusSpec {
  std::string name;
  std::vector<std::string> paths;  // files or directories, UTF-8 text
};

enum class CountMode : std::uint8_t { kTokens, kTypes };

struct RunConfig {
  std::vector<CorpusSpec> corpora;
  std::size_t top_k = 50;
  LengthMode length_mode = LengthMode::kRelativeFrequency;
  double significance_level = 0.05;
  std::string segmenter_source = "baseline";  // "baseline" or a file path
  CountMode count_mode = CountMode::kTokens;
  std::string output_dir = ".";
  bool count_foreign_words = false;
  std::size_t min_sentence_len = 1;
  bool morpheme_count_roots = true;  // count the root as a morpheme
  bool strict = false;               // abort on the first unparseable token
  std::size_t exact_perm_max = 0;    // pool-size cap for permutation p-values
  std::size_t min_stem_len = 2;      // baseline segmenter
  std::size_t min_affix_count = 2;

  TokenizerConfig tokenizer_config() const;
  /// Stable hash over the extraction-affecting settings; profiles built
  /// under different fingerprints are never compared.
  std::string fingerprint() const;
};

struct IngestResult {
  std::vector<Sentence> sentences;
  std::vector<std::string> words;  // Bengali word tokens, in order
  std::uint64_t file_count = 0;
};

/// Reads every file under the spec's paths (directories recursively, in
/// sorted path order) as UTF-8 and tokenizes. Throws PipelineError: kIo for
/// unreadable paths, kEncoding for invalid UTF-8 (with byte offset), kData
/// when no word tokens are found.
IngestResult ingest(const CorpusSpec& spec, const TokenizerConfig& cfg);

/// Builds the full twelve-family profile for one corpus. Unparseable tokens
/// are skipped with a warning line (or abort the run in strict mode); a
/// skip rate above one half is fatal.
CorpusProfile build_profile(const CorpusSpec& spec, const RunConfig& cfg,
                            std::ostream& warnings);

/// All three alternatives of one (corpus pair, family) test.
struct ReportCell {
  std::string family;
  std::string corpus_a;
  std::string corpus_b;
  KsOutcome not_equal;
  KsOutcome greater;
  KsOutcome less;
  bool significant_not_equal = false;
  bool significant_greater = false;
  bool significant_less = false;
};

/// Runs the full pairwise grid: ordered pairs for frequency families (the
/// top-K ranking is asymmetric), unordered pairs for length families.
std::vector<ReportCell> compare_all(const std::vector<CorpusProfile>& profiles,
                                    const RunConfig& cfg,
                                    std::ostream& warnings);

/// Writes one CSV and one markdown table per feature family plus a flat
/// cells.csv and a summary of significant results. Output is byte-stable
/// across runs.
void render_report(const std::vector<ReportCell>& cells,
                   const std::vector<CorpusProfile>& profiles,
                   const RunConfig& cfg, std::ostream& warnings);

/// profile + compare + render for every corpus in the config.
std::vector<ReportCell> run_analysis(const RunConfig& cfg,
                                     std::ostream& warnings);

std::string format_pvalue(double p);  // 3 significant digits, e.g. 1.66e-02

}  // namespace bnc

#endif  // BNC_PIPELINE_HPP_
