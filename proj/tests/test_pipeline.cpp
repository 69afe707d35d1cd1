#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bnc/pipeline.hpp"

using namespace bnc;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name)
      : path(fs::temp_directory_path() / name) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }

  void write(const std::string& file, const std::string& contents) const {
    std::ofstream out(path / file, std::ios::binary);
    out << contents;
  }
};

RunConfig two_corpus_config(const std::string& dir_a, const std::string& dir_b,
                            const std::string& outdir) {
  RunConfig cfg;
  cfg.corpora = {{"alpha", {dir_a}}, {"beta", {dir_b}}};
  cfg.output_dir = outdir;
  return cfg;
}

}  // namespace

TEST_CASE("ingest tokenizes a directory of files") {
  TempDir dir("bnc_ingest");
  dir.write("a.txt", "আমি ভাত খাই।");
  const auto result = ingest({"toy", {dir.path.string()}},
                             TokenizerConfig::defaults());
  CHECK(result.words.size() == 3);
  CHECK(result.sentences.size() == 1);
  CHECK(result.file_count == 1);
}

TEST_CASE("ingest word counts add up across files") {
  TempDir dir("bnc_ingest2");
  dir.write("a.txt", "আমি ভাত খাই। নদী");
  dir.write("b.txt", "তুমি জল খাও?");
  const auto result = ingest({"toy", {dir.path.string()}},
                             TokenizerConfig::defaults());
  CHECK(result.words.size() == 4 + 3);
  CHECK(result.file_count == 2);
  // A sentence never spans files.
  CHECK(result.sentences.size() == 3);
}

TEST_CASE("ingest errors carry categories") {
  SUBCASE("empty directory") {
    TempDir dir("bnc_ingest_empty");
    try {
      ingest({"toy", {dir.path.string()}}, TokenizerConfig::defaults());
      FAIL("expected PipelineError");
    } catch (const PipelineError& e) {
      CHECK(e.category == ErrorCategory::kData);
    }
  }
  SUBCASE("missing path") {
    try {
      ingest({"toy", {"/nonexistent/bnc/path"}}, TokenizerConfig::defaults());
      FAIL("expected PipelineError");
    } catch (const PipelineError& e) {
      CHECK(e.category == ErrorCategory::kIo);
    }
  }
  SUBCASE("invalid UTF-8") {
    TempDir dir("bnc_ingest_bad");
    dir.write("bad.txt", std::string("\xC3\x28 invalid", 10));
    try {
      ingest({"toy", {dir.path.string()}}, TokenizerConfig::defaults());
      FAIL("expected PipelineError");
    } catch (const PipelineError& e) {
      CHECK(e.category == ErrorCategory::kEncoding);
    }
  }
  SUBCASE("no Bengali tokens") {
    TempDir dir("bnc_ingest_latin");
    dir.write("a.txt", "only latin words here.");
    try {
      ingest({"toy", {dir.path.string()}}, TokenizerConfig::defaults());
      FAIL("expected PipelineError");
    } catch (const PipelineError& e) {
      CHECK(e.category == ErrorCategory::kData);
    }
  }
}

TEST_CASE("a one-word corpus profiles with the expected unit counts") {
  TempDir dir("bnc_profile_one");
  dir.write("a.txt", "বাংলা।");
  RunConfig cfg;
  cfg.corpora = {{"toy", {dir.path.string()}}};
  std::ostringstream warnings;
  const auto profile = build_profile(cfg.corpora[0], cfg, warnings);

  CHECK(profile.frequency_tables.at("char_unigram").total == 5);
  CHECK(profile.length_distributions.at("syllable_length").counts ==
        std::map<std::uint64_t, std::uint64_t>{{3, 1}});
  CHECK(profile.length_distributions.at("char_length").counts ==
        std::map<std::uint64_t, std::uint64_t>{{5, 1}});
  CHECK(profile.frequency_tables.size() == 8);
  CHECK(profile.length_distributions.size() == 4);
  CHECK(profile.stats.word_token_count == 1);
  CHECK(profile.stats.skipped_word_count == 0);
}

TEST_CASE("unparseable tokens are skipped with a warning") {
  TempDir dir("bnc_profile_skip");
  dir.write("a.txt", "আমি ভাত খাই। বাং১লা খারাপ।");
  RunConfig cfg;
  cfg.corpora = {{"toy", {dir.path.string()}}};
  std::ostringstream warnings;
  const auto profile = build_profile(cfg.corpora[0], cfg, warnings);
  CHECK(profile.stats.skipped_word_count == 1);
  CHECK(warnings.str().find("skipping unparseable token") !=
        std::string::npos);

  cfg.strict = true;
  std::ostringstream strict_warnings;
  CHECK_THROWS_AS(build_profile(cfg.corpora[0], cfg, strict_warnings),
                  PipelineError);
}

TEST_CASE("a corpus that is mostly unparseable aborts") {
  TempDir dir("bnc_profile_junk");
  dir.write("a.txt", "বাং১লা খা১রাপ ভা১ত আমি।");
  RunConfig cfg;
  cfg.corpora = {{"toy", {dir.path.string()}}};
  std::ostringstream warnings;
  try {
    build_profile(cfg.corpora[0], cfg, warnings);
    FAIL("expected PipelineError");
  } catch (const PipelineError& e) {
    CHECK(e.category == ErrorCategory::kData);
  }
}

TEST_CASE("profiles survive a save/load round trip") {
  TempDir dir("bnc_profile_roundtrip");
  dir.write("a.txt", "আমি ভাত খাই। তুমি জল খাও। নদীর জল ভাল।");
  RunConfig cfg;
  cfg.corpora = {{"toy", {dir.path.string()}}};
  std::ostringstream warnings;
  const auto profile = build_profile(cfg.corpora[0], cfg, warnings);

  const auto path = (dir.path / "profile.json").string();
  save_profile(profile, path);
  const auto loaded = load_profile(path);

  CHECK(loaded.corpus_name == profile.corpus_name);
  CHECK(loaded.config_fingerprint == profile.config_fingerprint);
  CHECK(loaded.stats.word_token_count == profile.stats.word_token_count);
  REQUIRE(loaded.frequency_tables.size() == profile.frequency_tables.size());
  for (const auto& [id, table] : profile.frequency_tables) {
    CHECK(loaded.frequency_tables.at(id).counts == table.counts);
    CHECK(loaded.frequency_tables.at(id).total == table.total);
    CHECK(loaded.frequency_tables.at(id).order == table.order);
  }
  for (const auto& [id, dist] : profile.length_distributions)
    CHECK(loaded.length_distributions.at(id).counts == dist.counts);
}

TEST_CASE("split-and-merge profiling matches whole-corpus profiling") {
  // The associativity contract covers the per-word and per-sentence
  // families; morpheme families depend on the corpus-wide segmenter model
  // and are excluded.
  TempDir whole("bnc_merge_whole");
  whole.write("a.txt", "আমি ভাত খাই। তুমি জল খাও।");
  whole.write("b.txt", "নদীর জল ভাল। আকাশ নীল।");
  TempDir half1("bnc_merge_h1");
  half1.write("a.txt", "আমি ভাত খাই। তুমি জল খাও।");
  TempDir half2("bnc_merge_h2");
  half2.write("b.txt", "নদীর জল ভাল। আকাশ নীল।");

  RunConfig cfg;
  cfg.corpora = {{"whole", {whole.path.string()}},
                 {"h1", {half1.path.string()}},
                 {"h2", {half2.path.string()}}};
  std::ostringstream warnings;
  const auto full = build_profile(cfg.corpora[0], cfg, warnings);
  const auto part1 = build_profile(cfg.corpora[1], cfg, warnings);
  const auto part2 = build_profile(cfg.corpora[2], cfg, warnings);

  for (const char* id : {"char_unigram", "char_bigram", "char_trigram",
                         "syllable_unigram", "syllable_bigram",
                         "word_unigram", "word_bigram"}) {
    CAPTURE(id);
    FrequencyTable merged = part1.frequency_tables.at(id);
    merged.merge(part2.frequency_tables.at(id));
    CHECK(merged.counts == full.frequency_tables.at(id).counts);
    CHECK(merged.total == full.frequency_tables.at(id).total);
  }
  for (const char* id : {"char_length", "syllable_length", "sentence_length"}) {
    CAPTURE(id);
    LengthDistribution merged = part1.length_distributions.at(id);
    merged.merge(part2.length_distributions.at(id));
    CHECK(merged.counts == full.length_distributions.at(id).counts);
  }
}

TEST_CASE("character n-gram totals conserve the window count") {
  TempDir dir("bnc_conserve");
  dir.write("a.txt", "আমি ভাত খাই। সন্ত্রস্ত মানুষ অ। বাংলা ভাষা ভাল।");
  RunConfig cfg;
  cfg.corpora = {{"toy", {dir.path.string()}}};
  std::ostringstream warnings;
  const auto profile = build_profile(cfg.corpora[0], cfg, warnings);

  const auto words = word_tokens("আমি ভাত খাই। সন্ত্রস্ত মানুষ অ। বাংলা ভাষা ভাল।",
                                 TokenizerConfig::defaults());
  for (int n = 1; n <= 3; ++n) {
    std::uint64_t expected = 0;
    for (const auto& word : words) {
      const auto len = parse_word(word).char_length();
      if (len + 1 > static_cast<std::size_t>(n))
        expected += len - static_cast<std::size_t>(n) + 1;
    }
    const char* ids[] = {"char_unigram", "char_bigram", "char_trigram"};
    CAPTURE(n);
    CHECK(profile.frequency_tables.at(ids[n - 1]).total == expected);
  }
}

TEST_CASE("minimum sentence length filters only the length statistic") {
  TempDir dir("bnc_minlen");
  dir.write("a.txt", "নদী। আমি ভাত খাই। জল ভাল।");
  RunConfig cfg;
  cfg.corpora = {{"toy", {dir.path.string()}}};
  cfg.min_sentence_len = 2;
  std::ostringstream warnings;
  const auto profile = build_profile(cfg.corpora[0], cfg, warnings);
  // The one-word sentence drops from the distribution...
  CHECK(profile.length_distributions.at("sentence_length").counts ==
        std::map<std::uint64_t, std::uint64_t>{{2, 1}, {3, 1}});
  // ...but its word still counts for word-level features.
  CHECK(profile.frequency_tables.at("word_unigram").counts.count("নদী") == 1);
}

TEST_CASE("comparing two identical corpora yields D=0 and p=1 everywhere") {
  TempDir dir("bnc_identical");
  dir.write("a.txt", "আমি ভাত খাই। তুমি জল খাও। নদীর জল ভাল।");
  TempDir out("bnc_identical_out");
  RunConfig cfg = two_corpus_config(dir.path.string(), dir.path.string(),
                                    out.path.string());
  std::ostringstream warnings;
  const auto cells = run_analysis(cfg, warnings);
  REQUIRE(cells.size() == 8 * 2 + 4);
  for (const auto& cell : cells) {
    CAPTURE(cell.family);
    CHECK(cell.not_equal.statistic == 0.0);
    CHECK(cell.not_equal.p_value == 1.0);
    CHECK(cell.greater.p_value == 1.0);
    CHECK(cell.less.p_value == 1.0);
    CHECK_FALSE(cell.significant_not_equal);
  }
}

TEST_CASE("three corpora produce ordered pairs for frequency families and "
          "unordered pairs for length families") {
  TempDir a("bnc_three_a"), b("bnc_three_b"), c("bnc_three_c");
  a.write("a.txt", "আমি ভাত খাই। তুমি জল খাও।");
  b.write("b.txt", "নদীর জল ভাল। আকাশ নীল। পাখি ওড়ে।");
  c.write("c.txt", "ছেলেটি স্কুলে পড়ে। মেয়েটি গান গায়।");
  TempDir out("bnc_three_out");

  RunConfig cfg;
  cfg.corpora = {{"one", {a.path.string()}},
                 {"two", {b.path.string()}},
                 {"three", {c.path.string()}}};
  cfg.output_dir = out.path.string();
  std::ostringstream warnings;
  const auto cells = run_analysis(cfg, warnings);

  std::size_t freq_cells = 0, length_cells = 0;
  for (const auto& cell : cells) {
    if (family_by_id(cell.family).is_length)
      ++length_cells;
    else
      ++freq_cells;
  }
  CHECK(freq_cells == 8 * 6);    // P(3,2) ordered pairs
  CHECK(length_cells == 4 * 3);  // C(3,2) unordered pairs
  CHECK(fs::exists(out.path / "report_char_unigram.md"));
  CHECK(fs::exists(out.path / "report_sentence_length.csv"));
  CHECK(fs::exists(out.path / "cells.csv"));
  CHECK(fs::exists(out.path / "summary.md"));
  CHECK(fs::exists(out.path / "profile_one.json"));
}

TEST_CASE("profiles with different fingerprints refuse to compare") {
  TempDir dir("bnc_fingerprint");
  dir.write("a.txt", "আমি ভাত খাই। তুমি জল খাও।");
  RunConfig cfg;
  cfg.corpora = {{"x", {dir.path.string()}}, {"y", {dir.path.string()}}};
  std::ostringstream warnings;
  auto p1 = build_profile(cfg.corpora[0], cfg, warnings);
  RunConfig other = cfg;
  other.count_mode = CountMode::kTypes;
  auto p2 = build_profile(other.corpora[1], other, warnings);
  CHECK(p1.config_fingerprint != p2.config_fingerprint);
  try {
    compare_all({p1, p2}, cfg, warnings);
    FAIL("expected PipelineError");
  } catch (const PipelineError& e) {
    CHECK(e.category == ErrorCategory::kConfig);
  }
}

TEST_CASE("duplicate corpus names are a config error") {
  RunConfig cfg;
  cfg.corpora = {{"same", {"/tmp"}}, {"same", {"/tmp"}}};
  std::ostringstream warnings;
  try {
    run_analysis(cfg, warnings);
    FAIL("expected PipelineError");
  } catch (const PipelineError& e) {
    CHECK(e.category == ErrorCategory::kConfig);
  }
}

TEST_CASE("p-values render with three significant digits") {
  CHECK(format_pvalue(1.66e-2) == "1.66e-02");
  CHECK(format_pvalue(8.25e-1) == "8.25e-01");
  CHECK(format_pvalue(8.33e-3) == "8.33e-03");
  CHECK(format_pvalue(1.0) == "1.00e+00");
  CHECK(format_pvalue(0.0) == "0.00e+00");
}

TEST_CASE("significance flags agree with the configured level") {
  TempDir a("bnc_sig_a"), b("bnc_sig_b");
  a.write("a.txt", "আমি ভাত খাই। তুমি জল খাও। সে বই পড়ে।");
  b.write("b.txt", "অকস্মাৎ সন্ত্রস্ত মানুষগুলি পালাইয়া গিয়াছিল। "
                   "চন্দ্রালোকিত রজনীতে নদীতীরে বসিয়াছিলাম।");
  TempDir out("bnc_sig_out");
  RunConfig cfg = two_corpus_config(a.path.string(), b.path.string(),
                                    out.path.string());
  std::ostringstream warnings;
  const auto cells = run_analysis(cfg, warnings);
  for (const auto& cell : cells) {
    CHECK(cell.significant_not_equal ==
          (cell.not_equal.p_value <= cfg.significance_level));
    CHECK(cell.significant_greater ==
          (cell.greater.p_value <= cfg.significance_level));
    CHECK(cell.significant_less ==
          (cell.less.p_value <= cfg.significance_level));
    CHECK(cell.not_equal.p_value >= 0.0);
    CHECK(cell.not_equal.p_value <= 1.0);
  }
}
