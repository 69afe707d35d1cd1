#include "bnc/pipeline.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <set>

#include "bnc/morphology.hpp"
#include "bnc/script.hpp"
#include "bnc/syllable.hpp"
#include "bnc/utf8.hpp"

namespace fs = std::filesystem;

namespace bnc {

namespace {

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw PipelineError(ErrorCategory::kIo, "cannot read file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  if (in.bad())
    throw PipelineError(ErrorCategory::kIo, "error reading file: " + path);
  return text;
}

std::vector<std::string> expand_paths(const CorpusSpec& spec) {
  std::vector<std::string> files;
  for (const auto& path : spec.paths) {
    std::error_code ec;
    const auto status = fs::status(path, ec);
    if (ec || status.type() == fs::file_type::not_found)
      throw PipelineError(ErrorCategory::kIo,
                          "corpus path does not exist: " + path);
    if (fs::is_directory(status)) {
      std::vector<std::string> found;
      try {
        for (const auto& entry : fs::recursive_directory_iterator(path))
          if (entry.is_regular_file()) found.push_back(entry.path().string());
      } catch (const fs::filesystem_error& e) {
        throw PipelineError(ErrorCategory::kIo, e.what());
      }
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else if (fs::is_regular_file(status)) {
      files.push_back(path);
    } else {
      throw PipelineError(ErrorCategory::kIo,
                          "corpus path is not a file or directory: " + path);
    }
  }
  return files;
}

}  // namespace

TokenizerConfig RunConfig::tokenizer_config() const {
  TokenizerConfig cfg = TokenizerConfig::defaults();
  cfg.count_foreign_words = count_foreign_words;
  return cfg;
}

std::string RunConfig::fingerprint() const {
  std::string canon = "v1";
  canon += "|segmenter=" + segmenter_source;
  canon += "|count_mode=";
  canon += (count_mode == CountMode::kTokens ? "tokens" : "types");
  canon += "|foreign=" + std::to_string(count_foreign_words ? 1 : 0);
  canon += "|min_sentence_len=" + std::to_string(min_sentence_len);
  canon += "|roots=" + std::to_string(morpheme_count_roots ? 1 : 0);
  canon += "|strict=" + std::to_string(strict ? 1 : 0);
  canon += "|min_stem_len=" + std::to_string(min_stem_len);
  canon += "|min_affix_count=" + std::to_string(min_affix_count);
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(canon)));
  return buf;
}

IngestResult ingest(const CorpusSpec& spec, const TokenizerConfig& cfg) {
  const auto files = expand_paths(spec);
  if (files.empty())
    throw PipelineError(ErrorCategory::kData,
                        "corpus is empty: " + spec.name);

  IngestResult result;
  result.file_count = files.size();
  for (const auto& path : files) {
    const std::string text = read_file(path);
    std::vector<char32_t> cps;
    if (auto bad = utf8::try_decode(text, cps))
      throw PipelineError(ErrorCategory::kEncoding,
                          "invalid UTF-8 in " + path + " at byte offset " +
                              std::to_string(*bad));
    // Files are independent sentence streams; a sentence never spans two
    // files.
    auto sentences = split_sentences(text, cfg);
    for (auto& sentence : sentences) {
      for (const auto& token : sentence.tokens)
        if (has_bengali(token)) result.words.push_back(token);
      result.sentences.push_back(std::move(sentence));
    }
  }
  if (result.words.empty())
    throw PipelineError(ErrorCategory::kData,
                        "corpus has no Bengali word tokens: " + spec.name);
  return result;
}

namespace {

struct ParsedCorpus {
  // Distinct surface forms with token counts, plus their parses; words that
  // failed to parse are excluded and tallied in skipped.
  std::map<std::string, std::uint64_t> vocabulary;
  std::map<std::string, ParsedWord> parses;
  std::uint64_t skipped = 0;
};

ParsedCorpus parse_corpus(const IngestResult& ingested, const RunConfig& cfg,
                          const std::string& corpus_name,
                          std::ostream& warnings) {
  ParsedCorpus out;
  std::map<std::string, std::string> failures;  // word -> reason, warn once
  for (const auto& word : ingested.words) {
    auto it = out.vocabulary.find(word);
    if (it != out.vocabulary.end()) {
      ++it->second;
      continue;
    }
    if (failures.count(word)) {
      ++out.skipped;
      continue;
    }
    try {
      ParsedWord parsed = parse_word(word);
      out.parses.emplace(word, std::move(parsed));
      out.vocabulary.emplace(word, 1);
    } catch (const ParseError& e) {
      if (cfg.strict)
        throw PipelineError(ErrorCategory::kData,
                            "unparseable token '" + word + "' in corpus " +
                                corpus_name + ": " + e.what());
      warnings << "warning: corpus " << corpus_name
               << ": skipping unparseable token '" << word
               << "': " << e.what() << "\n";
      failures.emplace(word, e.what());
      ++out.skipped;
    }
  }
  return out;
}

// Occurrence counting per the configured mode: every token occurrence, or
// once per distinct word type.
void add_items(FrequencyTable& table, const std::vector<std::string>& items,
               std::uint64_t word_count, CountMode mode) {
  if (mode == CountMode::kTokens) {
    for (const auto& item : items) table.add(item, word_count);
  } else {
    std::set<std::string> distinct(items.begin(), items.end());
    for (const auto& item : distinct) table.add(item, 1);
  }
}

}  // namespace

CorpusProfile build_profile(const CorpusSpec& spec, const RunConfig& cfg,
                            std::ostream& warnings) {
  const auto ingested = ingest(spec, cfg.tokenizer_config());
  auto parsed = parse_corpus(ingested, cfg, spec.name, warnings);

  const std::uint64_t total_words = ingested.words.size();
  if (parsed.skipped * 2 > total_words)
    throw PipelineError(
        ErrorCategory::kData,
        "corpus " + spec.name + ": " + std::to_string(parsed.skipped) +
            " of " + std::to_string(total_words) +
            " word tokens are unparseable; aborting");
  if (parsed.vocabulary.empty())
    throw PipelineError(ErrorCategory::kData,
                        "corpus " + spec.name + " has no parseable words");

  CorpusProfile profile;
  profile.corpus_name = spec.name;
  profile.config_fingerprint = cfg.fingerprint();
  profile.stats.file_count = ingested.file_count;
  profile.stats.sentence_count = ingested.sentences.size();
  profile.stats.word_token_count = total_words;
  profile.stats.skipped_word_count = parsed.skipped;
  profile.stats.parsed_word_count = total_words - parsed.skipped;

  FrequencyTable char1(Level::kCharacter, 1), char2(Level::kCharacter, 2),
      char3(Level::kCharacter, 3);
  FrequencyTable syl1(Level::kSyllable, 1), syl2(Level::kSyllable, 2);
  FrequencyTable morph1(Level::kMorpheme, 1);
  FrequencyTable word1(Level::kWord, 1), word2(Level::kWord, 2);
  LengthDistribution char_len(Level::kCharacter);
  LengthDistribution syl_len(Level::kSyllable);
  LengthDistribution seg_len(Level::kMorpheme);
  LengthDistribution sent_len(Level::kWord);

  // Morpheme segmentations, one per distinct word.
  std::map<std::string, Segmentation> segmentations;
  if (cfg.segmenter_source == "baseline") {
    const auto model = train_baseline(parsed.vocabulary, cfg.min_stem_len,
                                      cfg.min_affix_count);
    for (const auto& [word, count] : parsed.vocabulary)
      segmentations.emplace(word, segment(model, word));
  } else {
    std::map<std::string, Segmentation> external;
    try {
      external = load_segmentation_file(cfg.segmenter_source);
    } catch (const SegmentationParseError& e) {
      throw PipelineError(ErrorCategory::kData,
                          "segmentation file " + cfg.segmenter_source + ": " +
                              e.what());
    } catch (const MorphologyError& e) {
      throw PipelineError(ErrorCategory::kIo, e.what());
    }
    std::uint64_t missing = 0;
    for (const auto& [word, count] : parsed.vocabulary) {
      auto it = external.find(word);
      if (it != external.end()) {
        segmentations.emplace(word, it->second);
      } else {
        Segmentation whole;
        whole.root = word;
        segmentations.emplace(word, std::move(whole));
        ++missing;
      }
    }
    if (missing > 0)
      warnings << "warning: corpus " << spec.name << ": " << missing
               << " words missing from segmentation file, kept unsegmented\n";
  }

  for (const auto& [word, count] : parsed.vocabulary) {
    const ParsedWord& pw = parsed.parses.at(word);

    add_items(char1, char_ngrams(pw, 1), count, CountMode::kTokens);
    add_items(char2, char_ngrams(pw, 2), count, CountMode::kTokens);
    add_items(char3, char_ngrams(pw, 3), count, CountMode::kTokens);
    char_len.add(pw.char_length(), count);

    const auto syllables = syllabify(pw, /*strict=*/false);
    std::vector<std::string> syl_keys;
    syl_keys.reserve(syllables.size());
    for (const auto& syl : syllables) syl_keys.push_back(syl.surface());
    add_items(syl1, ngram_keys(syl_keys, 1), count, cfg.count_mode);
    add_items(syl2, ngram_keys(syl_keys, 2), count, cfg.count_mode);
    syl_len.add(syllables.size(), count);

    const Segmentation& seg = segmentations.at(word);
    std::vector<std::string> morphemes = seg.segments();
    if (!cfg.morpheme_count_roots)
      morphemes.erase(morphemes.begin() +
                      static_cast<long>(seg.prefixes.size()));
    if (!morphemes.empty())
      add_items(morph1, morphemes, count, cfg.count_mode);
    seg_len.add(seg.segment_length(), count);
  }

  for (const auto& sentence : ingested.sentences) {
    // The minimum-length filter applies to the sentence-length statistic
    // only; word features still see every sentence.
    if (sentence.tokens.size() >= cfg.min_sentence_len)
      sent_len.add(sentence.tokens.size());

    std::vector<std::string> bengali;
    bengali.reserve(sentence.tokens.size());
    for (const auto& token : sentence.tokens)
      if (has_bengali(token) && parsed.parses.count(token))
        bengali.push_back(token);
    add_items(word1, ngram_keys(bengali, 1), 1, CountMode::kTokens);
    add_items(word2, ngram_keys(bengali, 2), 1, CountMode::kTokens);
  }

  for (auto* table : {&char1, &char2, &char3, &syl1, &syl2, &morph1, &word1,
                      &word2})
    table->truncate_to_top(CorpusProfile::kRetainedKeys);

  profile.frequency_tables.emplace("char_unigram", std::move(char1));
  profile.frequency_tables.emplace("char_bigram", std::move(char2));
  profile.frequency_tables.emplace("char_trigram", std::move(char3));
  profile.frequency_tables.emplace("syllable_unigram", std::move(syl1));
  profile.frequency_tables.emplace("syllable_bigram", std::move(syl2));
  profile.frequency_tables.emplace("morpheme_unigram", std::move(morph1));
  profile.frequency_tables.emplace("word_unigram", std::move(word1));
  profile.frequency_tables.emplace("word_bigram", std::move(word2));
  profile.length_distributions.emplace("char_length", std::move(char_len));
  profile.length_distributions.emplace("syllable_length", std::move(syl_len));
  profile.length_distributions.emplace("segment_length", std::move(seg_len));
  profile.length_distributions.emplace("sentence_length", std::move(sent_len));
  return profile;
}

namespace {

KsOutcome run_test(std::span<const double> s1, std::span<const double> s2,
                   Alternative alt, const RunConfig& cfg) {
  KsOutcome outcome = ks_test(s1, s2, alt);
  if (cfg.exact_perm_max > 0 && s1.size() + s2.size() <= cfg.exact_perm_max)
    outcome.p_value = ks_permutation_pvalue(s1, s2, alt, cfg.exact_perm_max);
  return outcome;
}

ReportCell make_cell(const std::string& family, const std::string& name_a,
                     const std::string& name_b, const PairedSample& pair,
                     const RunConfig& cfg) {
  ReportCell cell;
  cell.family = family;
  cell.corpus_a = name_a;
  cell.corpus_b = name_b;
  cell.not_equal =
      run_test(pair.values1, pair.values2, Alternative::kNotEqual, cfg);
  cell.greater =
      run_test(pair.values1, pair.values2, Alternative::kGreater, cfg);
  cell.less = run_test(pair.values1, pair.values2, Alternative::kLess, cfg);
  cell.significant_not_equal =
      cell.not_equal.p_value <= cfg.significance_level;
  cell.significant_greater = cell.greater.p_value <= cfg.significance_level;
  cell.significant_less = cell.less.p_value <= cfg.significance_level;
  return cell;
}

}  // namespace

std::vector<ReportCell> compare_all(const std::vector<CorpusProfile>& profiles,
                                    const RunConfig& cfg,
                                    std::ostream& warnings) {
  if (profiles.size() < 2)
    throw PipelineError(ErrorCategory::kConfig,
                        "need at least two corpora to compare");
  if (cfg.top_k < 1)
    throw PipelineError(ErrorCategory::kConfig, "top-k must be at least 1");
  if (!(cfg.significance_level > 0.0 && cfg.significance_level < 1.0))
    throw PipelineError(ErrorCategory::kConfig,
                        "significance level must be in (0, 1)");
  for (const auto& profile : profiles)
    if (profile.config_fingerprint != profiles.front().config_fingerprint)
      throw PipelineError(
          ErrorCategory::kConfig,
          "profile fingerprints differ; rebuild profiles with one config");

  std::vector<ReportCell> cells;
  const std::size_t n = profiles.size();

  for (const auto& family : feature_families()) {
    if (family.is_length) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          auto ita = profiles[i].length_distributions.find(family.id);
          auto itb = profiles[j].length_distributions.find(family.id);
          if (ita == profiles[i].length_distributions.end() ||
              itb == profiles[j].length_distributions.end())
            throw PipelineError(ErrorCategory::kConfig,
                                std::string("profile is missing family ") +
                                    family.id);
          const auto& da = ita->second;
          const auto& db = itb->second;
          if (da.counts.empty() || db.counts.empty()) {
            warnings << "warning: " << family.id << ": no data for pair "
                     << profiles[i].corpus_name << "/"
                     << profiles[j].corpus_name << "\n";
            continue;
          }
          const auto pair = length_pair(da, db, cfg.length_mode);
          cells.push_back(make_cell(family.id, profiles[i].corpus_name,
                                    profiles[j].corpus_name, pair, cfg));
        }
      }
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (i == j) continue;
          auto ita = profiles[i].frequency_tables.find(family.id);
          auto itb = profiles[j].frequency_tables.find(family.id);
          if (ita == profiles[i].frequency_tables.end() ||
              itb == profiles[j].frequency_tables.end())
            throw PipelineError(ErrorCategory::kConfig,
                                std::string("profile is missing family ") +
                                    family.id);
          const auto& ta = ita->second;
          const auto& tb = itb->second;
          if (ta.total == 0 || tb.total == 0) {
            warnings << "warning: " << family.id << ": no data for pair "
                     << profiles[i].corpus_name << "/"
                     << profiles[j].corpus_name << "\n";
            continue;
          }
          const auto pair = top_k_pair(ta, tb, cfg.top_k);
          cells.push_back(make_cell(family.id, profiles[i].corpus_name,
                                    profiles[j].corpus_name, pair, cfg));
        }
      }
    }
  }
  return cells;
}

std::vector<ReportCell> run_analysis(const RunConfig& cfg,
                                     std::ostream& warnings) {
  if (cfg.corpora.size() < 2)
    throw PipelineError(ErrorCategory::kConfig,
                        "need at least two corpora to compare");
  std::set<std::string> names;
  for (const auto& spec : cfg.corpora)
    if (!names.insert(spec.name).second)
      throw PipelineError(ErrorCategory::kConfig,
                          "duplicate corpus name: " + spec.name);

  std::error_code ec;
  fs::create_directories(cfg.output_dir, ec);
  if (ec)
    throw PipelineError(ErrorCategory::kIo,
                        "cannot create output directory: " + cfg.output_dir);

  std::vector<CorpusProfile> profiles;
  profiles.reserve(cfg.corpora.size());
  for (const auto& spec : cfg.corpora) {
    profiles.push_back(build_profile(spec, cfg, warnings));
    save_profile(profiles.back(), (fs::path(cfg.output_dir) /
                                   ("profile_" + spec.name + ".json"))
                                      .string());
  }

  auto cells = compare_all(profiles, cfg, warnings);
  render_report(cells, profiles, cfg, warnings);
  return cells;
}

}  // namespace bnc
