#include "bnc/profile.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace bnc {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kSchemaTag = "bncorpus-profile/1";

Level level_from_name(const std::string& name) {
  if (name == "character") return Level::kCharacter;
  if (name == "syllable") return Level::kSyllable;
  if (name == "morpheme") return Level::kMorpheme;
  if (name == "word") return Level::kWord;
  throw std::runtime_error("unknown level name: " + name);
}

}  // namespace

const std::vector<FeatureFamily>& feature_families() {
  static const std::vector<FeatureFamily> families = {
      {"char_unigram", "character uni-gram frequency", Level::kCharacter, 1,
       false},
      {"char_bigram", "character bi-gram frequency", Level::kCharacter, 2,
       false},
      {"char_trigram", "character tri-gram frequency", Level::kCharacter, 3,
       false},
      {"char_length", "character-based word length", Level::kCharacter, 0,
       true},
      {"syllable_unigram", "syllable uni-gram frequency", Level::kSyllable, 1,
       false},
      {"syllable_bigram", "syllable bi-gram frequency", Level::kSyllable, 2,
       false},
      {"syllable_length", "syllable-based word length", Level::kSyllable, 0,
       true},
      {"morpheme_unigram", "morpheme uni-gram frequency", Level::kMorpheme, 1,
       false},
      {"segment_length", "segment-based word length", Level::kMorpheme, 0,
       true},
      {"word_unigram", "word uni-gram frequency", Level::kWord, 1, false},
      {"word_bigram", "word bi-gram frequency", Level::kWord, 2, false},
      {"sentence_length", "word-based sentence length", Level::kWord, 0,
       true},
  };
  return families;
}

const FeatureFamily& family_by_id(const std::string& id) {
  for (const auto& family : feature_families())
    if (id == family.id) return family;
  throw std::runtime_error("unknown feature family: " + id);
}

std::string profile_to_json(const CorpusProfile& profile) {
  ordered_json doc;
  doc["schema"] = kSchemaTag;
  doc["corpus"] = profile.corpus_name;
  doc["fingerprint"] = profile.config_fingerprint;
  doc["stats"] = {
      {"files", profile.stats.file_count},
      {"sentences", profile.stats.sentence_count},
      {"word_tokens", profile.stats.word_token_count},
      {"parsed_words", profile.stats.parsed_word_count},
      {"skipped_words", profile.stats.skipped_word_count},
  };

  ordered_json tables = ordered_json::object();
  for (const auto& family : feature_families()) {
    auto it = profile.frequency_tables.find(family.id);
    if (it == profile.frequency_tables.end()) continue;
    const FrequencyTable& table = it->second;
    ordered_json entries = ordered_json::array();
    for (const auto& key : table.ranked_keys())
      entries.push_back({key, table.counts.at(key)});
    tables[family.id] = {{"level", level_name(table.level)},
                         {"order", table.order},
                         {"total", table.total},
                         {"counts", std::move(entries)}};
  }
  doc["frequency_tables"] = std::move(tables);

  ordered_json dists = ordered_json::object();
  for (const auto& family : feature_families()) {
    auto it = profile.length_distributions.find(family.id);
    if (it == profile.length_distributions.end()) continue;
    const LengthDistribution& dist = it->second;
    ordered_json entries = ordered_json::array();
    for (const auto& [len, count] : dist.counts)
      entries.push_back({len, count});
    dists[family.id] = {{"level", level_name(dist.level)},
                        {"counts", std::move(entries)}};
  }
  doc["length_distributions"] = std::move(dists);

  return doc.dump(2) + "\n";
}

CorpusProfile profile_from_json(const std::string& text) {
  const auto doc = ordered_json::parse(text);
  if (doc.value("schema", "") != kSchemaTag)
    throw std::runtime_error("not a corpus profile document");

  CorpusProfile profile;
  profile.corpus_name = doc.at("corpus").get<std::string>();
  profile.config_fingerprint = doc.at("fingerprint").get<std::string>();
  const auto& stats = doc.at("stats");
  profile.stats.file_count = stats.at("files").get<std::uint64_t>();
  profile.stats.sentence_count = stats.at("sentences").get<std::uint64_t>();
  profile.stats.word_token_count =
      stats.at("word_tokens").get<std::uint64_t>();
  profile.stats.parsed_word_count =
      stats.at("parsed_words").get<std::uint64_t>();
  profile.stats.skipped_word_count =
      stats.at("skipped_words").get<std::uint64_t>();

  for (const auto& [id, entry] : doc.at("frequency_tables").items()) {
    FrequencyTable table(level_from_name(entry.at("level").get<std::string>()),
                         entry.at("order").get<int>());
    for (const auto& pair : entry.at("counts"))
      table.counts[pair.at(0).get<std::string>()] =
          pair.at(1).get<std::uint64_t>();
    table.total = entry.at("total").get<std::uint64_t>();
    profile.frequency_tables.emplace(id, std::move(table));
  }
  for (const auto& [id, entry] : doc.at("length_distributions").items()) {
    LengthDistribution dist(
        level_from_name(entry.at("level").get<std::string>()));
    for (const auto& pair : entry.at("counts"))
      dist.counts[pair.at(0).get<std::uint64_t>()] =
          pair.at(1).get<std::uint64_t>();
    profile.length_distributions.emplace(id, std::move(dist));
  }
  return profile;
}

void save_profile(const CorpusProfile& profile, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write profile: " + path);
  out << profile_to_json(profile);
  if (!out) throw std::runtime_error("failed writing profile: " + path);
}

CorpusProfile load_profile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read profile: " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return profile_from_json(text);
}

}  // namespace bnc
