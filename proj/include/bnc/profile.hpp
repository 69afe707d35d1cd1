#ifndef BNC_PROFILE_HPP_
#define BNC_PROFILE_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bnc/features.hpp"

namespace bnc {

/// One feature family of the analysis grid: a frequency table (with an
/// n-gram order) or a length distribution at some level.
struct FeatureFamily {
  const char* id;
  const char* display_name;
  Level level;
  int order;        // 0 for length families
  bool is_length;   // length families compare symmetrically
};

/// The twelve families, in canonical report order.
const std::vector<FeatureFamily>& feature_families();
const FeatureFamily& family_by_id(const std::string& id);

struct CorpusStats {
  std::uint64_t file_count = 0;
  std::uint64_t sentence_count = 0;
  std::uint64_t word_token_count = 0;   // Bengali word tokens seen
  std::uint64_t parsed_word_count = 0;  // tokens that parsed cleanly
  std::uint64_t skipped_word_count = 0;
};

/// Every persisted distribution for one corpus, keyed by family id.
/// Frequency tables are truncated to the retention cap when persisted; the
/// stored totals remain the full normalization denominators.
struct CorpusProfile {
  static constexpr std::size_t kRetainedKeys = 5000;

  std::string corpus_name;
  std::string config_fingerprint;
  CorpusStats stats;
  std::map<std::string, FrequencyTable> frequency_tables;
  std::map<std::string, LengthDistribution> length_distributions;
};

std::string profile_to_json(const CorpusProfile& profile);
CorpusProfile profile_from_json(const std::string& text);

void save_profile(const CorpusProfile& profile, const std::string& path);
CorpusProfile load_profile(const std::string& path);

}  // namespace bnc

#endif  // BNC_PROFILE_HPP_
