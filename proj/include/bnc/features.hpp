#ifndef BNC_FEATURES_HPP_
#define BNC_FEATURES_HPP_

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "bnc/script.hpp"

namespace bnc {

enum class Level : std::uint8_t { kCharacter, kSyllable, kMorpheme, kWord };

const char* level_name(Level level);

struct FeatureError : std::runtime_error {
  explicit FeatureError(const std::string& what) : std::runtime_error(what) {}
};

/// Exact multiset counts of n-gram keys at one level. `total` is the number
/// of items counted; after truncate_to_top() it can exceed the sum of the
/// retained counts and stays the valid normalization denominator.
struct FrequencyTable {
  Level level = Level::kCharacter;
  int order = 1;
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t total = 0;

  FrequencyTable() = default;
  FrequencyTable(Level lvl, int ord);

  void add(const std::string& key, std::uint64_t n = 1);
  void merge(const FrequencyTable& other);
  /// Keeps only the top `k` keys by count (ties to the lexicographically
  /// smaller key); `total` is unchanged.
  void truncate_to_top(std::size_t k);
  /// Keys ordered by count descending, then key ascending.
  std::vector<std::string> ranked_keys() const;

  /// True for the supported (level, order) feature-grid combinations.
  static bool valid_combo(Level level, int order);
};

/// Histogram of positive integer lengths.
struct LengthDistribution {
  Level level = Level::kCharacter;
  std::map<std::uint64_t, std::uint64_t> counts;

  explicit LengthDistribution(Level lvl = Level::kCharacter) : level(lvl) {}

  void add(std::uint64_t length, std::uint64_t n = 1);
  void merge(const LengthDistribution& other);
  std::uint64_t total() const;
};

enum class RankingSource : std::uint8_t { kFirstSample, kSymmetric };

/// Two aligned value vectors over a shared key list, ready for a two-sample
/// test. For top-K pairing, keys are ranked by the first table and values1
/// is non-increasing; for length pairing, keys are the sorted union of the
/// observed lengths.
struct PairedSample {
  std::vector<std::string> keys;
  std::vector<double> values1;
  std::vector<double> values2;
  RankingSource source = RankingSource::kFirstSample;
};

enum class LengthMode : std::uint8_t { kRelativeFrequency, kRawCount };

/// All contiguous n-gram keys over the word's unit sequence; empty when the
/// word has fewer than n units. N-grams never cross word boundaries.
std::vector<std::string> char_ngrams(const ParsedWord& parsed, int n);

/// Generic n-gram keys over any item sequence, joined with a space.
std::vector<std::string> ngram_keys(const std::vector<std::string>& items,
                                    int n);

FrequencyTable build_frequency_table(const std::vector<std::string>& items,
                                     Level level, int order);

/// Relative frequency of `key`; 0 when absent. Throws FeatureError on an
/// empty table.
double normalized_frequency(const FrequencyTable& table,
                            const std::string& key);

/// Ranks the top-K keys of `first` and pairs their normalized frequencies
/// with the same keys' normalized frequencies in `second` (0 when absent).
PairedSample top_k_pair(const FrequencyTable& first,
                        const FrequencyTable& second, std::size_t k);

LengthDistribution length_distribution(
    const std::vector<std::uint64_t>& lengths, Level level);

/// Pairs two length histograms over the sorted union of their lengths,
/// zero-filled, either as raw counts or normalized per distribution.
PairedSample length_pair(const LengthDistribution& d1,
                         const LengthDistribution& d2, LengthMode mode);

}  // namespace bnc

#endif  // BNC_FEATURES_HPP_
