#include "bnc/features.hpp"

#include <algorithm>

namespace bnc {

const char* level_name(Level level) {
  switch (level) {
    case Level::kCharacter: return "character";
    case Level::kSyllable: return "syllable";
    case Level::kMorpheme: return "morpheme";
    case Level::kWord: return "word";
  }
  return "?";
}

bool FrequencyTable::valid_combo(Level level, int order) {
  switch (level) {
    case Level::kCharacter: return order >= 1 && order <= 3;
    case Level::kSyllable: return order == 1 || order == 2;
    case Level::kMorpheme: return order == 1;
    case Level::kWord: return order == 1 || order == 2;
  }
  return false;
}

FrequencyTable::FrequencyTable(Level lvl, int ord) : level(lvl), order(ord) {
  if (!valid_combo(lvl, ord))
    throw FeatureError(std::string("unsupported n-gram order ") +
                       std::to_string(ord) + " at level " + level_name(lvl));
}

void FrequencyTable::add(const std::string& key, std::uint64_t n) {
  counts[key] += n;
  total += n;
}

void FrequencyTable::merge(const FrequencyTable& other) {
  if (other.level != level || other.order != order)
    throw FeatureError("merging incompatible frequency tables");
  for (const auto& [key, count] : other.counts) counts[key] += count;
  total += other.total;
}

std::vector<std::string> FrequencyTable::ranked_keys() const {
  std::vector<std::string> keys;
  keys.reserve(counts.size());
  for (const auto& [key, count] : counts) keys.push_back(key);
  std::stable_sort(keys.begin(), keys.end(),
                   [&](const std::string& a, const std::string& b) {
                     const auto ca = counts.at(a), cb = counts.at(b);
                     if (ca != cb) return ca > cb;
                     return a < b;
                   });
  return keys;
}

void FrequencyTable::truncate_to_top(std::size_t k) {
  if (counts.size() <= k) return;
  auto ranked = ranked_keys();
  std::map<std::string, std::uint64_t> kept;
  for (std::size_t i = 0; i < k; ++i) {
    const auto count = counts.at(ranked[i]);
    kept.emplace(std::move(ranked[i]), count);
  }
  counts = std::move(kept);
}

void LengthDistribution::add(std::uint64_t length, std::uint64_t n) {
  if (length == 0) throw FeatureError("length must be positive");
  counts[length] += n;
}

void LengthDistribution::merge(const LengthDistribution& other) {
  if (other.level != level)
    throw FeatureError("merging incompatible length distributions");
  for (const auto& [len, count] : other.counts) counts[len] += count;
}

std::uint64_t LengthDistribution::total() const {
  std::uint64_t sum = 0;
  for (const auto& [len, count] : counts) sum += count;
  return sum;
}

std::vector<std::string> char_ngrams(const ParsedWord& parsed, int n) {
  if (n < 1 || n > 3) throw FeatureError("character n-gram order must be 1-3");
  std::vector<std::string> out;
  const auto& units = parsed.units;
  if (units.size() < static_cast<std::size_t>(n)) return out;
  out.reserve(units.size() - n + 1);
  for (std::size_t i = 0; i + n <= units.size(); ++i) {
    std::string key;
    for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j)
      key += units[i + j].key();
    out.push_back(std::move(key));
  }
  return out;
}

std::vector<std::string> ngram_keys(const std::vector<std::string>& items,
                                    int n) {
  std::vector<std::string> out;
  if (n < 1 || items.size() < static_cast<std::size_t>(n)) return out;
  out.reserve(items.size() - n + 1);
  for (std::size_t i = 0; i + n <= items.size(); ++i) {
    std::string key = items[i];
    for (std::size_t j = 1; j < static_cast<std::size_t>(n); ++j) {
      key += ' ';
      key += items[i + j];
    }
    out.push_back(std::move(key));
  }
  return out;
}

FrequencyTable build_frequency_table(const std::vector<std::string>& items,
                                     Level level, int order) {
  FrequencyTable table(level, order);
  for (const auto& item : items) table.add(item);
  return table;
}

double normalized_frequency(const FrequencyTable& table,
                            const std::string& key) {
  if (table.total == 0) throw FeatureError("empty frequency table");
  auto it = table.counts.find(key);
  if (it == table.counts.end()) return 0.0;
  return static_cast<double>(it->second) / static_cast<double>(table.total);
}

PairedSample top_k_pair(const FrequencyTable& first,
                        const FrequencyTable& second, std::size_t k) {
  if (first.total == 0 || second.total == 0)
    throw FeatureError("empty frequency table");
  if (first.level != second.level || first.order != second.order)
    throw FeatureError("pairing incompatible frequency tables");

  PairedSample pair;
  pair.source = RankingSource::kFirstSample;
  auto ranked = first.ranked_keys();
  if (ranked.size() > k) ranked.resize(k);
  pair.keys = std::move(ranked);
  pair.values1.reserve(pair.keys.size());
  pair.values2.reserve(pair.keys.size());
  for (const auto& key : pair.keys) {
    pair.values1.push_back(normalized_frequency(first, key));
    pair.values2.push_back(normalized_frequency(second, key));
  }
  return pair;
}

LengthDistribution length_distribution(
    const std::vector<std::uint64_t>& lengths, Level level) {
  LengthDistribution dist(level);
  for (auto len : lengths) dist.add(len);
  return dist;
}

PairedSample length_pair(const LengthDistribution& d1,
                         const LengthDistribution& d2, LengthMode mode) {
  if (d1.counts.empty() || d2.counts.empty())
    throw FeatureError("empty length distribution");

  std::vector<std::uint64_t> lengths;
  for (const auto& [len, count] : d1.counts) lengths.push_back(len);
  for (const auto& [len, count] : d2.counts) lengths.push_back(len);
  std::sort(lengths.begin(), lengths.end());
  lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());

  const double total1 = static_cast<double>(d1.total());
  const double total2 = static_cast<double>(d2.total());

  PairedSample pair;
  pair.source = RankingSource::kSymmetric;
  for (auto len : lengths) {
    auto it1 = d1.counts.find(len);
    auto it2 = d2.counts.find(len);
    const double c1 = it1 == d1.counts.end() ? 0.0
                                             : static_cast<double>(it1->second);
    const double c2 = it2 == d2.counts.end() ? 0.0
                                             : static_cast<double>(it2->second);
    pair.keys.push_back(std::to_string(len));
    if (mode == LengthMode::kRelativeFrequency) {
      pair.values1.push_back(c1 / total1);
      pair.values2.push_back(c2 / total2);
    } else {
      pair.values1.push_back(c1);
      pair.values2.push_back(c2);
    }
  }
  return pair;
}

}  // namespace bnc
