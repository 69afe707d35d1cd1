#ifndef BNC_MORPHOLOGY_HPP_
#define BNC_MORPHOLOGY_HPP_

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bnc {

/// A word split into optional prefixes, a non-empty root, and optional
/// suffixes. Joining the pieces reproduces the surface word exactly.
struct Segmentation {
  std::vector<std::string> prefixes;
  std::string root;
  std::vector<std::string> suffixes;

  std::size_t segment_length() const {
    return prefixes.size() + 1 + suffixes.size();
  }
  std::vector<std::string> segments() const;
  std::string joined() const;
  /// Codepoint offsets of the internal segment boundaries.
  std::vector<std::size_t> boundary_offsets() const;

  bool operator==(const Segmentation&) const = default;
};

/// Affix lists learned from a vocabulary, used by the greedy segmenter.
/// Affix scores are the number of vocabulary stems that support the affix.
struct SegmenterModel {
  std::map<std::string, std::uint32_t> suffix_scores;
  std::map<std::string, std::uint32_t> prefix_scores;
  std::map<std::string, std::uint64_t> vocabulary;
  std::size_t min_stem_len = 2;   // codepoints
  std::size_t min_affix_count = 2;
  std::size_t max_affix_len = 4;  // codepoints
  std::size_t max_suffixes = 3;
  std::size_t max_prefixes = 2;
};

struct EvalReport {
  double accuracy = 0;
  double precision = 0;
  double recall = 0;
  double fscore = 0;
};

struct MorphologyError : std::runtime_error {
  explicit MorphologyError(const std::string& what)
      : std::runtime_error(what) {}
};

struct SegmentationParseError : std::runtime_error {
  std::size_t line_number;
  SegmentationParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_number(line) {}
};

/// Learns affix inventories from a vocabulary: an affix is admitted when at
/// least min_affix_count distinct words decompose as stem+affix (or
/// affix+stem) with the stem itself in the vocabulary and at least
/// min_stem_len codepoints long.
SegmenterModel train_baseline(
    const std::map<std::string, std::uint64_t>& vocabulary,
    std::size_t min_stem_len = 2, std::size_t min_affix_count = 2);

/// Greedy segmentation: repeatedly strips the highest-scoring admissible
/// suffix, then prefix, stopping as soon as the remaining stem is a known
/// vocabulary word or nothing more can be stripped. Ties break toward the
/// longer affix, then lexicographically. Words that match no affix come
/// back whole (segment_length 1).
Segmentation segment(const SegmenterModel& model, std::string_view word);

/// Boundary-based scoring of predicted against gold segmentations over the
/// same word set. Accuracy is exact boundary-set match per word; precision
/// and recall pool boundary counts over all words. A prediction with no
/// boundaries at all scores precision 1 by convention.
EvalReport evaluate(const std::map<std::string, Segmentation>& predicted,
                    const std::map<std::string, Segmentation>& gold);

/// Reads a segmentation file: one `word<TAB>seg+seg+...` line per word with
/// the root segment wrapped in angle brackets, e.g. `prefix+<root>+suffix`.
/// Blank lines are skipped. Throws SegmentationParseError on malformed
/// lines.
std::map<std::string, Segmentation> load_segmentation_file(
    const std::string& path);

/// Parses one segmentation expression like `prefix+<root>+suffix`.
Segmentation parse_segmentation_expr(std::string_view word,
                                     std::string_view expr,
                                     std::size_t line_number);

}  // namespace bnc

#endif  // BNC_MORPHOLOGY_HPP_
