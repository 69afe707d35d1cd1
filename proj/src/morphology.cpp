#include "bnc/morphology.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <set>
#include <tuple>

#include "bnc/utf8.hpp"

namespace bnc {

namespace {

std::size_t codepoint_length(std::string_view s) {
  return utf8::decode(s).size();
}

// Splits a word at every codepoint boundary, up to max_affix_len codepoints
// from the chosen end, and reports (affix, stem) candidates.
template <typename Fn>
void for_each_suffix_split(const std::vector<char32_t>& cps,
                           std::size_t max_affix_len, Fn&& fn) {
  const std::size_t n = cps.size();
  for (std::size_t len = 1; len <= max_affix_len && len < n; ++len) {
    std::string stem = utf8::encode(
        std::vector<char32_t>(cps.begin(), cps.end() - static_cast<long>(len)));
    std::string affix = utf8::encode(
        std::vector<char32_t>(cps.end() - static_cast<long>(len), cps.end()));
    fn(std::move(affix), std::move(stem), n - len);
  }
}

template <typename Fn>
void for_each_prefix_split(const std::vector<char32_t>& cps,
                           std::size_t max_affix_len, Fn&& fn) {
  const std::size_t n = cps.size();
  for (std::size_t len = 1; len <= max_affix_len && len < n; ++len) {
    std::string affix = utf8::encode(
        std::vector<char32_t>(cps.begin(), cps.begin() + static_cast<long>(len)));
    std::string stem = utf8::encode(
        std::vector<char32_t>(cps.begin() + static_cast<long>(len), cps.end()));
    fn(std::move(affix), std::move(stem), n - len);
  }
}

}  // namespace

std::vector<std::string> Segmentation::segments() const {
  std::vector<std::string> out;
  out.reserve(segment_length());
  out.insert(out.end(), prefixes.begin(), prefixes.end());
  out.push_back(root);
  out.insert(out.end(), suffixes.begin(), suffixes.end());
  return out;
}

std::string Segmentation::joined() const {
  std::string out;
  for (const auto& s : segments()) out += s;
  return out;
}

std::vector<std::size_t> Segmentation::boundary_offsets() const {
  std::vector<std::size_t> offsets;
  std::size_t pos = 0;
  const auto segs = segments();
  for (std::size_t i = 0; i + 1 < segs.size(); ++i) {
    pos += codepoint_length(segs[i]);
    offsets.push_back(pos);
  }
  return offsets;
}

SegmenterModel train_baseline(
    const std::map<std::string, std::uint64_t>& vocabulary,
    std::size_t min_stem_len, std::size_t min_affix_count) {
  if (vocabulary.empty()) throw MorphologyError("empty vocabulary");

  SegmenterModel model;
  model.vocabulary = vocabulary;
  model.min_stem_len = min_stem_len;
  model.min_affix_count = min_affix_count;

  std::map<std::string, std::set<std::string>> suffix_stems;
  std::map<std::string, std::set<std::string>> prefix_stems;

  for (const auto& [word, count] : vocabulary) {
    const auto cps = utf8::decode(word);
    for_each_suffix_split(cps, model.max_affix_len,
                          [&](std::string affix, std::string stem,
                              std::size_t stem_len) {
                            if (stem_len < min_stem_len) return;
                            if (!vocabulary.count(stem)) return;
                            suffix_stems[std::move(affix)].insert(
                                std::move(stem));
                          });
    for_each_prefix_split(cps, model.max_affix_len,
                          [&](std::string affix, std::string stem,
                              std::size_t stem_len) {
                            if (stem_len < min_stem_len) return;
                            if (!vocabulary.count(stem)) return;
                            prefix_stems[std::move(affix)].insert(
                                std::move(stem));
                          });
  }

  for (const auto& [affix, stems] : suffix_stems)
    if (stems.size() >= min_affix_count)
      model.suffix_scores[affix] = static_cast<std::uint32_t>(stems.size());
  for (const auto& [affix, stems] : prefix_stems)
    if (stems.size() >= min_affix_count)
      model.prefix_scores[affix] = static_cast<std::uint32_t>(stems.size());

  return model;
}

namespace {

// Picks the best-scoring affix that matches the given end of `cps` and
// leaves at least min_stem_len codepoints. Ties prefer the longer affix,
// then the lexicographically smaller one.
std::optional<std::pair<std::string, std::size_t>> best_strip(
    const std::map<std::string, std::uint32_t>& scores,
    const std::vector<char32_t>& cps, const SegmenterModel& model,
    bool suffix_side) {
  std::optional<std::tuple<std::uint32_t, std::size_t, std::string>> best;
  auto consider = [&](std::string affix, std::string, std::size_t stem_len) {
    if (stem_len < model.min_stem_len) return;
    auto it = scores.find(affix);
    if (it == scores.end()) return;
    const std::size_t affix_len = utf8::decode(affix).size();
    if (!best || it->second > std::get<0>(*best) ||
        (it->second == std::get<0>(*best) &&
         (affix_len > std::get<1>(*best) ||
          (affix_len == std::get<1>(*best) && affix < std::get<2>(*best)))))
      best = {it->second, affix_len, std::move(affix)};
  };
  if (suffix_side)
    for_each_suffix_split(cps, model.max_affix_len, consider);
  else
    for_each_prefix_split(cps, model.max_affix_len, consider);
  if (!best) return std::nullopt;
  return std::make_pair(std::get<2>(*best), std::get<1>(*best));
}

}  // namespace

Segmentation segment(const SegmenterModel& model, std::string_view word) {
  if (word.empty()) throw MorphologyError("empty word");

  std::vector<char32_t> stem = utf8::decode(word);
  std::vector<std::string> suffixes_outer_first;
  std::vector<std::string> prefixes_outer_first;
  bool found_root = false;

  auto stem_in_vocab = [&] {
    return model.vocabulary.count(utf8::encode(stem)) > 0;
  };

  while (suffixes_outer_first.size() < model.max_suffixes && !found_root) {
    auto strip = best_strip(model.suffix_scores, stem, model, true);
    if (!strip) break;
    stem.resize(stem.size() - strip->second);
    suffixes_outer_first.push_back(std::move(strip->first));
    found_root = stem_in_vocab();
  }
  while (prefixes_outer_first.size() < model.max_prefixes && !found_root) {
    auto strip = best_strip(model.prefix_scores, stem, model, false);
    if (!strip) break;
    stem.erase(stem.begin(), stem.begin() + static_cast<long>(strip->second));
    prefixes_outer_first.push_back(std::move(strip->first));
    found_root = stem_in_vocab();
  }

  Segmentation seg;
  seg.root = utf8::encode(stem);
  seg.prefixes.assign(prefixes_outer_first.rbegin(),
                      prefixes_outer_first.rend());
  seg.suffixes.assign(suffixes_outer_first.rbegin(),
                      suffixes_outer_first.rend());
  return seg;
}

EvalReport evaluate(const std::map<std::string, Segmentation>& predicted,
                    const std::map<std::string, Segmentation>& gold) {
  if (predicted.empty() || gold.empty())
    throw MorphologyError("empty segmentation map");
  if (predicted.size() != gold.size())
    throw MorphologyError("predicted and gold word sets differ");

  std::size_t exact_matches = 0;
  std::size_t predicted_total = 0;
  std::size_t gold_total = 0;
  std::size_t hits = 0;

  for (const auto& [word, gold_seg] : gold) {
    auto it = predicted.find(word);
    if (it == predicted.end())
      throw MorphologyError("predicted and gold word sets differ: " + word);
    const auto pred_bounds = it->second.boundary_offsets();
    const auto gold_bounds = gold_seg.boundary_offsets();
    if (pred_bounds == gold_bounds) ++exact_matches;
    predicted_total += pred_bounds.size();
    gold_total += gold_bounds.size();
    for (std::size_t b : pred_bounds)
      if (std::find(gold_bounds.begin(), gold_bounds.end(), b) !=
          gold_bounds.end())
        ++hits;
  }

  EvalReport report;
  report.accuracy = static_cast<double>(exact_matches) /
                    static_cast<double>(gold.size());
  report.precision = predicted_total == 0
                         ? 1.0
                         : static_cast<double>(hits) /
                               static_cast<double>(predicted_total);
  report.recall = gold_total == 0 ? 1.0
                                  : static_cast<double>(hits) /
                                        static_cast<double>(gold_total);
  report.fscore = (report.precision + report.recall) > 0
                      ? 2 * report.precision * report.recall /
                            (report.precision + report.recall)
                      : 0.0;
  return report;
}

Segmentation parse_segmentation_expr(std::string_view word,
                                     std::string_view expr,
                                     std::size_t line_number) {
  Segmentation seg;
  bool seen_root = false;
  std::size_t start = 0;
  auto take = [&](std::string_view piece) {
    if (piece.empty())
      throw SegmentationParseError(line_number, "empty segment");
    if (piece.size() >= 2 && piece.front() == '<' && piece.back() == '>') {
      if (seen_root)
        throw SegmentationParseError(line_number, "multiple roots");
      seg.root = std::string(piece.substr(1, piece.size() - 2));
      if (seg.root.empty())
        throw SegmentationParseError(line_number, "empty root");
      seen_root = true;
    } else if (!seen_root) {
      seg.prefixes.emplace_back(piece);
    } else {
      seg.suffixes.emplace_back(piece);
    }
  };
  for (std::size_t i = 0; i <= expr.size(); ++i) {
    if (i == expr.size() || expr[i] == '+') {
      take(expr.substr(start, i - start));
      start = i + 1;
    }
  }
  if (!seen_root)
    throw SegmentationParseError(line_number, "no bracketed root segment");
  if (seg.joined() != word)
    throw SegmentationParseError(line_number,
                                 "segments do not rejoin to the word");
  return seg;
}

std::map<std::string, Segmentation> load_segmentation_file(
    const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MorphologyError("cannot open segmentation file: " + path);

  std::map<std::string, Segmentation> out;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw SegmentationParseError(line_number, "missing TAB separator");
    const std::string_view word = std::string_view(line).substr(0, tab);
    const std::string_view expr = std::string_view(line).substr(tab + 1);
    if (word.empty())
      throw SegmentationParseError(line_number, "empty word field");
    out[std::string(word)] = parse_segmentation_expr(word, expr, line_number);
  }
  return out;
}

}  // namespace bnc
