#ifndef BNC_TOKENIZER_HPP_
#define BNC_TOKENIZER_HPP_

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace bnc {

struct Sentence {
  std::vector<std::string> tokens;

  std::size_t word_length() const { return tokens.size(); }
};

/// Orthographic boundary configuration. Terminators end sentences and are
/// always separators too; separators additionally bound words.
struct TokenizerConfig {
  std::unordered_set<char32_t> terminators;
  std::unordered_set<char32_t> separators;  // includes the terminators
  // When true, tokens without any Bengali codepoint stay in sentences (they
  // count toward sentence length). They are never word tokens.
  bool count_foreign_words = false;

  static TokenizerConfig defaults();

  bool is_terminator(char32_t cp) const { return terminators.count(cp) > 0; }
  bool is_separator(char32_t cp) const { return separators.count(cp) > 0; }
};

/// True if the token contains at least one Bengali-block codepoint.
bool has_bengali(std::string_view token);

/// Splits text into sentences at terminator codepoints; within a sentence,
/// tokens are maximal separator-free runs. Sentences that end up empty are
/// dropped. Under the default config, tokens without Bengali codepoints are
/// dropped as well.
std::vector<Sentence> split_sentences(std::string_view text,
                                      const TokenizerConfig& cfg);

/// All Bengali word tokens of the text, in order.
std::vector<std::string> word_tokens(std::string_view text,
                                     const TokenizerConfig& cfg);

}  // namespace bnc

#endif  // BNC_TOKENIZER_HPP_
