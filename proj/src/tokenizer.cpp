#include "bnc/tokenizer.hpp"

#include "bnc/script.hpp"
#include "bnc/utf8.hpp"

namespace bnc {

TokenizerConfig TokenizerConfig::defaults() {
  TokenizerConfig cfg;
  cfg.terminators = {U'?', U'!', U'.', U'।'};  // । devanagari danda
  cfg.separators = cfg.terminators;
  for (char32_t cp : {U' ', U'\t', U'\n', U'\r', U'\v', U'\f', U' ',
                      U'​', U' ', U' '})
    cfg.separators.insert(cp);
  // Word-bounding punctuation that does not end a sentence.
  for (char32_t cp :
       {U',', U';', U':', U'"', U'\'', U'(', U')', U'[', U']', U'{', U'}',
        U'<', U'>', U'/', U'\\', U'|', U'-', U'_', U'*', U'&', U'%', U'#',
        U'@', U'+', U'=', U'~', U'^', U'`', U'‘', U'’', U'“',
        U'”', U'–', U'—', U'…', U'«', U'»',
        U'॥'})  // ॥ double danda
    cfg.separators.insert(cp);
  return cfg;
}

bool has_bengali(std::string_view token) {
  for (char32_t cp : utf8::decode(token))
    if (is_bengali_block(cp)) return true;
  return false;
}

std::vector<Sentence> split_sentences(std::string_view text,
                                      const TokenizerConfig& cfg) {
  std::vector<Sentence> sentences;
  Sentence current;
  std::string token;

  auto flush_token = [&] {
    if (token.empty()) return;
    if (cfg.count_foreign_words || has_bengali(token))
      current.tokens.push_back(std::move(token));
    token.clear();
  };
  auto flush_sentence = [&] {
    flush_token();
    if (!current.tokens.empty()) sentences.push_back(std::move(current));
    current = Sentence{};
  };

  for (char32_t cp : utf8::decode(text)) {
    if (cfg.is_terminator(cp)) {
      flush_sentence();
    } else if (cfg.is_separator(cp)) {
      flush_token();
    } else {
      utf8::append(token, cp);
    }
  }
  flush_sentence();  // trailing text without a terminator
  return sentences;
}

std::vector<std::string> word_tokens(std::string_view text,
                                     const TokenizerConfig& cfg) {
  std::vector<std::string> words;
  for (const auto& sentence : split_sentences(text, cfg))
    for (const auto& token : sentence.tokens)
      if (has_bengali(token)) words.push_back(token);
  return words;
}

}  // namespace bnc
