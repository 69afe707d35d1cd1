#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "bnc/script.hpp"
#include "bnc/syllable.hpp"
#include "bnc/utf8.hpp"

using namespace bnc;

namespace {

std::vector<std::string> surfaces(const std::vector<Syllable>& syllables) {
  std::vector<std::string> out;
  out.reserve(syllables.size());
  for (const auto& s : syllables) out.push_back(s.surface());
  return out;
}

std::size_t closed_form_count(const ParsedWord& parsed) {
  std::size_t count = 0;
  for (const auto& u : parsed.units) {
    if (u.kind == UnitKind::kIndependentVowel ||
        u.kind == UnitKind::kVowelDiacritic)
      ++count;
    else if (u.kind == UnitKind::kSpecialConsonant && u.codepoint != 0x0981)
      ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("akasmat splits into four syllables") {
  const auto syllables = syllabify(parse_word("অকস্মাৎ"));
  CHECK(surfaces(syllables) ==
        std::vector<std::string>{"অ", "ক", "স্মা", "ৎ"});
  REQUIRE(syllables.size() == 4);
  // The second syllable is the consonant with its invisible inherent vowel.
  REQUIRE(syllables[1].units.size() == 2);
  CHECK(syllables[1].units[1].codepoint == kInherentMark);
}

TEST_CASE("chandrabindu joins the preceding syllable") {
  const auto syllables = syllabify(parse_word("বাঁধা"));
  CHECK(surfaces(syllables) == std::vector<std::string>{"বাঁ", "ধা"});
}

TEST_CASE("one vowel is one syllable") {
  CHECK(syllabify(parse_word("অ")).size() == 1);
}

TEST_CASE("anusvara closes its own syllable") {
  const auto syllables = syllabify(parse_word("বাংলা"));
  CHECK(surfaces(syllables) == std::vector<std::string>{"বা", "ং", "লা"});
}

TEST_CASE("a word-final bare consonant joins the preceding syllable") {
  const auto syllables = syllabify(parse_word("বাক্"));
  REQUIRE(syllables.size() == 1);
  CHECK(syllables[0].surface() == "বাক্");
}

TEST_CASE("leading special consonants: strict errors, lenient standalone") {
  const auto parsed = parse_word("ংলা");
  CHECK_THROWS_AS(syllabify(parsed, /*strict=*/true), SyllableError);
  const auto lenient = syllabify(parsed, /*strict=*/false);
  CHECK(surfaces(lenient) == std::vector<std::string>{"ং", "লা"});

  const auto nasal = parse_word("ঁকা");
  CHECK_THROWS_AS(syllabify(nasal, /*strict=*/true), SyllableError);
  CHECK(syllabify(nasal, /*strict=*/false).size() == 2);
}

TEST_CASE("empty word is rejected") {
  CHECK_THROWS_AS(syllabify(ParsedWord{}), SyllableError);
}

TEST_CASE("syllables partition the unit stream losslessly") {
  std::mt19937 rng(314159);
  std::vector<char32_t> consonants;
  for (const auto& u : unit_inventory())
    if (u.kind == UnitKind::kConsonant) consonants.push_back(u.codepoint);
  const std::vector<char32_t> signs{0x09BE, 0x09BF, 0x09C0, 0x09C1, 0x09C7,
                                    0x09CB};
  const std::vector<char32_t> specials{0x09CE, 0x0982, 0x0983, 0x0981};
  std::vector<char32_t> vowels;
  for (const auto& u : unit_inventory())
    if (u.kind == UnitKind::kIndependentVowel) vowels.push_back(u.codepoint);

  for (int iter = 0; iter < 400; ++iter) {
    std::string word;
    utf8::append(word, rng() % 2 ? consonants[rng() % consonants.size()]
                                 : vowels[rng() % vowels.size()]);
    const int extra = static_cast<int>(rng() % 6);
    for (int p = 0; p < extra; ++p) {
      switch (rng() % 8) {
        case 0: utf8::append(word, vowels[rng() % vowels.size()]); break;
        case 1: utf8::append(word, specials[rng() % specials.size()]); break;
        default: {
          const int cluster = 1 + static_cast<int>(rng() % 3);
          for (int c = 0; c < cluster; ++c) {
            if (c > 0) utf8::append(word, kVirama);
            utf8::append(word, consonants[rng() % consonants.size()]);
          }
          if (rng() % 2) utf8::append(word, signs[rng() % signs.size()]);
        }
      }
    }
    CAPTURE(word);
    const ParsedWord parsed = parse_word(word);
    const auto syllables = syllabify(parsed, /*strict=*/false);

    std::vector<ScriptUnit> flattened;
    for (const auto& syl : syllables)
      flattened.insert(flattened.end(), syl.units.begin(), syl.units.end());
    CHECK(flattened == parsed.units);
    CHECK(syllables.size() <= parsed.char_length());
    // The generator never puts a special at word start, so the closed-form
    // count applies.
    CHECK(syllables.size() == closed_form_count(parsed));
  }
}

TEST_CASE("syllable count matches the closed form on well-formed words") {
  for (const char* word :
       {"অকস্মাৎ", "বাঁধা", "বাংলা", "খুশীতে", "সন্ত্রস্ত", "আলোক",
        "দুঃখ", "প্রদেশটিকে", "হঠাৎ", "চাঁদ", "সংস্কৃতি"}) {
    CAPTURE(word);
    const ParsedWord parsed = parse_word(word);
    CHECK(syllabify(parsed).size() == closed_form_count(parsed));
  }
}
