#ifndef BNC_SCRIPT_HPP_
#define BNC_SCRIPT_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bnc {

// Structural codepoints. The virama joins consonants into conjuncts or kills
// the inherent vowel; it is never a counted unit.
inline constexpr char32_t kVirama = 0x09CD;
inline constexpr char32_t kZwnj = 0x200C;
inline constexpr char32_t kZwj = 0x200D;
inline constexpr char32_t kNukta = 0x09BC;

// Sentinel id for the invisible inherent-vowel mark. Outside the Unicode
// scalar range so it can never collide with a real codepoint.
inline constexpr char32_t kInherentMark = 0x110000;

enum class UnitKind : std::uint8_t {
  kIndependentVowel,
  kConsonant,
  kSpecialConsonant,
  kVowelDiacritic,
};

/// One decomposed script unit: an independent vowel, a regular consonant, a
/// special consonant, or a vowel diacritic (including the invisible inherent
/// mark).
struct ScriptUnit {
  UnitKind kind;
  char32_t codepoint;          // kInherentMark for the invisible mark
  std::string_view translit;   // ITRANS-style label, informational

  bool operator==(const ScriptUnit& other) const {
    return kind == other.kind && codepoint == other.codepoint;
  }

  /// Canonical UTF-8 key for frequency tables. The inherent mark renders as
  /// a middle dot, which cannot collide with Bengali text.
  std::string key() const;
};

struct ParsedWord {
  std::string surface;           // normalized form, see normalize_text()
  std::vector<ScriptUnit> units;

  std::size_t char_length() const { return units.size(); }
};

enum class ParseErrorKind : std::uint8_t {
  kEmptyWord,
  kUnknownCodepoint,   // codepoint outside the recognized set
  kMisplacedMark,      // recognized mark with no consonant to attach to
};

struct ParseError : std::runtime_error {
  ParseErrorKind error_kind;
  char32_t codepoint;
  std::size_t position;  // codepoint index in the normalized input
  ParseError(ParseErrorKind k, char32_t cp, std::size_t pos);
};

struct InvalidSequence : std::runtime_error {
  explicit InvalidSequence(const std::string& what) : std::runtime_error(what) {}
};

// Codepoint classification over the normalized stream.
bool is_independent_vowel(char32_t cp);
bool is_regular_consonant(char32_t cp);
bool is_special_consonant(char32_t cp);
bool is_vowel_sign(char32_t cp);
bool is_bengali_block(char32_t cp);

/// The closed inventory: 11 independent vowels, 35 regular consonants,
/// 4 special consonants, 11 vowel diacritics (inherent mark included).
const std::vector<ScriptUnit>& unit_inventory();

/// Looks up the inventory entry for a codepoint (or kInherentMark).
/// Throws std::out_of_range for codepoints not in the inventory.
const ScriptUnit& unit_for(char32_t cp);

/// Project normal form: drops ZWJ/ZWNJ and composes decomposed pairs to
/// their precomposed codepoints (nukta forms to U+09DC/U+09DD/U+09DF,
/// two-part vowel signs to U+09CB/U+09CC), so that both spellings of e.g.
/// the ra-with-nukta letter decompose to the same unit.
std::string normalize_text(std::string_view word);
std::vector<char32_t> normalize_codepoints(const std::vector<char32_t>& cps);

/// Decomposes one word into its unit sequence.
/// Throws ParseError on empty input, codepoints outside the recognized set,
/// and structurally misplaced marks.
ParsedWord parse_word(std::string_view word);

/// Rebuilds the normalized surface string from a unit sequence, re-inserting
/// viramas for conjunct members and word-final bare consonants.
/// Throws InvalidSequence if the unit list violates the structural rules.
std::string recompose(const ParsedWord& parsed);
std::string recompose_units(const std::vector<ScriptUnit>& units);

}  // namespace bnc

#endif  // BNC_SCRIPT_HPP_
