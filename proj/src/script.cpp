#include "bnc/script.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

#include "bnc/utf8.hpp"

namespace bnc {

namespace {

struct UnitSpec {
  char32_t cp;
  UnitKind kind;
  const char* translit;
};

// 11 independent vowels. The archaic vocalic-L letter (U+098C) is omitted.
// 35 regular consonants: the 32 assigned codepoints of U+0995..U+09B9 plus
// the three nukta letters. 4 special consonants. 10 visible vowel signs plus
// the inherent mark = 11 diacritics. Total 61.
constexpr std::array<UnitSpec, 61> kInventory{{
    {0x0985, UnitKind::kIndependentVowel, "a"},
    {0x0986, UnitKind::kIndependentVowel, "A"},
    {0x0987, UnitKind::kIndependentVowel, "i"},
    {0x0988, UnitKind::kIndependentVowel, "I"},
    {0x0989, UnitKind::kIndependentVowel, "u"},
    {0x098A, UnitKind::kIndependentVowel, "U"},
    {0x098B, UnitKind::kIndependentVowel, "RRi"},
    {0x098F, UnitKind::kIndependentVowel, "e"},
    {0x0990, UnitKind::kIndependentVowel, "ai"},
    {0x0993, UnitKind::kIndependentVowel, "o"},
    {0x0994, UnitKind::kIndependentVowel, "au"},
    {0x0995, UnitKind::kConsonant, "k"},
    {0x0996, UnitKind::kConsonant, "kh"},
    {0x0997, UnitKind::kConsonant, "g"},
    {0x0998, UnitKind::kConsonant, "gh"},
    {0x0999, UnitKind::kConsonant, "~N"},
    {0x099A, UnitKind::kConsonant, "ch"},
    {0x099B, UnitKind::kConsonant, "Ch"},
    {0x099C, UnitKind::kConsonant, "j"},
    {0x099D, UnitKind::kConsonant, "jh"},
    {0x099E, UnitKind::kConsonant, "~n"},
    {0x099F, UnitKind::kConsonant, "T"},
    {0x09A0, UnitKind::kConsonant, "Th"},
    {0x09A1, UnitKind::kConsonant, "D"},
    {0x09A2, UnitKind::kConsonant, "Dh"},
    {0x09A3, UnitKind::kConsonant, "N"},
    {0x09A4, UnitKind::kConsonant, "t"},
    {0x09A5, UnitKind::kConsonant, "th"},
    {0x09A6, UnitKind::kConsonant, "d"},
    {0x09A7, UnitKind::kConsonant, "dh"},
    {0x09A8, UnitKind::kConsonant, "n"},
    {0x09AA, UnitKind::kConsonant, "p"},
    {0x09AB, UnitKind::kConsonant, "ph"},
    {0x09AC, UnitKind::kConsonant, "b"},
    {0x09AD, UnitKind::kConsonant, "bh"},
    {0x09AE, UnitKind::kConsonant, "m"},
    {0x09AF, UnitKind::kConsonant, "y"},
    {0x09B0, UnitKind::kConsonant, "r"},
    {0x09B2, UnitKind::kConsonant, "l"},
    {0x09B6, UnitKind::kConsonant, "sh"},
    {0x09B7, UnitKind::kConsonant, "Sh"},
    {0x09B8, UnitKind::kConsonant, "s"},
    {0x09B9, UnitKind::kConsonant, "h"},
    {0x09DC, UnitKind::kConsonant, ".D"},
    {0x09DD, UnitKind::kConsonant, ".Dh"},
    {0x09DF, UnitKind::kConsonant, "Y"},
    {0x09CE, UnitKind::kSpecialConsonant, "t.h"},
    {0x0982, UnitKind::kSpecialConsonant, ".n"},
    {0x0983, UnitKind::kSpecialConsonant, "H"},
    {0x0981, UnitKind::kSpecialConsonant, ".N"},
    {0x09BE, UnitKind::kVowelDiacritic, "A"},
    {0x09BF, UnitKind::kVowelDiacritic, "i"},
    {0x09C0, UnitKind::kVowelDiacritic, "I"},
    {0x09C1, UnitKind::kVowelDiacritic, "u"},
    {0x09C2, UnitKind::kVowelDiacritic, "U"},
    {0x09C3, UnitKind::kVowelDiacritic, "RRi"},
    {0x09C7, UnitKind::kVowelDiacritic, "e"},
    {0x09C8, UnitKind::kVowelDiacritic, "ai"},
    {0x09CB, UnitKind::kVowelDiacritic, "o"},
    {0x09CC, UnitKind::kVowelDiacritic, "au"},
    {kInherentMark, UnitKind::kVowelDiacritic, "a"},
}};

const std::vector<ScriptUnit>& inventory_vector() {
  static const std::vector<ScriptUnit> units = [] {
    std::vector<ScriptUnit> v;
    v.reserve(kInventory.size());
    for (const auto& s : kInventory)
      v.push_back(ScriptUnit{s.kind, s.cp, s.translit});
    return v;
  }();
  return units;
}

const std::unordered_map<char32_t, const ScriptUnit*>& inventory_index() {
  static const auto* index = [] {
    auto* m = new std::unordered_map<char32_t, const ScriptUnit*>;
    for (const auto& u : inventory_vector()) m->emplace(u.codepoint, &u);
    return m;
  }();
  return *index;
}

}  // namespace

ParseError::ParseError(ParseErrorKind k, char32_t cp, std::size_t pos)
    : std::runtime_error(
          (k == ParseErrorKind::kEmptyWord
               ? std::string("empty word")
               : std::string(k == ParseErrorKind::kUnknownCodepoint
                                 ? "unknown codepoint U+"
                                 : "misplaced mark U+") +
                     [cp] {
                       char buf[8];
                       std::snprintf(buf, sizeof buf, "%04X",
                                     static_cast<unsigned>(cp));
                       return std::string(buf);
                     }() +
                     " at position " + std::to_string(pos))),
      error_kind(k),
      codepoint(cp),
      position(pos) {}

std::string ScriptUnit::key() const {
  if (codepoint == kInherentMark) return "·";
  return utf8::encode(codepoint);
}

bool is_independent_vowel(char32_t cp) {
  return (cp >= 0x0985 && cp <= 0x098B) || cp == 0x098F || cp == 0x0990 ||
         cp == 0x0993 || cp == 0x0994;
}

bool is_regular_consonant(char32_t cp) {
  if (cp >= 0x0995 && cp <= 0x09B9) {
    // Unassigned gaps in the block.
    return cp != 0x09A9 && cp != 0x09B1 && !(cp >= 0x09B3 && cp <= 0x09B5);
  }
  return cp == 0x09DC || cp == 0x09DD || cp == 0x09DF;
}

bool is_special_consonant(char32_t cp) {
  return cp == 0x09CE || cp == 0x0982 || cp == 0x0983 || cp == 0x0981;
}

bool is_vowel_sign(char32_t cp) {
  return (cp >= 0x09BE && cp <= 0x09C3) || cp == 0x09C7 || cp == 0x09C8 ||
         cp == 0x09CB || cp == 0x09CC;
}

bool is_bengali_block(char32_t cp) { return cp >= 0x0980 && cp <= 0x09FF; }

const std::vector<ScriptUnit>& unit_inventory() { return inventory_vector(); }

const ScriptUnit& unit_for(char32_t cp) {
  const auto& index = inventory_index();
  auto it = index.find(cp);
  if (it == index.end())
    throw std::out_of_range("codepoint is not a script unit");
  return *it->second;
}

std::vector<char32_t> normalize_codepoints(const std::vector<char32_t>& cps) {
  std::vector<char32_t> out;
  out.reserve(cps.size());
  for (char32_t cp : cps) {
    if (cp == kZwj || cp == kZwnj) continue;
    if (!out.empty() && cp == kNukta) {
      switch (out.back()) {
        case 0x09A1: out.back() = 0x09DC; continue;  // ড় = ড + nukta
        case 0x09A2: out.back() = 0x09DD; continue;  // ঢ় = ঢ + nukta
        case 0x09AF: out.back() = 0x09DF; continue;  // য় = য + nukta
        default: break;
      }
    }
    if (!out.empty() && out.back() == 0x09C7) {
      if (cp == 0x09BE) { out.back() = 0x09CB; continue; }  // ো = ে + া
      if (cp == 0x09D7) { out.back() = 0x09CC; continue; }  // ৌ = ে + ৗ
    }
    out.push_back(cp);
  }
  return out;
}

std::string normalize_text(std::string_view word) {
  return utf8::encode(normalize_codepoints(utf8::decode(word)));
}

ParsedWord parse_word(std::string_view word) {
  const auto cps = normalize_codepoints(utf8::decode(word));
  if (cps.empty()) throw ParseError(ParseErrorKind::kEmptyWord, 0, 0);

  ParsedWord parsed;
  parsed.surface = utf8::encode(cps);
  parsed.units.reserve(cps.size() + cps.size() / 2);

  const std::size_t n = cps.size();
  std::size_t i = 0;
  while (i < n) {
    const char32_t cp = cps[i];
    if (is_independent_vowel(cp)) {
      parsed.units.push_back(unit_for(cp));
      ++i;
    } else if (is_special_consonant(cp)) {
      parsed.units.push_back(unit_for(cp));
      ++i;
    } else if (is_regular_consonant(cp)) {
      parsed.units.push_back(unit_for(cp));
      ++i;
      if (i < n && cps[i] == kVirama) {
        // Conjunct continuation, or a word-final hasanta leaving the
        // consonant bare. The next iteration handles whatever follows.
        ++i;
      } else if (i < n && is_vowel_sign(cps[i])) {
        parsed.units.push_back(unit_for(cps[i]));
        ++i;
      } else {
        parsed.units.push_back(unit_for(kInherentMark));
      }
    } else if (is_vowel_sign(cp) || cp == kVirama || cp == kNukta) {
      throw ParseError(ParseErrorKind::kMisplacedMark, cp, i);
    } else {
      throw ParseError(ParseErrorKind::kUnknownCodepoint, cp, i);
    }
  }
  return parsed;
}

std::string recompose_units(const std::vector<ScriptUnit>& units) {
  if (units.empty()) throw InvalidSequence("empty unit list");
  std::string out;
  const std::size_t n = units.size();
  for (std::size_t i = 0; i < n; ++i) {
    const ScriptUnit& u = units[i];
    switch (u.kind) {
      case UnitKind::kIndependentVowel:
      case UnitKind::kSpecialConsonant:
        utf8::append(out, u.codepoint);
        break;
      case UnitKind::kConsonant: {
        utf8::append(out, u.codepoint);
        const ScriptUnit* next = (i + 1 < n) ? &units[i + 1] : nullptr;
        if (next && next->kind == UnitKind::kVowelDiacritic) {
          if (next->codepoint != kInherentMark)
            utf8::append(out, next->codepoint);
          ++i;
        } else if (!next || next->kind == UnitKind::kConsonant) {
          // Non-final conjunct member, or word-final explicit hasanta.
          utf8::append(out, kVirama);
        } else {
          throw InvalidSequence("consonant not followed by a diacritic, "
                                "conjunct consonant, or word end");
        }
        break;
      }
      case UnitKind::kVowelDiacritic:
        throw InvalidSequence("vowel diacritic without a preceding consonant");
    }
  }
  return out;
}

std::string recompose(const ParsedWord& parsed) {
  return recompose_units(parsed.units);
}

}  // namespace bnc
