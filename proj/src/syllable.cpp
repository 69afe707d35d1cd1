#include "bnc/syllable.hpp"

namespace bnc {

namespace {

bool is_chandrabindu(const ScriptUnit& u) { return u.codepoint == 0x0981; }

}  // namespace

std::string Syllable::surface() const { return recompose_units(units); }

std::vector<Syllable> syllabify(const ParsedWord& parsed, bool strict) {
  if (parsed.units.empty()) throw SyllableError("empty word");

  std::vector<Syllable> syllables;
  std::vector<ScriptUnit> current;

  auto attach_or_standalone = [&](const ScriptUnit& u) {
    if (!syllables.empty()) {
      syllables.back().units.push_back(u);
    } else if (strict) {
      throw SyllableError("special consonant with no syllable to attach to");
    } else {
      syllables.push_back(Syllable{{u}});
    }
  };

  for (const ScriptUnit& u : parsed.units) {
    switch (u.kind) {
      case UnitKind::kConsonant:
        current.push_back(u);
        break;
      case UnitKind::kIndependentVowel:
      case UnitKind::kVowelDiacritic:
        current.push_back(u);
        syllables.push_back(Syllable{std::move(current)});
        current.clear();
        break;
      case UnitKind::kSpecialConsonant:
        if (!current.empty()) {
          // Bare consonants before a special only occur in noisy input.
          if (strict)
            throw SyllableError("special consonant after a bare consonant");
          for (const auto& pending : current) attach_or_standalone(pending);
          current.clear();
        }
        if (is_chandrabindu(u)) {
          attach_or_standalone(u);
        } else {
          if (strict && syllables.empty() &&
              (u.codepoint == 0x0982 || u.codepoint == 0x0983))
            throw SyllableError("word begins with a special consonant");
          // Khanda-ta, anusvara and visarga stand as their own syllable.
          syllables.push_back(Syllable{{u}});
        }
        break;
    }
  }

  // A trailing bare consonant (explicit hasanta) has no vowel of its own and
  // joins the syllable before it.
  for (const auto& pending : current) {
    if (!syllables.empty())
      syllables.back().units.push_back(pending);
    else
      syllables.push_back(Syllable{{pending}});
  }

  return syllables;
}

}  // namespace bnc
