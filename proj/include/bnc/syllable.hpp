#ifndef BNC_SYLLABLE_HPP_
#define BNC_SYLLABLE_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "bnc/script.hpp"

namespace bnc {

struct Syllable {
  std::vector<ScriptUnit> units;

  /// Recomposed surface string of this syllable.
  std::string surface() const;
};

struct SyllableError : std::runtime_error {
  explicit SyllableError(const std::string& what) : std::runtime_error(what) {}
};

/// Groups the unit stream into syllables: a syllable closes after each
/// vowel-bearing unit (independent vowel or diacritic, inherent mark
/// included); khanda-ta, anusvara and visarga each stand as their own
/// syllable; the chandrabindu joins the syllable before it, as does a
/// word-final bare consonant.
///
/// In strict mode, a leading special consonant with no syllable to attach
/// to raises SyllableError; otherwise it becomes a standalone syllable.
std::vector<Syllable> syllabify(const ParsedWord& parsed, bool strict = true);

}  // namespace bnc

#endif  // BNC_SYLLABLE_HPP_
