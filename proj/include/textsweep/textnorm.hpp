#pragma once

#include <string>
#include <string_view>

#include "textsweep/config.hpp"
#include "textsweep/lexicon.hpp"

namespace textsweep {

enum class RunMode { d1, d2 };
enum class CoarsenKind { usr, url, num };

// Individual transformations. Each returns text whose tokens are separated
// by single spaces; composing them in the order used by normalize() is
// exactly equivalent to calling normalize().
std::string collapse_whitespace(std::string_view text);
std::string expand_abbreviations(std::string_view text, const LexiconSet& lex);
std::string map_emoticons(std::string_view text, const LexiconSet& lex);
std::string coarsen(std::string_view text, CoarsenKind kind);
std::string remove_entities(std::string_view text);
std::string lowercase(std::string_view text);
std::string remove_diacritics(std::string_view text);
// d1 reduces every run of 2+ identical characters to one occurrence,
// d2 reduces runs of 3+ to two occurrences.
std::string reduce_runs(std::string_view text, RunMode mode);
std::string remove_punctuation(std::string_view text, const LexiconSet& lex);
std::string attach_negation(std::string_view text, const LexiconSet& lex);
std::string remove_stopwords(std::string_view text, const LexiconSet& lex);
std::string lemmatize(std::string_view text, const LemmaMap& lemmas);
std::string stem_text(std::string_view text);

// Applies the configured transformations in the fixed pipeline order:
// abbreviation expansion, emo, usr, url, num, del_ent, lc, del_diac,
// del_d1/del_d2 (d1 wins when both are set), del_punc, neg, del_sw,
// lem, stem. With all flags off this is whitespace normalization plus
// data-driven abbreviation expansion.
std::string normalize(std::string_view text, const Configuration& cfg,
                      const LexiconSet& lex, const LemmaMap* lemmas = nullptr);

}  // namespace textsweep
