#pragma once

#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace textsweep {

using LemmaMap = std::unordered_map<std::string, std::string>;

// Immutable language resources shared by the normalization pipeline.
// Loaded once; safe to share across sweep workers.
struct LexiconSet {
  // Lowercase entries; diacritic-stripped forms are inserted alongside the
  // originals so membership tests work on stripped tokens.
  std::unordered_set<std::string> stopwords;

  // emoticon -> replacement token ("_positivo", "_negativo", "_neutro" or
  // literal text for polarity-free entries).
  std::unordered_map<std::string, std::string> emoticons;
  // Keys ordered by length descending then lexicographic, for longest-match
  // scanning.
  std::vector<std::string> emoticons_longest_first;

  // lowercase colloquialism -> expansion (possibly multi-word).
  std::unordered_map<std::string, std::string> abbreviations;

  // Pronouns, articles and copula forms skipped by negation attachment;
  // stored lowercase and diacritic-stripped.
  std::unordered_set<std::string> skip_words;

  void add_stopword(const std::string& word);
  void add_emoticon(const std::string& emoticon, const std::string& polarity_or_text);
  void add_abbreviation(const std::string& shortform, const std::string& expansion);
  void add_skip_word(const std::string& word);

  bool is_stopword(const std::string& token) const;
  bool is_skip_word(const std::string& token) const;
  bool is_known_emoticon(const std::string& token) const;
};

// File loaders. Formats:
//   stopwords / skip words: one word per line, '#' starts a comment
//   emoticons: TSV  emoticon<TAB>polarity   polarity in {pos,neg,neu} or text
//   abbreviations: TSV  short<TAB>expansion
//   lemmas: TSV  form<TAB>lemma
// All throw std::runtime_error with the offending line number.
void load_stopwords_file(LexiconSet& lex, const std::string& path);
void load_emoticons_file(LexiconSet& lex, const std::string& path);
void load_abbreviations_file(LexiconSet& lex, const std::string& path);
void load_skip_words_file(LexiconSet& lex, const std::string& path);
LemmaMap load_lemmas_file(const std::string& path);

// Loads the conventional file names (stopwords.txt, emoticons.tsv,
// abbreviations.tsv, skip_words.txt) from a directory.
LexiconSet load_lexicon_dir(const std::string& dir);
// lemmas.tsv from the same directory; empty map when the file is absent.
LemmaMap load_lemmas_dir(const std::string& dir);

}  // namespace textsweep
