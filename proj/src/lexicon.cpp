#include "textsweep/lexicon.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <stdexcept>

#include "textsweep/utf8.hpp"

namespace textsweep {
namespace {

std::string normalize_key(const std::string& word) {
  return utf8::strip_diacritics(utf8::lower(word));
}

void for_each_line(const std::string& path,
                   const std::function<void(std::string_view, std::size_t)>& fn) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open lexicon file: " + path);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    fn(line, lineno);
  }
}

std::pair<std::string, std::string> split_tsv_pair(std::string_view line,
                                                   const std::string& path,
                                                   std::size_t lineno) {
  const std::size_t tab = line.find('\t');
  if (tab == std::string_view::npos || tab == 0 || tab + 1 >= line.size()) {
    throw std::runtime_error(path + ":" + std::to_string(lineno) +
                             ": expected two tab-separated columns");
  }
  return {std::string(line.substr(0, tab)), std::string(line.substr(tab + 1))};
}

}  // namespace

void LexiconSet::add_stopword(const std::string& word) {
  const std::string lowered = utf8::lower(word);
  stopwords.insert(lowered);
  stopwords.insert(utf8::strip_diacritics(lowered));
}

void LexiconSet::add_emoticon(const std::string& emoticon,
                              const std::string& polarity_or_text) {
  if (emoticon.empty()) throw std::invalid_argument("empty emoticon key");
  std::string replacement;
  if (polarity_or_text == "pos") replacement = "_positivo";
  else if (polarity_or_text == "neg") replacement = "_negativo";
  else if (polarity_or_text == "neu") replacement = "_neutro";
  else replacement = polarity_or_text;
  if (emoticons.emplace(emoticon, std::move(replacement)).second) {
    emoticons_longest_first.push_back(emoticon);
    std::sort(emoticons_longest_first.begin(), emoticons_longest_first.end(),
              [](const std::string& a, const std::string& b) {
                if (a.size() != b.size()) return a.size() > b.size();
                return a < b;
              });
  }
}

void LexiconSet::add_abbreviation(const std::string& shortform,
                                  const std::string& expansion) {
  abbreviations[utf8::lower(shortform)] = expansion;
}

void LexiconSet::add_skip_word(const std::string& word) {
  skip_words.insert(normalize_key(word));
}

bool LexiconSet::is_stopword(const std::string& token) const {
  return stopwords.count(normalize_key(token)) > 0;
}

bool LexiconSet::is_skip_word(const std::string& token) const {
  return skip_words.count(normalize_key(token)) > 0;
}

bool LexiconSet::is_known_emoticon(const std::string& token) const {
  return emoticons.count(token) > 0;
}

void load_stopwords_file(LexiconSet& lex, const std::string& path) {
  for_each_line(path, [&](std::string_view line, std::size_t) {
    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (!line.empty()) lex.add_stopword(std::string(line));
  });
}

void load_emoticons_file(LexiconSet& lex, const std::string& path) {
  for_each_line(path, [&](std::string_view line, std::size_t lineno) {
    if (line.empty() || line.front() == '#') return;
    auto [emoticon, polarity] = split_tsv_pair(line, path, lineno);
    lex.add_emoticon(emoticon, polarity);
  });
}

void load_abbreviations_file(LexiconSet& lex, const std::string& path) {
  for_each_line(path, [&](std::string_view line, std::size_t lineno) {
    if (line.empty() || line.front() == '#') return;
    auto [shortform, expansion] = split_tsv_pair(line, path, lineno);
    lex.add_abbreviation(shortform, expansion);
  });
}

void load_skip_words_file(LexiconSet& lex, const std::string& path) {
  for_each_line(path, [&](std::string_view line, std::size_t) {
    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (!line.empty()) lex.add_skip_word(std::string(line));
  });
}

LemmaMap load_lemmas_file(const std::string& path) {
  LemmaMap lemmas;
  for_each_line(path, [&](std::string_view line, std::size_t lineno) {
    if (line.empty() || line.front() == '#') return;
    auto [form, lemma] = split_tsv_pair(line, path, lineno);
    lemmas[form] = lemma;
  });
  return lemmas;
}

LexiconSet load_lexicon_dir(const std::string& dir) {
  namespace fs = std::filesystem;
  LexiconSet lex;
  load_stopwords_file(lex, (fs::path(dir) / "stopwords.txt").string());
  load_emoticons_file(lex, (fs::path(dir) / "emoticons.tsv").string());
  load_abbreviations_file(lex, (fs::path(dir) / "abbreviations.tsv").string());
  load_skip_words_file(lex, (fs::path(dir) / "skip_words.txt").string());
  return lex;
}

LemmaMap load_lemmas_dir(const std::string& dir) {
  namespace fs = std::filesystem;
  const fs::path path = fs::path(dir) / "lemmas.tsv";
  if (!fs::exists(path)) return {};
  return load_lemmas_file(path.string());
}

}  // namespace textsweep
