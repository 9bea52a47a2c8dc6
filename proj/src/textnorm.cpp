#include "textsweep/textnorm.hpp"

#include <array>
#include <cctype>
#include <vector>

#include "textsweep/stemmer.hpp"
#include "textsweep/utf8.hpp"

namespace textsweep {
namespace {

bool is_ws(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

std::vector<std::string> split_tokens(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_ws(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_ws(text[j])) ++j;
    if (j > i) tokens.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out.push_back(' ');
    out += t;
  }
  return out;
}

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_marker(const std::string& token) {
  const std::string key = utf8::strip_diacritics(utf8::lower(token));
  return key == "no" || key == "nunca" || key == "jamas" || key == "sin";
}

bool is_pure_punct(const std::string& token) {
  const auto cps = utf8::decode(token);
  if (cps.empty()) return false;
  for (char32_t cp : cps) {
    if (!utf8::is_punct(cp)) return false;
  }
  return true;
}

// Splits attached punctuation runs into standalone tokens, so that "auto:("
// becomes "auto :(" and "entretenimiento;" becomes "entretenimiento ;".
// Known emoticons and '_'-prefixed tags are kept whole.
std::vector<std::string> split_punct_runs(const std::vector<std::string>& tokens,
                                          const LexiconSet& lex) {
  std::vector<std::string> out;
  for (const auto& token : tokens) {
    if (token.front() == '_' || lex.is_known_emoticon(token)) {
      out.push_back(token);
      continue;
    }
    const auto cps = utf8::decode(token);
    std::size_t i = 0;
    while (i < cps.size()) {
      const bool punct = utf8::is_punct(cps[i]);
      std::size_t j = i;
      while (j < cps.size() && utf8::is_punct(cps[j]) == punct) ++j;
      out.push_back(utf8::encode(cps.substr(i, j - i)));
      i = j;
    }
  }
  return out;
}

}  // namespace

std::string collapse_whitespace(std::string_view text) {
  return join_tokens(split_tokens(text));
}

std::string expand_abbreviations(std::string_view text, const LexiconSet& lex) {
  if (lex.abbreviations.empty()) return collapse_whitespace(text);
  std::vector<std::string> out;
  for (auto& token : split_tokens(text)) {
    const auto it = lex.abbreviations.find(utf8::lower(token));
    if (it == lex.abbreviations.end()) {
      out.push_back(std::move(token));
    } else {
      for (auto& word : split_tokens(it->second)) out.push_back(std::move(word));
    }
  }
  return join_tokens(out);
}

std::string map_emoticons(std::string_view text, const LexiconSet& lex) {
  if (lex.emoticons.empty()) return collapse_whitespace(text);
  const auto alnum = [](char c) { return std::isalnum(static_cast<unsigned char>(c)); };
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const std::string* replacement = nullptr;
    std::size_t matched = 0;
    for (const auto& emo : lex.emoticons_longest_first) {
      if (text.compare(i, emo.size(), emo) != 0) continue;
      // reject matches glued to surrounding word characters, e.g. "xD"
      // inside a word; punctuation-edged emoticons always qualify
      const bool left_ok = i == 0 || !alnum(text[i - 1]) || !alnum(emo.front());
      const bool right_ok = i + emo.size() == text.size() ||
                            !alnum(text[i + emo.size()]) || !alnum(emo.back());
      if (!left_ok || !right_ok) continue;
      replacement = &lex.emoticons.at(emo);
      matched = emo.size();
      break;
    }
    if (replacement != nullptr) {
      out.push_back(' ');
      out += *replacement;
      out.push_back(' ');
      i += matched;
    } else {
      out.push_back(text[i]);
      ++i;
    }
  }
  return collapse_whitespace(out);
}

std::string coarsen(std::string_view text, CoarsenKind kind) {
  std::vector<std::string> tokens = split_tokens(text);
  switch (kind) {
    case CoarsenKind::usr:
      for (auto& token : tokens) {
        if (token.size() < 2 || token[0] != '@') continue;
        bool all_word = true;
        for (std::size_t i = 1; i < token.size(); ++i) {
          if (!is_word_char(token[i])) {
            all_word = false;
            break;
          }
        }
        if (all_word) token = "_user";
      }
      break;
    case CoarsenKind::url:
      for (auto& token : tokens) {
        if (token.starts_with("http://") || token.starts_with("https://") ||
            token.starts_with("www.")) {
          token = "_url";
        }
      }
      break;
    case CoarsenKind::num:
      for (auto& token : tokens) {
        std::string rebuilt;
        std::size_t i = 0;
        const auto digit = [&](std::size_t k) {
          return k < token.size() && std::isdigit(static_cast<unsigned char>(token[k]));
        };
        while (i < token.size()) {
          if (!digit(i)) {
            rebuilt.push_back(token[i]);
            ++i;
            continue;
          }
          while (digit(i)) ++i;
          if (i < token.size() && (token[i] == '.' || token[i] == ',') && digit(i + 1)) {
            ++i;
            while (digit(i)) ++i;
          }
          rebuilt += "_num";
        }
        token = std::move(rebuilt);
      }
      break;
  }
  return join_tokens(tokens);
}

std::string remove_entities(std::string_view text) {
  std::vector<std::string> out;
  bool sentence_start = true;
  for (auto& token : split_tokens(text)) {
    bool remove = false;
    if (token.size() >= 2 && (token[0] == '@' || token[0] == '#')) {
      remove = true;
    } else if (token.starts_with("http://") || token.starts_with("https://") ||
               token.starts_with("www.")) {
      remove = true;
    } else if (!sentence_start) {
      const auto cps = utf8::decode(token);
      if (!cps.empty() && utf8::is_upper(cps[0])) remove = true;
    }
    const char last = token.back();
    sentence_start = last == '.' || last == '!' || last == '?' ||
                     token.ends_with("…");
    if (!remove) out.push_back(std::move(token));
  }
  return join_tokens(out);
}

std::string lowercase(std::string_view text) { return utf8::lower(text); }

std::string remove_diacritics(std::string_view text) {
  return utf8::strip_diacritics(text);
}

std::string reduce_runs(std::string_view text, RunMode mode) {
  const auto cps = utf8::decode(text);
  std::u32string out;
  out.reserve(cps.size());
  std::size_t i = 0;
  while (i < cps.size()) {
    std::size_t j = i;
    while (j < cps.size() && cps[j] == cps[i]) ++j;
    const std::size_t run = j - i;
    const std::size_t keep = mode == RunMode::d1 ? 1 : std::min<std::size_t>(run, 2);
    out.append(keep, cps[i]);
    i = j;
  }
  return utf8::encode(out);
}

std::string remove_punctuation(std::string_view text, const LexiconSet& lex) {
  std::vector<std::string> out;
  for (auto& token : split_tokens(text)) {
    if (lex.is_known_emoticon(token)) {
      out.push_back(std::move(token));
      continue;
    }
    const auto cps = utf8::decode(token);
    std::u32string kept;
    for (char32_t cp : cps) {
      if (!utf8::is_punct(cp)) kept.push_back(cp);
    }
    if (!kept.empty()) out.push_back(utf8::encode(kept));
  }
  return join_tokens(out);
}

std::string attach_negation(std::string_view text, const LexiconSet& lex) {
  const std::vector<std::string> tokens = split_punct_runs(split_tokens(text), lex);
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < tokens.size()) {
    if (!is_marker(tokens[i])) {
      out.push_back(tokens[i]);
      ++i;
      continue;
    }
    // scan rightward past skip words for the token to negate
    std::size_t j = i + 1;
    while (j < tokens.size() && lex.is_skip_word(tokens[j])) ++j;
    const bool valid_target = j < tokens.size() && tokens[j][0] != '_' &&
                              !is_pure_punct(tokens[j]);
    if (!valid_target) {
      out.push_back(tokens[i]);  // marker kept verbatim
      ++i;
      continue;
    }
    for (std::size_t k = i + 1; k < j; ++k) out.push_back(tokens[k]);
    out.push_back("no_" + tokens[j]);
    i = j + 1;
  }
  return join_tokens(out);
}

std::string remove_stopwords(std::string_view text, const LexiconSet& lex) {
  std::vector<std::string> out;
  for (auto& token : split_tokens(text)) {
    if (token.starts_with("no_") || !lex.is_stopword(token)) {
      out.push_back(std::move(token));
    }
  }
  return join_tokens(out);
}

std::string lemmatize(std::string_view text, const LemmaMap& lemmas) {
  std::vector<std::string> out;
  for (auto& token : split_tokens(text)) {
    std::string prefix;
    std::string_view body = token;
    if (token.starts_with("no_")) {
      prefix = "no_";
      body = std::string_view(token).substr(3);
    } else if (token.starts_with("_")) {
      prefix = "_";
      body = std::string_view(token).substr(1);
    }
    const auto it = lemmas.find(std::string(body));
    if (it == lemmas.end()) {
      out.push_back(std::move(token));
    } else {
      out.push_back(prefix + it->second);
    }
  }
  return join_tokens(out);
}

std::string stem_text(std::string_view text) {
  std::vector<std::string> out;
  for (auto& token : split_tokens(text)) {
    if (token.starts_with("no_")) {
      out.push_back("no_" + spanish_stem(std::string_view(token).substr(3)));
    } else if (token.starts_with("_")) {
      out.push_back("_" + spanish_stem(std::string_view(token).substr(1)));
    } else {
      out.push_back(spanish_stem(token));
    }
  }
  return join_tokens(out);
}

std::string normalize(std::string_view text, const Configuration& cfg,
                      const LexiconSet& lex, const LemmaMap* lemmas) {
  std::string out = expand_abbreviations(text, lex);
  if (cfg.test(Flag::emo)) out = map_emoticons(out, lex);
  if (cfg.test(Flag::usr)) out = coarsen(out, CoarsenKind::usr);
  if (cfg.test(Flag::url)) out = coarsen(out, CoarsenKind::url);
  if (cfg.test(Flag::num)) out = coarsen(out, CoarsenKind::num);
  if (cfg.test(Flag::del_ent)) out = remove_entities(out);
  if (cfg.test(Flag::lc)) out = lowercase(out);
  if (cfg.test(Flag::del_diac)) out = remove_diacritics(out);
  if (cfg.test(Flag::del_d1)) {
    out = reduce_runs(out, RunMode::d1);
  } else if (cfg.test(Flag::del_d2)) {
    out = reduce_runs(out, RunMode::d2);
  }
  if (cfg.test(Flag::del_punc)) out = remove_punctuation(out, lex);
  if (cfg.test(Flag::neg)) out = attach_negation(out, lex);
  if (cfg.test(Flag::del_sw)) out = remove_stopwords(out, lex);
  if (cfg.test(Flag::lem)) {
    static const LemmaMap kEmpty;
    out = lemmatize(out, lemmas != nullptr ? *lemmas : kEmpty);
  }
  if (cfg.test(Flag::stem)) out = stem_text(out);
  return out;
}

}  // namespace textsweep
