#include "textsweep/stemmer.hpp"

#include <algorithm>
#include <array>
#include <initializer_list>

#include "textsweep/utf8.hpp"

namespace textsweep {
namespace {

constexpr char32_t kAAcute = 0xE1, kEAcute = 0xE9, kIAcute = 0xED,
                   kOAcute = 0xF3, kUAcute = 0xFA, kUDiaeresis = 0xFC;

bool is_vowel(char32_t c) {
  switch (c) {
    case U'a': case U'e': case U'i': case U'o': case U'u':
    case kAAcute: case kEAcute: case kIAcute: case kOAcute: case kUAcute:
    case kUDiaeresis:
      return true;
    default:
      return false;
  }
}

// Region after the first non-vowel following a vowel, scanning from `start`.
std::size_t region_after(const std::u32string& w, std::size_t start) {
  const std::size_t n = w.size();
  std::size_t i = start;
  while (i < n && !is_vowel(w[i])) ++i;
  while (i < n && is_vowel(w[i])) ++i;
  return i < n ? i + 1 : n;
}

struct Regions {
  std::size_t r1, r2, rv;
};

Regions mark_regions(const std::u32string& w) {
  const std::size_t n = w.size();
  Regions r;
  r.r1 = region_after(w, 0);
  r.r2 = region_after(w, r.r1);
  if (n < 2) {
    r.rv = n;
  } else if (!is_vowel(w[1])) {
    // second letter is a consonant: after the next following vowel
    std::size_t i = 2;
    while (i < n && !is_vowel(w[i])) ++i;
    r.rv = i < n ? i + 1 : n;
  } else if (is_vowel(w[0]) && is_vowel(w[1])) {
    // first two letters are vowels: after the next following consonant
    std::size_t i = 2;
    while (i < n && is_vowel(w[i])) ++i;
    r.rv = i < n ? i + 1 : n;
  } else {
    // consonant followed by vowel: after the third letter
    r.rv = n >= 3 ? 3 : n;
  }
  return r;
}

bool ends_with(const std::u32string& w, const std::u32string& s) {
  return w.size() >= s.size() && w.compare(w.size() - s.size(), s.size(), s) == 0;
}

std::u32string u32(const char* ascii) {
  std::u32string out;
  for (const char* p = ascii; *p; ++p) out.push_back(static_cast<char32_t>(*p));
  return out;
}

struct Suffix {
  std::u32string text;
  int group;
};

// Longest-match selection across a suffix list; ties cannot happen because
// all entries are distinct endings.
const Suffix* longest_match(const std::u32string& w, const std::vector<Suffix>& list) {
  const Suffix* best = nullptr;
  for (const auto& s : list) {
    if (ends_with(w, s.text) && (!best || s.text.size() > best->text.size())) best = &s;
  }
  return best;
}

std::vector<Suffix> make_list(std::initializer_list<std::pair<const char32_t*, int>> items) {
  std::vector<Suffix> v;
  for (const auto& [txt, g] : items) v.push_back({std::u32string(txt), g});
  return v;
}

const std::vector<Suffix>& step0_pronouns() {
  static const auto list = make_list({
      {U"selas", 0}, {U"selos", 0}, {U"sela", 0}, {U"selo", 0}, {U"las", 0},
      {U"les", 0}, {U"los", 0}, {U"nos", 0}, {U"me", 0}, {U"se", 0},
      {U"la", 0}, {U"le", 0}, {U"lo", 0}});
  return list;
}

// group 1: accented, replaced by the unaccented form; 2: plain, pronoun
// dropped; 3: yendo, requires a preceding u.
const std::vector<Suffix>& step0_preceders() {
  static const auto list = make_list({
      {U"iéndo", 1}, {U"ándo", 1}, {U"ár", 1}, {U"ér", 1},
      {U"ír", 1}, {U"ando", 2}, {U"iendo", 2}, {U"ar", 2}, {U"er", 2},
      {U"ir", 2}, {U"yendo", 3}});
  return list;
}

const std::vector<Suffix>& step1_suffixes() {
  static const auto list = make_list({
      // delete if in R2
      {U"anza", 1}, {U"anzas", 1}, {U"ico", 1}, {U"ica", 1}, {U"icos", 1},
      {U"icas", 1}, {U"ismo", 1}, {U"ismos", 1}, {U"able", 1}, {U"ables", 1},
      {U"ible", 1}, {U"ibles", 1}, {U"ista", 1}, {U"istas", 1}, {U"oso", 1},
      {U"osa", 1}, {U"osos", 1}, {U"osas", 1}, {U"amiento", 1},
      {U"amientos", 1}, {U"imiento", 1}, {U"imientos", 1},
      // delete if in R2, then an "ic" prefix of the suffix position too
      {U"adora", 2}, {U"ador", 2}, {U"ación", 2}, {U"adoras", 2},
      {U"adores", 2}, {U"aciones", 2}, {U"ante", 2}, {U"antes", 2},
      {U"ancia", 2}, {U"ancias", 2},
      // replacements
      {U"logía", 3}, {U"logías", 3},
      {U"ución", 4}, {U"uciones", 4},
      {U"encia", 5}, {U"encias", 5},
      // adverb endings
      {U"amente", 6}, {U"mente", 7},
      {U"idad", 8}, {U"idades", 8},
      {U"iva", 9}, {U"ivo", 9}, {U"ivas", 9}, {U"ivos", 9}});
  return list;
}

const std::vector<Suffix>& step2a_suffixes() {
  static const auto list = make_list({
      {U"ya", 0}, {U"ye", 0}, {U"yan", 0}, {U"yen", 0}, {U"yeron", 0},
      {U"yendo", 0}, {U"yo", 0}, {U"yó", 0}, {U"yas", 0}, {U"yes", 0},
      {U"yais", 0}, {U"yamos", 0}});
  return list;
}

const std::vector<Suffix>& step2b_suffixes() {
  // group 1 endings may be followed by dropping a preceding u after g.
  static const auto list = make_list({
      {U"en", 1}, {U"es", 1}, {U"éis", 1}, {U"emos", 1},
      {U"arían", 0}, {U"arías", 0}, {U"arán", 0},
      {U"arás", 0}, {U"aríais", 0}, {U"aría", 0},
      {U"aréis", 0}, {U"aríamos", 0}, {U"aremos", 0},
      {U"ará", 0}, {U"aré", 0}, {U"erían", 0},
      {U"erías", 0}, {U"erán", 0}, {U"erás", 0},
      {U"eríais", 0}, {U"ería", 0}, {U"eréis", 0},
      {U"eríamos", 0}, {U"eremos", 0}, {U"erá", 0}, {U"eré", 0},
      {U"irían", 0}, {U"irías", 0}, {U"irán", 0},
      {U"irás", 0}, {U"iríais", 0}, {U"iría", 0},
      {U"iréis", 0}, {U"iríamos", 0}, {U"iremos", 0},
      {U"irá", 0}, {U"iré", 0},
      {U"aba", 0}, {U"ada", 0}, {U"ida", 0}, {U"ía", 0}, {U"ara", 0},
      {U"iera", 0}, {U"ad", 0}, {U"ed", 0}, {U"id", 0}, {U"ase", 0},
      {U"iese", 0}, {U"aste", 0}, {U"iste", 0}, {U"an", 0}, {U"aban", 0},
      {U"ían", 0}, {U"aran", 0}, {U"ieran", 0}, {U"asen", 0},
      {U"iesen", 0}, {U"aron", 0}, {U"ieron", 0}, {U"ado", 0}, {U"ido", 0},
      {U"ando", 0}, {U"iendo", 0}, {U"ió", 0}, {U"ar", 0}, {U"er", 0},
      {U"ir", 0}, {U"as", 0}, {U"abas", 0}, {U"adas", 0}, {U"idas", 0},
      {U"ías", 0}, {U"aras", 0}, {U"ieras", 0}, {U"ases", 0},
      {U"ieses", 0}, {U"ís", 0}, {U"áis", 0}, {U"abais", 0},
      {U"íais", 0}, {U"arais", 0}, {U"ierais", 0}, {U"aseis", 0},
      {U"ieseis", 0}, {U"asteis", 0}, {U"isteis", 0}, {U"ados", 0},
      {U"idos", 0}, {U"amos", 0}, {U"ábamos", 0}, {U"íamos", 0},
      {U"imos", 0}, {U"áramos", 0}, {U"iéramos", 0},
      {U"iésemos", 0}, {U"ásemos", 0}});
  return list;
}

const std::vector<Suffix>& step3_suffixes() {
  static const auto list = make_list({
      {U"os", 0}, {U"a", 0}, {U"o", 0}, {U"á", 0}, {U"í", 0},
      {U"ó", 0}, {U"e", 1}, {U"é", 1}});
  return list;
}

}  // namespace

std::string spanish_stem(std::string_view word) {
  std::u32string w = utf8::decode(word);
  const Regions reg = mark_regions(w);
  const auto in_r1 = [&](std::size_t start) { return start >= reg.r1; };
  const auto in_r2 = [&](std::size_t start) { return start >= reg.r2; };
  const auto in_rv = [&](std::size_t start) { return start >= reg.rv; };
  const auto drop = [&](std::size_t count) { w.resize(w.size() - count); };

  // step 0: attached pronoun
  if (const Suffix* p = longest_match(w, step0_pronouns())) {
    const std::u32string base = w.substr(0, w.size() - p->text.size());
    if (const Suffix* pre = longest_match(base, step0_preceders())) {
      const std::size_t start = base.size() - pre->text.size();
      if (in_rv(start)) {
        if (pre->group == 1) {
          static const std::array<std::pair<const char32_t*, const char32_t*>, 5>
              repl{{{U"iéndo", U"iendo"},
                    {U"ándo", U"ando"},
                    {U"ár", U"ar"},
                    {U"ér", U"er"},
                    {U"ír", U"ir"}}};
          for (const auto& [from, to] : repl) {
            if (pre->text == from) {
              w = base.substr(0, start) + to;
              break;
            }
          }
        } else if (pre->group == 3) {
          if (start >= 1 && base[start - 1] == U'u') w = base;
        } else {
          w = base;
        }
      }
    }
  }

  // step 1: standard suffix removal; a failed region test ends the step
  bool removed = false;
  if (const Suffix* s = longest_match(w, step1_suffixes())) {
    const std::size_t start = w.size() - s->text.size();
    const auto try_extra = [&](std::initializer_list<const char32_t*> extras) {
      for (const char32_t* e : extras) {
        const std::u32string ext(e);
        if (ends_with(w, ext) && in_r2(w.size() - ext.size())) {
          drop(ext.size());
          return;
        }
      }
    };
    switch (s->group) {
      case 1:
        if (in_r2(start)) { drop(s->text.size()); removed = true; }
        break;
      case 2:
        if (in_r2(start)) {
          drop(s->text.size());
          try_extra({U"ic"});
          removed = true;
        }
        break;
      case 3:
        if (in_r2(start)) { w.resize(start); w += u32("log"); removed = true; }
        break;
      case 4:
        if (in_r2(start)) { w.resize(start); w += u32("u"); removed = true; }
        break;
      case 5:
        if (in_r2(start)) { w.resize(start); w += u32("ente"); removed = true; }
        break;
      case 6:
        if (in_r1(start)) {
          drop(s->text.size());
          if (ends_with(w, u32("iv")) && in_r2(w.size() - 2)) {
            drop(2);
            if (ends_with(w, u32("at")) && in_r2(w.size() - 2)) drop(2);
          } else {
            try_extra({U"os", U"ic", U"ad"});
          }
          removed = true;
        }
        break;
      case 7:
        if (in_r2(start)) {
          drop(s->text.size());
          try_extra({U"ante", U"able", U"ible"});
          removed = true;
        }
        break;
      case 8:
        if (in_r2(start)) {
          drop(s->text.size());
          try_extra({U"abil", U"ic", U"iv"});
          removed = true;
        }
        break;
      case 9:
        if (in_r2(start)) {
          drop(s->text.size());
          try_extra({U"at"});
          removed = true;
        }
        break;
    }
  }

  // step 2a: verb suffixes beginning y, only when step 1 removed nothing;
  // the suffix must be in RV and preceded by u (the u may be outside RV)
  bool removed2a = false;
  if (!removed) {
    if (const Suffix* s = longest_match(w, step2a_suffixes())) {
      const std::size_t start = w.size() - s->text.size();
      if (in_rv(start) && start >= 1 && w[start - 1] == U'u') {
        drop(s->text.size());
        removed2a = true;
      }
    }
  }

  // step 2b: other verb suffixes, only when nothing was removed so far
  if (!removed && !removed2a) {
    if (const Suffix* s = longest_match(w, step2b_suffixes())) {
      const std::size_t start = w.size() - s->text.size();
      if (in_rv(start)) {
        drop(s->text.size());
        if (s->group == 1 && ends_with(w, u32("gu"))) drop(1);  // drop the u
      }
    }
  }

  // step 3: residual suffix
  if (const Suffix* s = longest_match(w, step3_suffixes())) {
    const std::size_t start = w.size() - s->text.size();
    if (in_rv(start)) {
      if (s->group == 1) {
        drop(s->text.size());
        if (ends_with(w, u32("gu")) && in_rv(w.size() - 1)) drop(1);
      } else {
        drop(s->text.size());
      }
    }
  }

  // remove acute accents
  for (auto& c : w) {
    switch (c) {
      case kAAcute: c = U'a'; break;
      case kEAcute: c = U'e'; break;
      case kIAcute: c = U'i'; break;
      case kOAcute: c = U'o'; break;
      case kUAcute: c = U'u'; break;
      default: break;
    }
  }
  return utf8::encode(w);
}

}  // namespace textsweep
