#include "textsweep/utf8.hpp"

namespace textsweep::utf8 {

std::u32string decode(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  std::size_t i = 0;
  const auto n = s.size();
  while (i < n) {
    const unsigned char b0 = static_cast<unsigned char>(s[i]);
    char32_t cp = 0;
    std::size_t len = 0;
    if (b0 < 0x80) {
      cp = b0;
      len = 1;
    } else if ((b0 & 0xE0) == 0xC0) {
      cp = b0 & 0x1F;
      len = 2;
    } else if ((b0 & 0xF0) == 0xE0) {
      cp = b0 & 0x0F;
      len = 3;
    } else if ((b0 & 0xF8) == 0xF0) {
      cp = b0 & 0x07;
      len = 4;
    } else {
      out.push_back(0xFFFD);
      ++i;
      continue;
    }
    if (i + len > n) {
      out.push_back(0xFFFD);
      ++i;
      continue;
    }
    bool ok = true;
    for (std::size_t j = 1; j < len; ++j) {
      const unsigned char bj = static_cast<unsigned char>(s[i + j]);
      if ((bj & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (bj & 0x3F);
    }
    if (!ok) {
      out.push_back(0xFFFD);
      ++i;
      continue;
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

void append(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string encode(const std::u32string& cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) append(out, cp);
  return out;
}

char32_t to_lower(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 32;
  // Latin-1 uppercase letters (except the multiplication sign 0xD7)
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 32;
  return cp;
}

bool is_upper(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return true;
  return cp >= 0xC0 && cp <= 0xDE && cp != 0xD7;
}

char32_t strip_diacritic(char32_t cp) {
  switch (cp) {
    case 0xE1: return U'a';  // á
    case 0xE9: return U'e';  // é
    case 0xED: return U'i';  // í
    case 0xF3: return U'o';  // ó
    case 0xFA: return U'u';  // ú
    case 0xFC: return U'u';  // ü
    case 0xF1: return U'n';  // ñ
    case 0xC1: return U'A';  // Á
    case 0xC9: return U'E';  // É
    case 0xCD: return U'I';  // Í
    case 0xD3: return U'O';  // Ó
    case 0xDA: return U'U';  // Ú
    case 0xDC: return U'U';  // Ü
    case 0xD1: return U'N';  // Ñ
    default: return cp;
  }
}

bool is_punct(char32_t cp) {
  if (cp < 0x80) {
    if (cp == U'_' || cp == U'@' || cp == U'#') return false;
    return (cp >= U'!' && cp <= U'/') || (cp >= U':' && cp <= U'@') ||
           (cp >= U'[' && cp <= U'`') || (cp >= U'{' && cp <= U'~');
  }
  switch (cp) {
    case 0xA1:    // ¡
    case 0xBF:    // ¿
    case 0xAB:    // «
    case 0xBB:    // »
    case 0xB7:    // ·
    case 0x2010:  // hyphen
    case 0x2013:  // en dash
    case 0x2014:  // em dash
    case 0x2018:  // ‘
    case 0x2019:  // ’
    case 0x201A:  // ‚
    case 0x201C:  // “
    case 0x201D:  // ”
    case 0x201E:  // „
    case 0x2026:  // …
    case 0x2039:  // ‹
    case 0x203A:  // ›
      return true;
    default:
      return false;
  }
}

std::string lower(std::string_view s) {
  auto cps = decode(s);
  for (auto& cp : cps) cp = to_lower(cp);
  return encode(cps);
}

std::string strip_diacritics(std::string_view s) {
  auto cps = decode(s);
  for (auto& cp : cps) cp = strip_diacritic(cp);
  return encode(cps);
}

}  // namespace textsweep::utf8
