#pragma once

#include <string>
#include <string_view>

namespace textsweep::utf8 {

// Decodes UTF-8 into code points. Malformed bytes decode to U+FFFD, one
// replacement per bad byte, so round trips never lose positions.
std::u32string decode(std::string_view s);
std::string encode(const std::u32string& cps);
void append(std::string& out, char32_t cp);

// Case folding for ASCII plus the Latin-1 letter block (covers Spanish).
char32_t to_lower(char32_t cp);
bool is_upper(char32_t cp);

// The Spanish diacritic map: a-acute..u-acute, u-diaeresis and n-tilde to
// their base letters, both cases. Everything else passes through.
char32_t strip_diacritic(char32_t cp);

// Punctuation for the normalization pipeline. '_', '@' and '#' are excluded
// on purpose: tags use '_' and the mention/hashtag symbols are consumed by
// the coarsening and entity steps.
bool is_punct(char32_t cp);

std::string lower(std::string_view s);
std::string strip_diacritics(std::string_view s);

}  // namespace textsweep::utf8
