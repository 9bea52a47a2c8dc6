#pragma once

#include <string>
#include <string_view>

namespace textsweep {

// Snowball stemming algorithm for Spanish. Expects a single lowercase word;
// accented vowels are understood and acute accents are removed from the stem.
std::string spanish_stem(std::string_view word);

}  // namespace textsweep
