#pragma once

#include <string>
#include <string_view>

namespace dvrinv::detail {

// Strips surrounding whitespace and maps U+2212 MINUS SIGN to '-'.
inline std::string normalize_scalar_text(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x88 &&
        static_cast<unsigned char>(text[i + 2]) == 0x92) {
      out.push_back('-');
      i += 2;
      continue;
    }
    if (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r') continue;
    out.push_back(text[i]);
  }
  return out;
}

}  // namespace dvrinv::detail
