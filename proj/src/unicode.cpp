#include "noisekit/unicode.hpp"

#include <stdexcept>

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/utf8.h>

namespace noisekit {

std::u32string decode_utf8(std::string_view bytes) {
  std::u32string out;
  out.reserve(bytes.size());
  const auto* s = reinterpret_cast<const std::uint8_t*>(bytes.data());
  const auto length = static_cast<std::int32_t>(bytes.size());
  std::int32_t i = 0;
  while (i < length) {
    const std::int32_t start = i;
    UChar32 c;
    U8_NEXT(s, i, length, c);
    if (c < 0) {
      throw std::runtime_error("invalid UTF-8 at byte offset " + std::to_string(start));
    }
    out.push_back(static_cast<char32_t>(c));
  }
  return out;
}

std::string encode_utf8(std::u32string_view scalars) {
  std::string out;
  out.reserve(scalars.size());
  for (char32_t c : scalars) {
    std::uint8_t buf[U8_MAX_LENGTH];
    std::int32_t i = 0;
    UBool err = false;
    U8_APPEND(buf, i, U8_MAX_LENGTH, static_cast<UChar32>(c), err);
    if (err) {
      throw std::runtime_error("invalid Unicode scalar value " +
                               std::to_string(static_cast<std::uint32_t>(c)));
    }
    out.append(reinterpret_cast<const char*>(buf), static_cast<std::size_t>(i));
  }
  return out;
}

std::size_t scalar_length(std::string_view bytes) {
  return decode_utf8(bytes).size();
}

std::string nfc_utf8(const std::string& bytes) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) {
    throw std::runtime_error("ICU NFC instance unavailable");
  }
  if (nfc->isNormalizedUTF8(bytes, status) && U_SUCCESS(status)) {
    return bytes;
  }
  status = U_ZERO_ERROR;
  std::string out;
  icu::StringByteSink<std::string> sink(&out);
  nfc->normalizeUTF8(0, bytes, sink, nullptr, status);
  if (U_FAILURE(status)) {
    throw std::runtime_error("NFC normalization failed");
  }
  return out;
}

bool is_alphabetic(char32_t c) { return u_isalpha(static_cast<UChar32>(c)); }

bool is_uppercase(char32_t c) { return u_isupper(static_cast<UChar32>(c)); }

char32_t to_lower(char32_t c) {
  return static_cast<char32_t>(u_tolower(static_cast<UChar32>(c)));
}

char32_t to_upper(char32_t c) {
  return static_cast<char32_t>(u_toupper(static_cast<UChar32>(c)));
}

std::string lowercase_utf8(const std::string& token) {
  std::u32string scalars = decode_utf8(token);
  for (auto& c : scalars) c = to_lower(c);
  return encode_utf8(scalars);
}

}  // namespace noisekit
