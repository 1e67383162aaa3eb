#pragma once

#include <string>
#include <string_view>

namespace noisekit {

// Strict UTF-8 decode to Unicode scalar values. Throws std::runtime_error
// naming the byte offset of the first malformed sequence.
std::u32string decode_utf8(std::string_view bytes);

std::string encode_utf8(std::u32string_view scalars);

// Token/character lengths are measured in scalar values, not bytes.
std::size_t scalar_length(std::string_view bytes);

// NFC normalization of valid UTF-8 (no-op when already normalized).
std::string nfc_utf8(const std::string& bytes);

bool is_alphabetic(char32_t c);
bool is_uppercase(char32_t c);

// Simple (1:1) case mappings.
char32_t to_lower(char32_t c);
char32_t to_upper(char32_t c);

std::string lowercase_utf8(const std::string& token);

}  // namespace noisekit
