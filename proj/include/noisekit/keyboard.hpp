#pragma once

#include <string>
#include <unordered_map>
#include <vector>

namespace noisekit {

// Character adjacency map for one physical keyboard. Neighbor lists keep
// file order so sampling is deterministic across runs.
struct KeyboardLayout {
  std::string name;
  std::unordered_map<char32_t, std::vector<char32_t>> adjacency;

  // nullptr when the character has no entry.
  const std::vector<char32_t>* find(char32_t c) const {
    auto it = adjacency.find(c);
    return it == adjacency.end() ? nullptr : &it->second;
  }
};

// Layout file: UTF-8 TSV, one line per character, `<char>\t<n1>\t<n2>...`,
// `#` starts a comment line. Rejects empty neighbor lists, self-adjacency,
// multi-character fields, and duplicate keys.
KeyboardLayout load_keyboard_layout(const std::string& path);

}  // namespace noisekit
