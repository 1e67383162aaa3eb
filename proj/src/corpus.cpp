#include "noisekit/corpus.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "noisekit/unicode.hpp"

namespace noisekit {

namespace {

bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

// Splits on ASCII whitespace. Returns false when the line was not strictly
// single-space separated (leading/trailing/doubled spaces, tabs, CR).
bool split_tokens(const std::string& line, Sentence& out) {
  out.clear();
  bool clean = true;
  std::size_t i = 0;
  const std::size_t n = line.size();
  while (i < n) {
    if (is_ascii_space(line[i])) {
      // Clean separators are exactly one ' ' between two tokens.
      if (line[i] != ' ' || i + 1 >= n || is_ascii_space(line[i + 1]) || i == 0) clean = false;
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < n && !is_ascii_space(line[i])) ++i;
    out.emplace_back(line, start, i - start);
  }
  if (n > 0 && out.empty()) clean = false;  // whitespace-only line
  return clean;
}

}  // namespace

Corpus load_corpus(const std::string& path, std::vector<std::string>* warnings) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open corpus file: " + path);
  }
  Corpus corpus;
  std::string line;
  std::size_t line_no = 0;
  Sentence tokens;
  while (std::getline(in, line)) {
    ++line_no;
    try {
      line = nfc_utf8(line);
      decode_utf8(line);  // reject malformed input up front
    } catch (const std::exception& e) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
    if (!split_tokens(line, tokens) && warnings != nullptr) {
      warnings->push_back(path + ":" + std::to_string(line_no) +
                          ": irregular whitespace collapsed; re-serialization will not be "
                          "byte-identical");
    }
    corpus.sentences.push_back(tokens);
  }
  if (in.bad()) {
    throw std::runtime_error("I/O error while reading: " + path);
  }
  return corpus;
}

std::string serialize_sentence(const Sentence& sentence) {
  std::string out;
  for (std::size_t i = 0; i < sentence.size(); ++i) {
    if (i > 0) out += ' ';
    out += sentence[i];
  }
  return out;
}

std::string serialize_corpus(const Corpus& corpus) {
  std::string out;
  for (const auto& sentence : corpus.sentences) {
    out += serialize_sentence(sentence);
    out += '\n';
  }
  return out;
}

void save_corpus(const Corpus& corpus, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open output file: " + path);
  }
  out << serialize_corpus(corpus);
  if (!out) {
    throw std::runtime_error("I/O error while writing: " + path);
  }
}

ParallelCorpus load_parallel_corpus(const std::string& source_path,
                                    const std::string& target_path,
                                    std::vector<std::string>* warnings) {
  ParallelCorpus pc;
  pc.source = load_corpus(source_path, warnings);
  pc.target = load_corpus(target_path, warnings);
  if (pc.source.line_count() != pc.target.line_count()) {
    std::ostringstream msg;
    msg << "parallel corpus line counts differ: " << source_path << " has "
        << pc.source.line_count() << ", " << target_path << " has " << pc.target.line_count();
    throw std::runtime_error(msg.str());
  }
  return pc;
}

CorpusStats corpus_stats(const Corpus& corpus) {
  CorpusStats stats;
  stats.sentences = corpus.line_count();
  for (const auto& sentence : corpus.sentences) {
    stats.words += sentence.size();
  }
  return stats;
}

bool is_noisable(const std::u32string& token, std::size_t min_len) {
  if (token.size() < min_len) return false;
  for (char32_t c : token) {
    if (!is_alphabetic(c)) return false;
  }
  return !token.empty();
}

bool is_noisable(const Token& token, std::size_t min_len) {
  return is_noisable(decode_utf8(token), min_len);
}

}  // namespace noisekit
