#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace noisekit {

// A token is UTF-8 text with no internal whitespace; sentences keep file
// order. Everything here is immutable after construction and safe to share
// across threads.
using Token = std::string;
using Sentence = std::vector<Token>;

struct Corpus {
  std::vector<Sentence> sentences;

  std::size_t line_count() const { return sentences.size(); }
};

// Source/target pair with aligned line counts. Only the source side is ever
// noised downstream.
struct ParallelCorpus {
  Corpus source;
  Corpus target;
};

struct CorpusStats {
  std::size_t sentences = 0;
  std::size_t words = 0;
};

// Loads a pre-tokenized corpus: UTF-8, NFC-normalized on read, one sentence
// per line, tokens separated by spaces. Empty lines are preserved as
// zero-token sentences so parallel line numbers never shift. Lines whose
// whitespace is not exactly single spaces are collapsed and reported through
// `warnings` (re-serialization will not be byte-identical for them).
// Throws std::runtime_error on I/O failure or invalid UTF-8 (with line number).
Corpus load_corpus(const std::string& path, std::vector<std::string>* warnings = nullptr);

// One sentence per line, single-space joins, LF endings.
void save_corpus(const Corpus& corpus, const std::string& path);

std::string serialize_sentence(const Sentence& sentence);
std::string serialize_corpus(const Corpus& corpus);

// Loads both sides and checks the line counts match.
ParallelCorpus load_parallel_corpus(const std::string& source_path,
                                    const std::string& target_path,
                                    std::vector<std::string>* warnings = nullptr);

CorpusStats corpus_stats(const Corpus& corpus);

// True iff every character is Unicode-alphabetic and the token is at least
// min_len scalar values long. Letter noise is only ever applied to such
// tokens; digits, punctuation, and mixed tokens pass through untouched.
bool is_noisable(const std::u32string& token, std::size_t min_len);
bool is_noisable(const Token& token, std::size_t min_len);

}  // namespace noisekit
