#ifndef PGEN_CORPUS_HPP
#define PGEN_CORPUS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

namespace pgen {

using TokenId = std::int32_t;

// Reserved vocabulary slots. The layout is fixed so that serialized
// datasets and checkpoints are self-describing.
constexpr TokenId kPadId = 0;
constexpr TokenId kUnkId = 1;
constexpr TokenId kSosId = 2;
constexpr TokenId kEosId = 3;
constexpr TokenId kNoiId = 4;
constexpr int kNumSpecials = 5;

extern const char* const kSpecialTokens[kNumSpecials];

struct TokenizedSentence {
  std::vector<std::string> tokens;
  std::vector<TokenId> ids;  // filled by encode(); parallel to tokens
};

class Vocabulary {
 public:
  Vocabulary();

  // Token must be new; returns its id.
  TokenId add_token(const std::string& token);

  TokenId id_of(const std::string& token) const;  // kUnkId if absent
  const std::string& token_of(TokenId id) const;
  bool contains(const std::string& token) const;
  int size() const { return static_cast<int>(id_to_token_.size()); }

  // FNV-1a over "token\tid\n" lines, the same bytes save() writes.
  std::uint64_t hash() const;

  void save(const std::string& path) const;
  static Vocabulary load(const std::string& path);

 private:
  std::unordered_map<std::string, TokenId> token_to_id_;
  std::vector<std::string> id_to_token_;
};

struct CorpusStats {
  int doc_count = 0;
  std::unordered_map<std::string, int> doc_freq;  // sentences containing token

  void save(const std::string& path) const;
  static CorpusStats load(const std::string& path);
};

// Lowercases, splits on whitespace and breaks punctuation characters into
// standalone tokens. Total: whitespace-only input gives an empty sentence.
TokenizedSentence tokenize(const std::string& text);

// Ids 0..4 are the specials; corpus tokens with frequency >= min_freq follow,
// ordered by frequency descending then token ascending. Throws on an empty
// corpus or min_freq < 1.
Vocabulary build_vocab(const std::vector<TokenizedSentence>& corpus,
                       int min_freq = 1);

CorpusStats compute_stats(const std::vector<TokenizedSentence>& corpus);

// OOV tokens map to [UNK]. With add_boundaries the result is
// [SOS] ++ ids ++ [EOS].
std::vector<TokenId> encode(const Vocabulary& v, const TokenizedSentence& s,
                            bool add_boundaries);
std::vector<TokenId> encode_tokens(const Vocabulary& v,
                                   const std::vector<std::string>& tokens,
                                   bool add_boundaries);

// Inverse of encode for in-vocabulary ids; boundaries are not stripped.
std::vector<std::string> decode(const Vocabulary& v,
                                const std::vector<TokenId>& ids);

// One sentence per line; blank lines (after tokenization) are dropped.
std::vector<TokenizedSentence> read_corpus(const std::string& path);

std::vector<std::string> read_lines(const std::string& path);

std::uint64_t fnv1a64(const void* data, std::size_t len,
                      std::uint64_t seed = 14695981039346656037ULL);

}  // namespace pgen

#endif  // PGEN_CORPUS_HPP
