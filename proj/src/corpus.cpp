#include "pgen/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace pgen {

const char* const kSpecialTokens[kNumSpecials] = {"[PAD]", "[UNK]", "[SOS]",
                                                  "[EOS]", "[NOI]"};

Vocabulary::Vocabulary() {
  for (int i = 0; i < kNumSpecials; ++i) add_token(kSpecialTokens[i]);
}

TokenId Vocabulary::add_token(const std::string& token) {
  auto [it, inserted] =
      token_to_id_.emplace(token, static_cast<TokenId>(id_to_token_.size()));
  if (!inserted)
    throw std::runtime_error("duplicate token in vocabulary: " + token);
  id_to_token_.push_back(token);
  return it->second;
}

TokenId Vocabulary::id_of(const std::string& token) const {
  auto it = token_to_id_.find(token);
  return it == token_to_id_.end() ? kUnkId : it->second;
}

const std::string& Vocabulary::token_of(TokenId id) const {
  if (id < 0 || id >= size())
    throw std::out_of_range("token id out of range: " + std::to_string(id));
  return id_to_token_[static_cast<std::size_t>(id)];
}

bool Vocabulary::contains(const std::string& token) const {
  return token_to_id_.count(token) != 0;
}

std::uint64_t fnv1a64(const void* data, std::size_t len, std::uint64_t seed) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ULL;
  }
  return h;
}

std::uint64_t Vocabulary::hash() const {
  std::uint64_t h = 14695981039346656037ULL;
  for (int i = 0; i < size(); ++i) {
    std::string line = id_to_token_[static_cast<std::size_t>(i)] + "\t" +
                       std::to_string(i) + "\n";
    h = fnv1a64(line.data(), line.size(), h);
  }
  return h;
}

void Vocabulary::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write vocabulary file: " + path);
  for (int i = 0; i < size(); ++i)
    out << id_to_token_[static_cast<std::size_t>(i)] << '\t' << i << '\n';
}

Vocabulary Vocabulary::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read vocabulary file: " + path);
  Vocabulary v;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw std::runtime_error("malformed vocabulary line " +
                               std::to_string(line_no) + " in " + path);
    std::string token = line.substr(0, tab);
    int id = std::stoi(line.substr(tab + 1));
    if (id < kNumSpecials) {
      if (token != kSpecialTokens[id])
        throw std::runtime_error("vocabulary special mismatch at id " +
                                 std::to_string(id));
      continue;  // constructor already installed the specials
    }
    if (id != v.size())
      throw std::runtime_error("non-contiguous id in vocabulary: " + line);
    v.add_token(token);
  }
  return v;
}

void CorpusStats::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write stats file: " + path);
  out << "doc_count\t" << doc_count << '\n';
  std::map<std::string, int> sorted(doc_freq.begin(), doc_freq.end());
  for (const auto& [tok, df] : sorted) out << tok << '\t' << df << '\n';
}

CorpusStats CorpusStats::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read stats file: " + path);
  CorpusStats st;
  std::string line;
  if (!std::getline(in, line) || line.rfind("doc_count\t", 0) != 0)
    throw std::runtime_error("malformed stats header in " + path);
  st.doc_count = std::stoi(line.substr(line.find('\t') + 1));
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw std::runtime_error("malformed stats line in " + path);
    st.doc_freq[line.substr(0, tab)] = std::stoi(line.substr(tab + 1));
  }
  return st;
}

TokenizedSentence tokenize(const std::string& text) {
  TokenizedSentence s;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      s.tokens.push_back(cur);
      cur.clear();
    }
  };
  for (unsigned char c : text) {
    if (std::isspace(c)) {
      flush();
    } else if (std::ispunct(c)) {
      flush();
      s.tokens.emplace_back(1, static_cast<char>(c));
    } else {
      cur.push_back(static_cast<char>(std::tolower(c)));
    }
  }
  flush();
  return s;
}

Vocabulary build_vocab(const std::vector<TokenizedSentence>& corpus,
                       int min_freq) {
  if (min_freq < 1) throw std::invalid_argument("min_freq must be >= 1");
  if (corpus.empty()) throw std::runtime_error("empty corpus");
  std::unordered_map<std::string, long> freq;
  for (const auto& s : corpus)
    for (const auto& t : s.tokens) ++freq[t];
  std::vector<std::pair<std::string, long>> items(freq.begin(), freq.end());
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  Vocabulary v;
  for (const auto& [tok, f] : items)
    if (f >= min_freq && !v.contains(tok)) v.add_token(tok);
  return v;
}

CorpusStats compute_stats(const std::vector<TokenizedSentence>& corpus) {
  CorpusStats st;
  st.doc_count = static_cast<int>(corpus.size());
  for (const auto& s : corpus) {
    std::vector<std::string> uniq(s.tokens);
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (const auto& t : uniq) ++st.doc_freq[t];
  }
  return st;
}

std::vector<TokenId> encode_tokens(const Vocabulary& v,
                                   const std::vector<std::string>& tokens,
                                   bool add_boundaries) {
  std::vector<TokenId> ids;
  ids.reserve(tokens.size() + (add_boundaries ? 2 : 0));
  if (add_boundaries) ids.push_back(kSosId);
  for (const auto& t : tokens) ids.push_back(v.id_of(t));
  if (add_boundaries) ids.push_back(kEosId);
  return ids;
}

std::vector<TokenId> encode(const Vocabulary& v, const TokenizedSentence& s,
                            bool add_boundaries) {
  return encode_tokens(v, s.tokens, add_boundaries);
}

std::vector<std::string> decode(const Vocabulary& v,
                                const std::vector<TokenId>& ids) {
  std::vector<std::string> tokens;
  tokens.reserve(ids.size());
  for (TokenId id : ids) tokens.push_back(v.token_of(id));
  return tokens;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

std::vector<TokenizedSentence> read_corpus(const std::string& path) {
  std::vector<TokenizedSentence> corpus;
  for (const auto& line : read_lines(path)) {
    TokenizedSentence s = tokenize(line);
    if (!s.tokens.empty()) corpus.push_back(std::move(s));
  }
  return corpus;
}

}  // namespace pgen
