#include "pgen/importance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pgen {

namespace {

void rescale_by_max(std::vector<double>& raw) {
  double mx = 0.0;
  for (double r : raw) mx = std::max(mx, r);
  if (mx <= 0.0) {
    std::fill(raw.begin(), raw.end(), 0.0);
    return;
  }
  for (double& r : raw) r /= mx;
}

}  // namespace

std::vector<double> tfidf_scores(const TokenizedSentence& s,
                                 const CorpusStats& stats) {
  const std::size_t n = s.tokens.size();
  std::vector<double> raw(n, 0.0);
  if (n == 0) return raw;
  std::unordered_map<std::string, int> tf;
  for (const auto& t : s.tokens) ++tf[t];
  for (std::size_t i = 0; i < n; ++i) {
    auto it = stats.doc_freq.find(s.tokens[i]);
    int df = it == stats.doc_freq.end() ? stats.doc_count : it->second;
    double idf =
        df > 0 ? std::log(static_cast<double>(stats.doc_count) / df) : 0.0;
    raw[i] = tf[s.tokens[i]] * std::max(idf, 0.0);
  }
  rescale_by_max(raw);
  return raw;
}

std::vector<double> pos_scores(const TokenizedSentence& s,
                               const PosLexicon& lexicon) {
  std::vector<double> out(s.tokens.size(), 0.0);
  for (std::size_t i = 0; i < s.tokens.size(); ++i) {
    auto it = lexicon.find(s.tokens[i]);
    if (it == lexicon.end()) continue;
    switch (it->second) {
      case PosCategory::kNoun:
      case PosCategory::kVerb:
        out[i] = 1.0;
        break;
      case PosCategory::kAdj:
      case PosCategory::kAdv:
        out[i] = 0.5;
        break;
      case PosCategory::kOther:
        break;
    }
  }
  return out;
}

std::vector<double> yake_scores(const TokenizedSentence& s) {
  const std::size_t n = s.tokens.size();
  std::vector<double> raw(n, 0.0);
  if (n == 0) return raw;
  std::unordered_map<std::string, int> count;
  std::unordered_map<std::string, std::size_t> first_index;
  for (std::size_t i = 0; i < n; ++i) {
    ++count[s.tokens[i]];
    first_index.emplace(s.tokens[i], i);
  }
  for (std::size_t i = 0; i < n; ++i) {
    double norm_tf = static_cast<double>(count[s.tokens[i]]) / n;
    double bonus = 1.0 - static_cast<double>(first_index[s.tokens[i]]) / n;
    raw[i] = norm_tf * (1.0 + bonus);
  }
  rescale_by_max(raw);
  return raw;
}

std::vector<double> yake_scores_external(const TokenizedSentence& s,
                                         const std::vector<double>& external) {
  if (external.size() != s.tokens.size())
    throw std::runtime_error("score/sentence length mismatch");
  std::vector<double> out(external);
  for (double& v : out) v = std::clamp(v, 0.0, 1.0);
  return out;
}

ImportanceVector combine_importance(const TokenizedSentence& s,
                                    const std::vector<double>& tfidf,
                                    const std::vector<double>& pos,
                                    const std::vector<double>& yake,
                                    const StopwordSet& stopwords,
                                    double decay) {
  const std::size_t n = s.tokens.size();
  if (tfidf.size() != n || pos.size() != n || yake.size() != n)
    throw std::invalid_argument("component length mismatch");
  if (!(decay > 0.0 && decay < 1.0))
    throw std::invalid_argument("decay must lie in (0,1)");

  ImportanceVector iv;
  iv.tfidf = tfidf;
  iv.pos = pos;
  iv.yake = yake;
  iv.alpha.resize(n);
  iv.stopword_mask.resize(n);
  std::unordered_map<std::string, int> seen;
  for (std::size_t i = 0; i < n; ++i) {
    bool stop = stopwords.count(s.tokens[i]) != 0;
    iv.stopword_mask[i] = stop;
    double a = stop ? kStopwordAlpha : tfidf[i] + pos[i] + yake[i];
    int occurrence = seen[s.tokens[i]]++;
    if (occurrence > 0) a *= std::pow(decay, occurrence);
    iv.alpha[i] = a;
  }
  return iv;
}

ImportanceVector score_sentence(const TokenizedSentence& s,
                                const CorpusStats& stats,
                                const PosLexicon& lexicon,
                                const StopwordSet& stopwords, double decay,
                                const std::vector<double>* external_yake) {
  std::vector<double> yake = external_yake
                                 ? yake_scores_external(s, *external_yake)
                                 : yake_scores(s);
  return combine_importance(s, tfidf_scores(s, stats), pos_scores(s, lexicon),
                            yake, stopwords, decay);
}

StopwordSet load_stopwords(const std::string& path) {
  StopwordSet set;
  for (const auto& line : read_lines(path))
    if (!line.empty()) set.insert(line);
  return set;
}

PosLexicon load_pos_lexicon(const std::string& path) {
  PosLexicon lex;
  int line_no = 0;
  for (const auto& line : read_lines(path)) {
    ++line_no;
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw std::runtime_error("malformed lexicon line " +
                               std::to_string(line_no) + " in " + path);
    std::string tok = line.substr(0, tab);
    std::string cat = line.substr(tab + 1);
    PosCategory c;
    if (cat == "noun")
      c = PosCategory::kNoun;
    else if (cat == "verb")
      c = PosCategory::kVerb;
    else if (cat == "adj")
      c = PosCategory::kAdj;
    else if (cat == "adv")
      c = PosCategory::kAdv;
    else if (cat == "other")
      c = PosCategory::kOther;
    else
      throw std::runtime_error("unknown POS category '" + cat + "' in " +
                               path);
    lex[tok] = c;
  }
  return lex;
}

}  // namespace pgen
