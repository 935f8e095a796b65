#ifndef PGEN_IMPORTANCE_HPP
#define PGEN_IMPORTANCE_HPP

#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "pgen/corpus.hpp"

namespace pgen {

enum class PosCategory { kNoun, kVerb, kAdj, kAdv, kOther };

using PosLexicon = std::unordered_map<std::string, PosCategory>;
using StopwordSet = std::unordered_set<std::string>;

// Per-token importance. alpha is the final score after the stopword
// override and repeat decay; components holds the raw (tfidf, pos, yake)
// triple before either adjustment.
struct ImportanceVector {
  std::vector<double> alpha;
  std::vector<double> tfidf;
  std::vector<double> pos;
  std::vector<double> yake;
  std::vector<bool> stopword_mask;
};

// Stop words collapse to a small constant instead of 0 so that DP ties on
// all-stopword spans stay deterministic.
constexpr double kStopwordAlpha = 0.01;
constexpr double kDefaultRepeatDecay = 0.5;

// count(t in s) * log(doc_count / doc_freq[t]), rescaled to [0,1] by the
// sentence max. Tokens missing from stats score 0 (doc_freq treated as
// doc_count).
std::vector<double> tfidf_scores(const TokenizedSentence& s,
                                 const CorpusStats& stats);

// noun/verb -> 1.0, adj/adv -> 0.5, anything else -> 0.0.
std::vector<double> pos_scores(const TokenizedSentence& s,
                               const PosLexicon& lexicon);

// Single-document statistic: count(t)/len * (1 + (1 - first_index(t)/len)),
// rescaled to [0,1] by the sentence max.
std::vector<double> yake_scores(const TokenizedSentence& s);

// External per-token scores used verbatim, clamped to [0,1]. Throws
// "score/sentence length mismatch" when the counts disagree.
std::vector<double> yake_scores_external(const TokenizedSentence& s,
                                         const std::vector<double>& external);

// alpha[t] = tfidf + pos + yake, then stopwords are floored to
// kStopwordAlpha, then the j-th occurrence of a surface token is scaled by
// decay^(j-1).
ImportanceVector combine_importance(const TokenizedSentence& s,
                                    const std::vector<double>& tfidf,
                                    const std::vector<double>& pos,
                                    const std::vector<double>& yake,
                                    const StopwordSet& stopwords,
                                    double decay = kDefaultRepeatDecay);

// Convenience wrapper running the three component scorers and the combiner.
ImportanceVector score_sentence(const TokenizedSentence& s,
                                const CorpusStats& stats,
                                const PosLexicon& lexicon,
                                const StopwordSet& stopwords,
                                double decay = kDefaultRepeatDecay,
                                const std::vector<double>* external_yake =
                                    nullptr);

// File loaders. Stopwords: one token per line. Lexicon: "token\tcategory"
// with category in {noun, verb, adj, adv, other}.
StopwordSet load_stopwords(const std::string& path);
PosLexicon load_pos_lexicon(const std::string& path);

}  // namespace pgen

#endif  // PGEN_IMPORTANCE_HPP
