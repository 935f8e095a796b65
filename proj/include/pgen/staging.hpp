#ifndef PGEN_STAGING_HPP
#define PGEN_STAGING_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pgen/corpus.hpp"
#include "pgen/importance.hpp"

namespace pgen {

// Binary masking decision per token: 1 = discard, 0 = keep. Valid patterns
// never discard two adjacent tokens.
struct MaskPattern {
  std::vector<int> phi;
  double objective_value = 0.0;
};

// Progressive stages X^0 (shortest) .. X^K (full sentence). alignments[k]
// records, for each token inserted between X^k and X^{k+1}, the gap of X^k
// it occupies; gap g sits between boundaried positions g and g+1, so gap 0
// follows [SOS] and gap len(X^k) precedes [EOS].
struct StageSequence {
  std::vector<std::vector<std::string>> stages;
  struct Insertion {
    std::size_t gap;
    std::string token;
  };
  std::vector<std::vector<Insertion>> alignments;  // size stages.size()-1
};

struct StagePair {
  std::vector<TokenId> source_ids;    // with [SOS]/[EOS]
  std::vector<TokenId> slot_targets;  // size source_ids.size()-1
  int stage_index = 0;
};

// Maximizes sum(phi[t]*benefits[t]) subject to no adjacent 1s. On equal
// accumulated score the recurrence keeps the current token (phi=0), so
// zero-benefit tokens are never discarded.
MaskPattern dp_mask(const std::vector<double>& benefits);

// Baseline masker: discard every odd index.
MaskPattern interleave_mask(std::size_t n);

// Repeatedly masks the current stage with benefits alpha_max - alpha_t
// (alpha_max recomputed over the surviving tokens) until fewer than
// min_remaining tokens are left or the DP discards nothing. alpha entries
// align with tokens and are carried through stages unchanged.
// With use_interleave the DP is replaced by interleave_mask.
StageSequence build_stage_sequence(const std::vector<std::string>& tokens,
                                   const std::vector<double>& alpha,
                                   int min_remaining,
                                   bool use_interleave = false);

// One pair per adjacent stage plus the terminal (X^K, all-[NOI]) pair.
// Throws "corrupt alignment" when applying the recorded insertions to a
// source fails to reproduce the next stage.
std::vector<StagePair> make_training_pairs(const StageSequence& seq,
                                           const Vocabulary& v);

// Applies slot targets to a boundaried source, dropping [NOI] picks.
std::vector<TokenId> apply_slot_targets(const std::vector<TokenId>& source_ids,
                                        const std::vector<TokenId>& targets);

// Stage-pair dataset file. Header: "pgen-pairs\t<version>\t<vocab_hash>".
// Record: stage_index \t source ids \t target ids (ids space-separated).
constexpr int kPairsFormatVersion = 1;

void save_pairs(const std::string& path, const std::vector<StagePair>& pairs,
                std::uint64_t vocab_hash);
// expected_vocab_hash 0 skips the check; a nonzero mismatch throws.
std::vector<StagePair> load_pairs(const std::string& path,
                                  std::uint64_t expected_vocab_hash = 0);
std::uint64_t pairs_file_vocab_hash(const std::string& path);

}  // namespace pgen

#endif  // PGEN_STAGING_HPP
