#include "pgen/staging.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pgen {

MaskPattern dp_mask(const std::vector<double>& benefits) {
  const std::size_t n = benefits.size();
  MaskPattern out;
  out.phi.assign(n, 0);
  if (n == 0) return out;
  for (double b : benefits)
    if (b < 0.0) throw std::invalid_argument("benefits must be nonnegative");

  // best[t]: optimum over the prefix ending at t. Masking t is chosen only
  // when it strictly beats keeping it, so ties keep the token.
  std::vector<double> best(n, 0.0);
  std::vector<char> masked(n, 0);
  for (std::size_t t = 0; t < n; ++t) {
    double keep = t >= 1 ? best[t - 1] : 0.0;
    double take = (t >= 2 ? best[t - 2] : 0.0) + benefits[t];
    if (take > keep) {
      best[t] = take;
      masked[t] = 1;
    } else {
      best[t] = keep;
    }
  }
  for (std::size_t t = n; t-- > 0;) {
    if (masked[t]) {
      out.phi[t] = 1;
      out.objective_value += benefits[t];
      if (t < 2) break;
      --t;  // skip the kept neighbor
    }
  }
  return out;
}

MaskPattern interleave_mask(std::size_t n) {
  MaskPattern out;
  out.phi.assign(n, 0);
  for (std::size_t t = 1; t < n; t += 2) out.phi[t] = 1;
  return out;
}

StageSequence build_stage_sequence(const std::vector<std::string>& tokens,
                                   const std::vector<double>& alpha,
                                   int min_remaining, bool use_interleave) {
  if (tokens.empty()) throw std::invalid_argument("empty sentence");
  if (alpha.size() != tokens.size())
    throw std::invalid_argument("alpha/sentence length mismatch");
  if (min_remaining < 1)
    throw std::invalid_argument("min_remaining must be >= 1");

  // Built top-down (X^K first), flipped at the end.
  std::vector<std::vector<std::string>> stages_desc;
  std::vector<std::vector<StageSequence::Insertion>> aligns_desc;

  std::vector<std::string> cur = tokens;
  std::vector<double> cur_alpha = alpha;
  stages_desc.push_back(cur);

  while (static_cast<int>(cur.size()) >= min_remaining) {
    MaskPattern mask;
    if (use_interleave) {
      mask = interleave_mask(cur.size());
    } else {
      double amax = *std::max_element(cur_alpha.begin(), cur_alpha.end());
      std::vector<double> benefits(cur.size());
      for (std::size_t i = 0; i < cur.size(); ++i)
        benefits[i] = amax - cur_alpha[i];
      mask = dp_mask(benefits);
    }
    if (std::find(mask.phi.begin(), mask.phi.end(), 1) == mask.phi.end())
      break;

    std::vector<std::string> prev;
    std::vector<double> prev_alpha;
    std::vector<StageSequence::Insertion> inserted;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (mask.phi[i]) {
        inserted.push_back({prev.size(), cur[i]});
      } else {
        prev.push_back(cur[i]);
        prev_alpha.push_back(cur_alpha[i]);
      }
    }
    stages_desc.push_back(prev);
    aligns_desc.push_back(std::move(inserted));
    cur = std::move(prev);
    cur_alpha = std::move(prev_alpha);
  }

  StageSequence seq;
  seq.stages.assign(stages_desc.rbegin(), stages_desc.rend());
  seq.alignments.assign(aligns_desc.rbegin(), aligns_desc.rend());
  return seq;
}

std::vector<TokenId> apply_slot_targets(const std::vector<TokenId>& source_ids,
                                        const std::vector<TokenId>& targets) {
  if (targets.size() + 1 != source_ids.size())
    throw std::invalid_argument("slot/source length mismatch");
  std::vector<TokenId> out;
  out.reserve(source_ids.size() + targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i) {
    out.push_back(source_ids[i]);
    if (targets[i] != kNoiId) out.push_back(targets[i]);
  }
  out.push_back(source_ids.back());
  return out;
}

std::vector<StagePair> make_training_pairs(const StageSequence& seq,
                                           const Vocabulary& v) {
  if (seq.stages.empty()) throw std::invalid_argument("empty stage sequence");
  if (seq.alignments.size() + 1 != seq.stages.size())
    throw std::runtime_error("corrupt alignment: stage/alignment count");

  std::vector<StagePair> pairs;
  for (std::size_t k = 0; k + 1 < seq.stages.size(); ++k) {
    StagePair p;
    p.stage_index = static_cast<int>(k);
    p.source_ids = encode_tokens(v, seq.stages[k], true);
    p.slot_targets.assign(p.source_ids.size() - 1, kNoiId);
    for (const auto& ins : seq.alignments[k]) {
      if (ins.gap >= p.slot_targets.size())
        throw std::runtime_error("corrupt alignment: gap out of range");
      if (p.slot_targets[ins.gap] != kNoiId)
        throw std::runtime_error("corrupt alignment: gap filled twice");
      p.slot_targets[ins.gap] = v.id_of(ins.token);
    }
    if (apply_slot_targets(p.source_ids, p.slot_targets) !=
        encode_tokens(v, seq.stages[k + 1], true))
      throw std::runtime_error("corrupt alignment: reconstruction mismatch");
    pairs.push_back(std::move(p));
  }

  StagePair terminal;
  terminal.stage_index = static_cast<int>(seq.stages.size()) - 1;
  terminal.source_ids = encode_tokens(v, seq.stages.back(), true);
  terminal.slot_targets.assign(terminal.source_ids.size() - 1, kNoiId);
  pairs.push_back(std::move(terminal));
  return pairs;
}

namespace {

std::vector<TokenId> parse_ids(const std::string& field) {
  std::vector<TokenId> ids;
  std::istringstream iss(field);
  long v;
  while (iss >> v) ids.push_back(static_cast<TokenId>(v));
  return ids;
}

}  // namespace

void save_pairs(const std::string& path, const std::vector<StagePair>& pairs,
                std::uint64_t vocab_hash) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write dataset: " + path);
  out << "pgen-pairs\t" << kPairsFormatVersion << '\t' << vocab_hash << '\n';
  for (const auto& p : pairs) {
    out << p.stage_index << '\t';
    for (std::size_t i = 0; i < p.source_ids.size(); ++i)
      out << (i ? " " : "") << p.source_ids[i];
    out << '\t';
    for (std::size_t i = 0; i < p.slot_targets.size(); ++i)
      out << (i ? " " : "") << p.slot_targets[i];
    out << '\n';
  }
}

std::uint64_t pairs_file_vocab_hash(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read dataset: " + path);
  std::string header;
  if (!std::getline(in, header)) throw std::runtime_error("empty dataset");
  std::istringstream iss(header);
  std::string magic;
  int version;
  std::uint64_t hash;
  if (!(iss >> magic >> version >> hash) || magic != "pgen-pairs")
    throw std::runtime_error("not a pgen-pairs file: " + path);
  if (version != kPairsFormatVersion)
    throw std::runtime_error("unsupported dataset version " +
                             std::to_string(version));
  return hash;
}

std::vector<StagePair> load_pairs(const std::string& path,
                                  std::uint64_t expected_vocab_hash) {
  std::uint64_t hash = pairs_file_vocab_hash(path);
  if (expected_vocab_hash != 0 && hash != expected_vocab_hash)
    throw std::runtime_error("vocabulary mismatch: dataset " + path +
                             " was built with a different vocabulary");
  std::ifstream in(path, std::ios::binary);
  std::string line;
  std::getline(in, line);  // header, already validated
  std::vector<StagePair> pairs;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto tab1 = line.find('\t');
    auto tab2 = line.find('\t', tab1 == std::string::npos ? 0 : tab1 + 1);
    if (tab1 == std::string::npos || tab2 == std::string::npos)
      throw std::runtime_error("malformed dataset record at line " +
                               std::to_string(line_no));
    StagePair p;
    p.stage_index = std::stoi(line.substr(0, tab1));
    p.source_ids = parse_ids(line.substr(tab1 + 1, tab2 - tab1 - 1));
    p.slot_targets = parse_ids(line.substr(tab2 + 1));
    if (p.source_ids.size() < 2 ||
        p.slot_targets.size() + 1 != p.source_ids.size())
      throw std::runtime_error("inconsistent dataset record at line " +
                               std::to_string(line_no));
    pairs.push_back(std::move(p));
  }
  return pairs;
}

}  // namespace pgen
