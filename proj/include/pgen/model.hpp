#ifndef PGEN_MODEL_HPP
#define PGEN_MODEL_HPP

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <vector>

#include "pgen/corpus.hpp"
#include "pgen/staging.hpp"

namespace pgen {

using Matrix = Eigen::MatrixXd;

struct ModelConfig {
  int d_model = 128;
  int n_layers = 2;
  int n_heads = 4;
  int d_ff = 256;
  int max_len = 64;
  int vocab_size = 0;
  std::uint64_t seed = 1;

  int head_dim() const { return d_model / n_heads; }
  // Throws one error listing every violated field.
  void validate() const;
  bool operator==(const ModelConfig&) const = default;
};

struct LayerParams {
  Matrix ln1_g, ln1_b;
  Matrix wq, bq, wk, bk, wv, bv, wo, bo;
  Matrix ln2_g, ln2_b;
  Matrix w1, b1, w2, b2;
};

// Bidirectional encoder over the current stage plus a per-gap head over
// V' (vocabulary including [NOI]). Pre-norm residual blocks, learned
// positional embeddings, slot i fed with the concatenated hidden states of
// positions i and i+1.
struct InsertionModelParams {
  ModelConfig cfg;
  Matrix tok_emb;  // vocab_size x d_model
  Matrix pos_emb;  // max_len x d_model
  std::vector<LayerParams> layers;
  Matrix lnf_g, lnf_b;
  Matrix slot_w1, slot_b1;  // 2d -> d
  Matrix slot_w2, slot_b2;  // d -> vocab

  // Visits every tensor in the fixed serialization order.
  template <typename F>
  void visit(F&& f) {
    f("tok_emb", tok_emb);
    f("pos_emb", pos_emb);
    for (std::size_t l = 0; l < layers.size(); ++l) {
      auto& L = layers[l];
      std::string p = "layer" + std::to_string(l) + ".";
      f(p + "ln1_g", L.ln1_g);
      f(p + "ln1_b", L.ln1_b);
      f(p + "wq", L.wq);
      f(p + "bq", L.bq);
      f(p + "wk", L.wk);
      f(p + "bk", L.bk);
      f(p + "wv", L.wv);
      f(p + "bv", L.bv);
      f(p + "wo", L.wo);
      f(p + "bo", L.bo);
      f(p + "ln2_g", L.ln2_g);
      f(p + "ln2_b", L.ln2_b);
      f(p + "w1", L.w1);
      f(p + "b1", L.b1);
      f(p + "w2", L.w2);
      f(p + "b2", L.b2);
    }
    f("lnf_g", lnf_g);
    f("lnf_b", lnf_b);
    f("slot_w1", slot_w1);
    f("slot_b1", slot_b1);
    f("slot_w2", slot_w2);
    f("slot_b2", slot_b2);
  }
  template <typename F>
  void visit(F&& f) const {
    const_cast<InsertionModelParams*>(this)->visit(
        [&](const std::string& n, Matrix& m) {
          f(n, static_cast<const Matrix&>(m));
        });
  }

  bool all_finite() const;
};

struct SlotLogits {
  Matrix logits;  // num_slots x vocab_size
  int num_slots() const { return static_cast<int>(logits.rows()); }
};

// Slot target value excluded from the loss (padding).
constexpr TokenId kIgnoreTarget = -1;

InsertionModelParams init_model(const ModelConfig& cfg);
// Same shapes as params, all zeros; gradient containers.
InsertionModelParams zeros_like(const InsertionModelParams& params);

// Full self-attention encode of a boundaried id sequence; trailing [PAD]
// ids are ignored. Throws "exceeds max_len" on overlong input.
SlotLogits forward_slots(const InsertionModelParams& params,
                         const std::vector<TokenId>& ids);

// Mean cross-entropy over all counted slots of the batch (targets equal to
// kIgnoreTarget and slots past the unpadded length are skipped). grads
// receives exact analytic derivatives of that mean.
double loss_and_grad(const InsertionModelParams& params,
                     const std::vector<StagePair>& batch,
                     InsertionModelParams& grads);
double loss_only(const InsertionModelParams& params,
                 const std::vector<StagePair>& batch);

constexpr int kCheckpointVersion = 1;

void save_checkpoint(const InsertionModelParams& params,
                     const std::string& path, std::uint64_t vocab_hash);
// expected_vocab_hash 0 skips the check.
InsertionModelParams load_checkpoint(const std::string& path,
                                     std::uint64_t expected_vocab_hash = 0,
                                     std::uint64_t* stored_hash = nullptr);

// Numerically stable row-wise log-softmax.
Matrix log_softmax_rows(const Matrix& logits);
Eigen::VectorXd log_softmax_row(const Eigen::VectorXd& logits);

}  // namespace pgen

#endif  // PGEN_MODEL_HPP
