#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace advnmt {

enum class TokenizeMode { whitespace, chars };

TokenizeMode tokenize_mode_from_string(const std::string& s);
std::string to_string(TokenizeMode m);

// Token/id bijection with four reserved ids. Read-only after construction.
struct Vocab {
  static constexpr int kPad = 0;
  static constexpr int kBos = 1;
  static constexpr int kEos = 2;
  static constexpr int kUnk = 3;

  std::vector<std::string> id_to_token;  // includes the reserved tokens
  std::unordered_map<std::string, int> token_to_id;

  Vocab();
  int size() const { return static_cast<int>(id_to_token.size()); }
  int encode(const std::string& token) const;
  const std::string& decode(int id) const;
  bool contains(const std::string& token) const { return token_to_id.count(token) > 0; }
  void add(const std::string& token);

  // One non-reserved token per line, line number = id - 4.
  void save(const std::string& path) const;
  static Vocab load(const std::string& path);
};

struct TokenSeq {
  std::vector<int> ids;
  std::vector<std::string> surface;  // aligned 1:1 with ids (unframed)

  std::size_t size() const { return surface.size(); }
};

// Surface tokenization; ids are left empty until encode_seq.
TokenSeq tokenize(const std::string& line, TokenizeMode mode);
std::string detokenize(const TokenSeq& seq, TokenizeMode mode);
std::string detokenize(const std::vector<std::string>& tokens, TokenizeMode mode);

// Fills ids from surfaces under `vocab` (UNK for unknown tokens).
TokenSeq encode_seq(const Vocab& vocab, TokenSeq seq);

std::vector<int> frame_ids(const std::vector<int>& ids);  // BOS ... EOS

// Framed, padded id rows plus masks; masks mark non-PAD positions.
struct ParallelBatch {
  std::vector<std::vector<int>> src, tgt;
  std::vector<std::vector<std::uint8_t>> src_mask, tgt_mask;
  std::vector<TokenSeq> src_rows, tgt_rows;  // unframed originals

  int size() const { return static_cast<int>(src.size()); }
  int src_len() const { return src.empty() ? 0 : static_cast<int>(src[0].size()); }
  int tgt_len() const { return tgt.empty() ? 0 : static_cast<int>(tgt[0].size()); }
};

ParallelBatch pack_batch(const std::vector<std::pair<TokenSeq, TokenSeq>>& pairs);

// One epoch of shuffled batches; every pair appears exactly once.
std::vector<ParallelBatch> make_batches(const std::vector<std::pair<TokenSeq, TokenSeq>>& pairs,
                                        int batch_size, std::uint64_t seed);

Vocab build_vocab(const std::vector<std::string>& corpus_lines, int size_cap, TokenizeMode mode);

// Synthetic parallel corpora for desk-scale experiments. The lexicon task
// draws a fixed random source->target word bijection and applies it token
// by token; the map is returned so scorers can check outputs exactly.
struct SynthCorpus {
  std::vector<std::string> src_lines, tgt_lines, tag_lines;
  std::map<std::string, std::string> lexicon;  // empty unless task == lexicon
};

SynthCorpus synth_corpus(const std::string& task, int vocab_size, int n_pairs, int len_lo,
                         int len_hi, std::uint64_t seed);

std::vector<std::string> read_lines(const std::string& path);
void write_lines(const std::string& path, const std::vector<std::string>& lines);

}  // namespace advnmt
