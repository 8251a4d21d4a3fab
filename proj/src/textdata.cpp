#include "advnmt/textdata.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "advnmt/rng.hpp"

namespace advnmt {

namespace {
// Visible stand-in for a space in char mode so round-trips stay exact.
const std::string kSpaceToken = "\xe2\x90\xa3";  // U+2423 open box
}  // namespace

TokenizeMode tokenize_mode_from_string(const std::string& s) {
  if (s == "whitespace" || s == "word") return TokenizeMode::whitespace;
  if (s == "char" || s == "chars") return TokenizeMode::chars;
  throw std::invalid_argument("tokenize mode must be 'whitespace' or 'char', got '" + s + "'");
}

std::string to_string(TokenizeMode m) {
  return m == TokenizeMode::whitespace ? "whitespace" : "char";
}

Vocab::Vocab() {
  id_to_token = {"<pad>", "<bos>", "<eos>", "<unk>"};
  for (int i = 0; i < 4; ++i) token_to_id[id_to_token[i]] = i;
}

int Vocab::encode(const std::string& token) const {
  auto it = token_to_id.find(token);
  return it == token_to_id.end() ? kUnk : it->second;
}

const std::string& Vocab::decode(int id) const {
  if (id < 0 || id >= size())
    throw std::out_of_range("vocab: id " + std::to_string(id) + " outside [0," +
                            std::to_string(size()) + ")");
  return id_to_token[static_cast<std::size_t>(id)];
}

void Vocab::add(const std::string& token) {
  if (token_to_id.count(token)) return;
  token_to_id[token] = size();
  id_to_token.push_back(token);
}

void Vocab::save(const std::string& path) const {
  std::vector<std::string> lines(id_to_token.begin() + 4, id_to_token.end());
  write_lines(path, lines);
}

Vocab Vocab::load(const std::string& path) {
  Vocab v;
  for (const auto& line : read_lines(path)) v.add(line);
  return v;
}

TokenSeq tokenize(const std::string& line, TokenizeMode mode) {
  TokenSeq seq;
  if (mode == TokenizeMode::whitespace) {
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) seq.surface.push_back(tok);
    return seq;
  }
  // char mode; splits on UTF-8 code points, spaces become a visible token
  std::size_t i = 0;
  while (i < line.size()) {
    const unsigned char c = static_cast<unsigned char>(line[i]);
    std::size_t len = 1;
    if (c >= 0xf0)
      len = 4;
    else if (c >= 0xe0)
      len = 3;
    else if (c >= 0xc0)
      len = 2;
    len = std::min(len, line.size() - i);
    std::string ch = line.substr(i, len);
    seq.surface.push_back(ch == " " ? kSpaceToken : ch);
    i += len;
  }
  return seq;
}

std::string detokenize(const std::vector<std::string>& tokens, TokenizeMode mode) {
  std::string out;
  if (mode == TokenizeMode::whitespace) {
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (i) out += ' ';
      out += tokens[i];
    }
    return out;
  }
  for (const auto& t : tokens) out += (t == kSpaceToken ? " " : t);
  return out;
}

std::string detokenize(const TokenSeq& seq, TokenizeMode mode) {
  return detokenize(seq.surface, mode);
}

TokenSeq encode_seq(const Vocab& vocab, TokenSeq seq) {
  seq.ids.resize(seq.surface.size());
  for (std::size_t i = 0; i < seq.surface.size(); ++i) seq.ids[i] = vocab.encode(seq.surface[i]);
  return seq;
}

std::vector<int> frame_ids(const std::vector<int>& ids) {
  std::vector<int> out;
  out.reserve(ids.size() + 2);
  out.push_back(Vocab::kBos);
  out.insert(out.end(), ids.begin(), ids.end());
  out.push_back(Vocab::kEos);
  return out;
}

namespace {

void pack_side(const std::vector<const TokenSeq*>& rows, std::vector<std::vector<int>>& out,
               std::vector<std::vector<std::uint8_t>>& masks) {
  std::size_t max_len = 0;
  for (const auto* r : rows) max_len = std::max(max_len, r->ids.size() + 2);
  for (const auto* r : rows) {
    std::vector<int> framed = frame_ids(r->ids);
    std::vector<std::uint8_t> mask(max_len, 0);
    for (std::size_t i = 0; i < framed.size(); ++i) mask[i] = 1;
    framed.resize(max_len, Vocab::kPad);
    out.push_back(std::move(framed));
    masks.push_back(std::move(mask));
  }
}

}  // namespace

ParallelBatch pack_batch(const std::vector<std::pair<TokenSeq, TokenSeq>>& pairs) {
  if (pairs.empty()) throw std::invalid_argument("pack_batch: empty batch");
  ParallelBatch b;
  std::vector<const TokenSeq*> src_rows, tgt_rows;
  for (const auto& [s, t] : pairs) {
    src_rows.push_back(&s);
    tgt_rows.push_back(&t);
    b.src_rows.push_back(s);
    b.tgt_rows.push_back(t);
  }
  pack_side(src_rows, b.src, b.src_mask);
  pack_side(tgt_rows, b.tgt, b.tgt_mask);
  return b;
}

std::vector<ParallelBatch> make_batches(const std::vector<std::pair<TokenSeq, TokenSeq>>& pairs,
                                        int batch_size, std::uint64_t seed) {
  if (batch_size < 1) throw std::invalid_argument("make_batches: batch_size must be >= 1");
  std::vector<std::size_t> order(pairs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  Rng rng(seed);
  for (std::size_t i = order.size(); i > 1; --i)
    std::swap(order[i - 1], order[rng.uniform_int(static_cast<int>(i))]);
  std::vector<ParallelBatch> batches;
  std::vector<std::pair<TokenSeq, TokenSeq>> chunk;
  for (std::size_t i = 0; i < order.size(); ++i) {
    chunk.push_back(pairs[order[i]]);
    if (static_cast<int>(chunk.size()) == batch_size || i + 1 == order.size()) {
      batches.push_back(pack_batch(chunk));
      chunk.clear();
    }
  }
  return batches;
}

Vocab build_vocab(const std::vector<std::string>& corpus_lines, int size_cap, TokenizeMode mode) {
  if (corpus_lines.empty()) throw std::invalid_argument("build_vocab: empty corpus");
  if (size_cap <= 4) throw std::invalid_argument("build_vocab: size cap must exceed the 4 reserved ids");
  std::map<std::string, long> counts;
  for (const auto& line : corpus_lines)
    for (const auto& tok : tokenize(line, mode).surface) ++counts[tok];
  if (counts.empty()) throw std::invalid_argument("build_vocab: corpus contains no tokens");
  std::vector<std::pair<std::string, long>> ranked(counts.begin(), counts.end());
  // frequency first, lexicographic tie-break for reproducibility
  std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  Vocab v;
  for (const auto& [tok, cnt] : ranked) {
    if (v.size() >= size_cap) break;
    v.add(tok);
  }
  return v;
}

SynthCorpus synth_corpus(const std::string& task, int vocab_size, int n_pairs, int len_lo,
                         int len_hi, std::uint64_t seed) {
  if (task != "copy" && task != "reverse" && task != "lexicon")
    throw std::invalid_argument("synth_corpus: task must be copy, reverse or lexicon");
  if (vocab_size < 10) throw std::invalid_argument("synth_corpus: vocab_size must be >= 10");
  if (n_pairs < 1 || len_lo < 1 || len_hi < len_lo)
    throw std::invalid_argument("synth_corpus: bad pair count or length range");

  Rng rng(seed);
  auto make_words = [&rng](int n, char prefix) {
    std::set<std::string> seen;
    std::vector<std::string> words;
    while (static_cast<int>(words.size()) < n) {
      const int len = 3 + rng.uniform_int(4);
      std::string w(1, prefix);
      for (int i = 0; i < len; ++i) w += static_cast<char>('a' + rng.uniform_int(26));
      if (seen.insert(w).second) words.push_back(w);
    }
    return words;
  };

  const std::vector<std::string> src_words = make_words(vocab_size, 's');
  std::vector<std::string> tgt_words;
  SynthCorpus out;
  if (task == "lexicon") {
    tgt_words = make_words(vocab_size, 't');
    for (int i = 0; i < vocab_size; ++i) out.lexicon[src_words[i]] = tgt_words[i];
  }

  // word classes for per-tag analysis of synthetic corpora
  const int n_tags = 5;
  auto tag_of = [&src_words](int word_idx) { return "C" + std::to_string(word_idx % 5); };
  (void)n_tags;

  for (int p = 0; p < n_pairs; ++p) {
    const int len = len_lo + rng.uniform_int(len_hi - len_lo + 1);
    std::vector<int> idx(len);
    for (auto& i : idx) i = rng.uniform_int(vocab_size);
    std::string src, tgt, tags;
    for (int i = 0; i < len; ++i) {
      if (i) {
        src += ' ';
        tags += ' ';
      }
      src += src_words[static_cast<std::size_t>(idx[i])];
      tags += tag_of(idx[i]);
    }
    if (task == "reverse") {
      for (int i = len - 1; i >= 0; --i) {
        if (i != len - 1) tgt += ' ';
        tgt += src_words[static_cast<std::size_t>(idx[i])];
      }
    } else {
      for (int i = 0; i < len; ++i) {
        if (i) tgt += ' ';
        tgt += (task == "copy") ? src_words[static_cast<std::size_t>(idx[i])]
                                : out.lexicon.at(src_words[static_cast<std::size_t>(idx[i])]);
      }
    }
    out.src_lines.push_back(std::move(src));
    out.tgt_lines.push_back(std::move(tgt));
    out.tag_lines.push_back(std::move(tags));
  }
  return out;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

void write_lines(const std::string& path, const std::vector<std::string>& lines) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path + " for writing");
  for (const auto& line : lines) os << line << '\n';
}

}  // namespace advnmt
