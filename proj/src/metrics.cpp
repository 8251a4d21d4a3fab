#include "advnmt/metrics.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace advnmt {

namespace {

std::vector<std::string> split_words(const std::string& line, bool lowercase) {
  std::string s = line;
  if (lowercase)
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

std::vector<std::string> split_chars(const std::string& line) {
  std::vector<std::string> out;
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
    out.push_back(line.substr(i, len));
    i += len;
  }
  return out;
}

using Counts = std::unordered_map<std::string, long>;

Counts ngram_counts(const std::vector<std::string>& tokens, int n) {
  Counts counts;
  if (static_cast<int>(tokens.size()) < n) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string key;
    for (int j = 0; j < n; ++j) {
      if (j) key += '\x1f';
      key += tokens[i + j];
    }
    ++counts[key];
  }
  return counts;
}

// Corpus BLEU over pre-tokenized streams, scaled to [0,1].
double corpus_bleu_core(const std::vector<std::vector<std::string>>& hyps,
                        const std::vector<std::vector<std::vector<std::string>>>& refs,
                        int max_order, double smooth_eps) {
  std::vector<long> matched(static_cast<std::size_t>(max_order), 0);
  std::vector<long> total(static_cast<std::size_t>(max_order), 0);
  long hyp_len = 0, ref_len = 0;
  for (std::size_t s = 0; s < hyps.size(); ++s) {
    const auto& hyp = hyps[s];
    hyp_len += static_cast<long>(hyp.size());
    long best_ref = static_cast<long>(refs[s][0].size());
    for (const auto& r : refs[s]) {
      const long rl = static_cast<long>(r.size());
      const long cand = std::labs(rl - static_cast<long>(hyp.size()));
      const long best = std::labs(best_ref - static_cast<long>(hyp.size()));
      if (cand < best || (cand == best && rl < best_ref)) best_ref = rl;
    }
    ref_len += best_ref;
    for (int n = 1; n <= max_order; ++n) {
      Counts hyp_counts = ngram_counts(hyp, n);
      Counts max_ref;
      for (const auto& r : refs[s])
        for (const auto& [k, c] : ngram_counts(r, n)) max_ref[k] = std::max(max_ref[k], c);
      for (const auto& [k, c] : hyp_counts) {
        total[static_cast<std::size_t>(n - 1)] += c;
        auto it = max_ref.find(k);
        if (it != max_ref.end())
          matched[static_cast<std::size_t>(n - 1)] += std::min(c, it->second);
      }
    }
  }
  if (hyp_len == 0) return 0.0;
  double log_sum = 0.0;
  int used_orders = 0;
  for (int n = 0; n < max_order; ++n) {
    if (total[static_cast<std::size_t>(n)] == 0) continue;  // corpus too short for this order
    const double p = matched[static_cast<std::size_t>(n)] > 0
                         ? static_cast<double>(matched[static_cast<std::size_t>(n)]) /
                               static_cast<double>(total[static_cast<std::size_t>(n)])
                         : smooth_eps;
    log_sum += std::log(p);
    ++used_orders;
  }
  if (used_orders == 0) return 0.0;
  const double bp = hyp_len >= ref_len
                        ? 1.0
                        : std::exp(1.0 - static_cast<double>(ref_len) / static_cast<double>(hyp_len));
  return bp * std::exp(log_sum / used_orders);
}

}  // namespace

double bleu(const std::vector<std::string>& hyps,
            const std::vector<std::vector<std::string>>& refs_lists, const BleuConfig& cfg) {
  if (cfg.max_order < 1) throw std::invalid_argument("bleu: max_order must be >= 1");
  if (hyps.size() != refs_lists.size())
    throw std::invalid_argument("bleu: " + std::to_string(hyps.size()) + " hypotheses vs " +
                                std::to_string(refs_lists.size()) + " reference lists");
  std::vector<std::vector<std::string>> hyp_tokens;
  std::vector<std::vector<std::vector<std::string>>> ref_tokens;
  for (std::size_t i = 0; i < hyps.size(); ++i) {
    if (refs_lists[i].empty())
      throw std::invalid_argument("bleu: empty reference list at row " + std::to_string(i));
    hyp_tokens.push_back(split_words(hyps[i], cfg.lowercase));
    ref_tokens.emplace_back();
    for (const auto& r : refs_lists[i]) ref_tokens.back().push_back(split_words(r, cfg.lowercase));
  }
  return 100.0 * corpus_bleu_core(hyp_tokens, ref_tokens, cfg.max_order, cfg.smooth_eps);
}

double sentence_bleu(const std::string& hyp, const std::vector<std::string>& refs,
                     const BleuConfig& cfg) {
  return bleu({hyp}, {refs}, cfg);
}

double chr_bleu(const std::vector<std::string>& perturbed_srcs,
                const std::vector<std::string>& original_srcs) {
  if (perturbed_srcs.size() != original_srcs.size())
    throw std::invalid_argument("chr_bleu: " + std::to_string(perturbed_srcs.size()) +
                                " perturbed vs " + std::to_string(original_srcs.size()) +
                                " original sources");
  std::vector<std::vector<std::string>> hyp_tokens;
  std::vector<std::vector<std::vector<std::string>>> ref_tokens;
  for (std::size_t i = 0; i < perturbed_srcs.size(); ++i) {
    hyp_tokens.push_back(split_chars(perturbed_srcs[i]));
    ref_tokens.push_back({split_chars(original_srcs[i])});
  }
  return corpus_bleu_core(hyp_tokens, ref_tokens, 4, 1e-9);
}

std::optional<double> relative_decrease(double bleu_orig, double bleu_pert, double chr) {
  if (chr >= 1.0 || bleu_orig <= 0.0) return std::nullopt;
  return (bleu_orig - bleu_pert) / ((1.0 - chr) * bleu_orig);
}

double relative_degradation(double score_orig, double score_pert) {
  if (score_orig == 0.0) return 0.0;
  return (score_orig - score_pert) / score_orig;
}

}  // namespace advnmt
