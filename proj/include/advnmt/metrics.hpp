#pragma once

#include <optional>
#include <string>
#include <vector>

namespace advnmt {

struct BleuConfig {
  int max_order = 4;
  double smooth_eps = 1e-9;  // stands in for zero n-gram precisions in log space
  bool lowercase = true;
};

// Corpus-level BLEU in [0,100] on detokenized text: geometric mean of
// clipped n-gram precisions times the brevity penalty. Reference length is
// the closest to the hypothesis length (ties broken toward the shorter).
double bleu(const std::vector<std::string>& hyps,
            const std::vector<std::vector<std::string>>& refs_lists, const BleuConfig& cfg = {});

double sentence_bleu(const std::string& hyp, const std::vector<std::string>& refs,
                     const BleuConfig& cfg = {});

// Character-level BLEU of the perturbed sources against the originals,
// scaled to [0,1]. 1 means unmodified. Characters include spaces; text is
// streamed as UTF-8 code points.
double chr_bleu(const std::vector<std::string>& perturbed_srcs,
                const std::vector<std::string>& original_srcs);

// (B - B') / ((1 - chr) * B); empty when the denominator is degenerate
// (chr == 1 or B == 0), which callers report as "n/a".
std::optional<double> relative_decrease(double bleu_orig, double bleu_pert, double chr);

// (s - s') / s, and 0 when s is 0.
double relative_degradation(double score_orig, double score_pert);

}  // namespace advnmt
