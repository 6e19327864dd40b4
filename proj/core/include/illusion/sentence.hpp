#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "illusion/corpus.hpp"
#include "illusion/mcgurk.hpp"
#include "illusion/ridge.hpp"

namespace illusion {

// Word-level prediction source used by the sentence scorer: a per-word
// out-of-fold table when available, coefficient inference otherwise.
class WordPredictor {
public:
  WordPredictor() = default;
  static WordPredictor from_model(RidgeModel model);
  static WordPredictor from_averages(std::vector<double> coefficients, double intercept,
                                     std::map<std::string, double> oof_predictions);

  double predict(const std::string& word, const IllusionFeatureVector& features) const;

private:
  std::vector<double> coefficients_;
  double intercept_ = 0.0;
  std::map<std::string, double> oof_;
};

enum class OovPolicy : std::uint8_t { Skip, Fail };

struct WordScore {
  std::string word;
  double predicted;
};

struct SentencePrediction {
  std::string sentence;
  std::vector<WordScore> word_scores;
  double score = 0.0;
  std::string argmax_word;
  std::vector<std::string> oov_words;
};

// Whitespace split, surrounding punctuation stripped, lowercased. Empty
// tokens vanish.
std::vector<std::string> tokenize_sentence(const std::string& sentence);

// Scores every in-vocabulary word and takes the maximum. Contractions are
// looked up verbatim with a fallback to the part before the apostrophe.
SentencePrediction score_sentence_max(const std::string& sentence, const WordPredictor& model,
                                      const PronunciationLexicon& lexicon,
                                      OovPolicy oov_policy = OovPolicy::Skip);

// Secondary linear combination over the max score and three mean
// log-frequency class features. The default weights pass the max score
// through unchanged; this variant did not beat the max rule in testing and
// is provided for comparison.
struct SentenceFreqModel {
  double w_max = 1.0;
  double w_plain = 0.0;      // words with no dub attempted
  double w_attempted = 0.0;  // words with at least one dub site
  double w_percepts = 0.0;   // real words the percepts may be heard as
  double bias = 0.0;
};

struct SentenceFreqFeatures {
  double max_score = 0.0;
  double logfreq_plain = 0.0;
  double logfreq_attempted = 0.0;
  double logfreq_percepts = 0.0;
};

SentenceFreqFeatures sentence_freq_features(const SentencePrediction& base,
                                            const PronunciationLexicon& lexicon,
                                            const FrequencyLexicon& freq,
                                            const RuleTable& rules = RuleTable::builtin());

SentencePrediction score_sentence_with_freq(const std::string& sentence,
                                            const WordPredictor& model,
                                            const PronunciationLexicon& lexicon,
                                            const FrequencyLexicon& freq,
                                            const SentenceFreqModel& secondary = {},
                                            OovPolicy oov_policy = OovPolicy::Skip,
                                            const RuleTable& rules = RuleTable::builtin());

// Ridge fit of the secondary model on labeled sentences.
SentenceFreqModel fit_sentence_freq_model(const std::vector<SentenceFreqFeatures>& rows,
                                          const std::vector<double>& observed, double lambda);

// observed = original-video accuracy - illusory-video accuracy.
double observed_sentence_illusionability(double original_video_accuracy,
                                         double illusory_video_accuracy);

// CSV: sentence,score,argmax_word,oov_words (oov list ';'-joined).
void write_sentence_report_header(std::ostream& out);
void write_sentence_report_row(std::ostream& out, const SentencePrediction& prediction);

// Same report extended with the three log-frequency class features.
void write_sentence_freq_report_header(std::ostream& out);
void write_sentence_freq_report_row(std::ostream& out, const SentencePrediction& prediction,
                                    const SentenceFreqFeatures& features);

}  // namespace illusion
