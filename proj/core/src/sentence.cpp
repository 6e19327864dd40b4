#include "illusion/sentence.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <set>

namespace illusion {

WordPredictor WordPredictor::from_model(RidgeModel model) {
  WordPredictor out;
  out.coefficients_ = std::move(model.coefficients);
  out.intercept_ = model.intercept;
  return out;
}

WordPredictor WordPredictor::from_averages(std::vector<double> coefficients, double intercept,
                                           std::map<std::string, double> oof_predictions) {
  WordPredictor out;
  out.coefficients_ = std::move(coefficients);
  out.intercept_ = intercept;
  out.oof_ = std::move(oof_predictions);
  return out;
}

double WordPredictor::predict(const std::string& word,
                              const IllusionFeatureVector& features) const {
  if (auto it = oof_.find(word); it != oof_.end()) return it->second;
  double out = intercept_;
  for (std::size_t i = 0; i < coefficients_.size() && i < features.bits.size(); ++i) {
    if (features.bits[i]) out += coefficients_[i];
  }
  return out;
}

std::vector<std::string> tokenize_sentence(const std::string& sentence) {
  std::vector<std::string> out;
  for (const std::string& raw : split_whitespace(sentence)) {
    std::string word = normalize_word(raw);
    if (!word.empty()) out.push_back(std::move(word));
  }
  return out;
}

namespace {

// Verbatim lookup first; contractions fall back to the part before the
// apostrophe ("mother's" -> "mother"). Returns false when the word stays OOV.
bool resolve_pronunciation(const std::string& word, const PronunciationLexicon& lexicon,
                           Pronunciation& out) {
  if (const auto* prons = lexicon.find(word)) {
    out = prons->front();
    return true;
  }
  if (auto apos = word.find('\''); apos != std::string::npos && apos > 0) {
    if (const auto* prons = lexicon.find(word.substr(0, apos))) {
      out = prons->front();
      return true;
    }
  }
  return false;
}

}  // namespace

SentencePrediction score_sentence_max(const std::string& sentence, const WordPredictor& model,
                                      const PronunciationLexicon& lexicon,
                                      OovPolicy oov_policy) {
  SentencePrediction result;
  result.sentence = sentence;
  const std::vector<std::string> words = tokenize_sentence(sentence);
  if (words.empty()) throw DomainError("sentence has no words: \"" + sentence + "\"");

  for (const std::string& word : words) {
    Pronunciation pron;
    if (!resolve_pronunciation(word, lexicon, pron)) {
      if (oov_policy == OovPolicy::Fail) throw OovError(word);
      result.oov_words.push_back(word);
      continue;
    }
    result.word_scores.push_back({word, model.predict(word, extract_features(pron))});
  }
  if (result.word_scores.empty()) {
    throw DataError("all words out of vocabulary in: \"" + sentence + "\"");
  }

  auto best = std::max_element(
      result.word_scores.begin(), result.word_scores.end(),
      [](const WordScore& a, const WordScore& b) { return a.predicted < b.predicted; });
  result.score = best->predicted;
  result.argmax_word = best->word;
  return result;
}

SentenceFreqFeatures sentence_freq_features(const SentencePrediction& base,
                                            const PronunciationLexicon& lexicon,
                                            const FrequencyLexicon& freq,
                                            const RuleTable& rules) {
  const double floor_value = std::log(static_cast<double>(freq.min_count()));
  auto mean_or_floor = [&](const std::vector<double>& values) {
    if (values.empty()) return floor_value;
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum / static_cast<double>(values.size());
  };

  std::vector<double> plain, attempted, percepts;
  for (const WordScore& entry : base.word_scores) {
    Pronunciation pron;
    if (!resolve_pronunciation(entry.word, lexicon, pron)) continue;
    if (!is_attemptable(pron, rules)) {
      plain.push_back(freq.log_frequency(entry.word));
      continue;
    }
    attempted.push_back(freq.log_frequency(entry.word));
    // The words the dub might be heard as, deduplicated per sentence word.
    std::set<std::string> heard;
    for (const DubPlan& plan : plan_dubs(pron, PlanMode::AllSites, rules)) {
      for (const Confusion& confusion : lexical_confusions(enumerate_percepts(plan), lexicon)) {
        heard.insert(confusion.word);
      }
    }
    for (const std::string& word : heard) {
      percepts.push_back(freq.log_frequency(word));
    }
  }

  SentenceFreqFeatures features;
  features.max_score = base.score;
  features.logfreq_plain = mean_or_floor(plain);
  features.logfreq_attempted = mean_or_floor(attempted);
  features.logfreq_percepts = mean_or_floor(percepts);
  return features;
}

SentencePrediction score_sentence_with_freq(const std::string& sentence,
                                            const WordPredictor& model,
                                            const PronunciationLexicon& lexicon,
                                            const FrequencyLexicon& freq,
                                            const SentenceFreqModel& secondary,
                                            OovPolicy oov_policy, const RuleTable& rules) {
  SentencePrediction result = score_sentence_max(sentence, model, lexicon, oov_policy);
  const SentenceFreqFeatures f = sentence_freq_features(result, lexicon, freq, rules);
  result.score = secondary.w_max * f.max_score + secondary.w_plain * f.logfreq_plain +
                 secondary.w_attempted * f.logfreq_attempted +
                 secondary.w_percepts * f.logfreq_percepts + secondary.bias;
  return result;
}

SentenceFreqModel fit_sentence_freq_model(const std::vector<SentenceFreqFeatures>& rows,
                                          const std::vector<double>& observed, double lambda) {
  if (rows.size() != observed.size() || rows.empty()) {
    throw DomainError("fit_sentence_freq_model: rows and labels disagree");
  }
  Matrix X(rows.size(), 4);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    X.at(r, 0) = rows[r].max_score;
    X.at(r, 1) = rows[r].logfreq_plain;
    X.at(r, 2) = rows[r].logfreq_attempted;
    X.at(r, 3) = rows[r].logfreq_percepts;
  }
  const RidgeModel fit = fit_ridge(X, observed, lambda);
  SentenceFreqModel model;
  model.w_max = fit.coefficients[0];
  model.w_plain = fit.coefficients[1];
  model.w_attempted = fit.coefficients[2];
  model.w_percepts = fit.coefficients[3];
  model.bias = fit.intercept;
  return model;
}

double observed_sentence_illusionability(double original_video_accuracy,
                                         double illusory_video_accuracy) {
  return original_video_accuracy - illusory_video_accuracy;
}

void write_sentence_report_header(std::ostream& out) {
  out << "sentence,score,argmax_word,oov_words\n";
}

namespace {
void write_report_fields(std::ostream& out, const SentencePrediction& prediction) {
  std::string oov;
  for (std::size_t i = 0; i < prediction.oov_words.size(); ++i) {
    if (i) oov += ';';
    oov += prediction.oov_words[i];
  }
  out << csv_escape(prediction.sentence) << ',' << format_double(prediction.score) << ','
      << prediction.argmax_word << ',' << csv_escape(oov);
}
}  // namespace

void write_sentence_report_row(std::ostream& out, const SentencePrediction& prediction) {
  write_report_fields(out, prediction);
  out << '\n';
}

void write_sentence_freq_report_header(std::ostream& out) {
  out << "sentence,score,argmax_word,oov_words,logfreq_plain,logfreq_attempted,"
         "logfreq_percepts\n";
}

void write_sentence_freq_report_row(std::ostream& out, const SentencePrediction& prediction,
                                    const SentenceFreqFeatures& features) {
  write_report_fields(out, prediction);
  out << ',' << format_double(features.logfreq_plain) << ','
      << format_double(features.logfreq_attempted) << ','
      << format_double(features.logfreq_percepts) << '\n';
}

}  // namespace illusion
