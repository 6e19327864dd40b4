#pragma once

#include <array>

namespace illusion::reference {

// Aggregate outcomes from the original listener studies, kept as fixtures for
// documentation and report comparison. Reproducing them requires human
// subjects and the unpublished per-word labels, so nothing here is a test
// target beyond its own arithmetic.

// Word-level study (error rates among attempted words).
inline constexpr double kWordErrorAudioOnly = 0.100;
inline constexpr double kWordErrorIllusoryVideo = 0.248;

// Sentence-level study (error rates).
inline constexpr double kSentenceErrorOriginalVideo = 0.134;
inline constexpr double kSentenceErrorIllusoryVideo = 0.328;

// Reported out-of-sample correlations of the predictors.
inline constexpr double kWordModelOutOfSampleCorr = 0.57;
inline constexpr double kSentenceModelOutOfSampleCorr = 0.33;

// Reported trial-ensemble correlations (mean, sample std over 10k trials).
inline constexpr double kTrainCorrMean = 0.911;
inline constexpr double kTrainCorrStd = 0.006;
inline constexpr double kTestCorrMean = 0.446;
inline constexpr double kTestCorrStd = 0.289;

// Calibration of predicted word illusionability: mean observed value per
// prediction bin with edges {0.1, 0.2, 0.3}.
inline constexpr std::array<double, 3> kCalibrationEdges = {0.1, 0.2, 0.3};
inline constexpr std::array<double, 4> kCalibrationBinMeans = {0.04, 0.14, 0.27, 0.50};

// Word sampling design: 200 words drawn from the top 10k, of which 147
// contained a substitutable phoneme; the top 10k covered 80.6% of corpus
// tokens, and log-frequency features used a 36.7k-word list.
inline constexpr int kSampledWordCount = 200;
inline constexpr int kAttemptedWordCount = 147;
inline constexpr int kSamplingTopK = 10000;
inline constexpr double kTopKPrevalence = 0.806;
inline constexpr int kFrequencyListSize = 36700;

// Audio-illusion study: per-word slowdown factors of the published examples.
inline constexpr std::array<double, 4> kAudioSlowdownFactors = {1.3, 1.5, 1.7, 1.9};
inline constexpr int kAudioWordsExamined = 5000;
inline constexpr int kAudioCandidatesKept = 50;

}  // namespace illusion::reference
