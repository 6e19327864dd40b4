// Command line front end: every pipeline stage as a subcommand, with
// config-file defaults (--config or ILLUSION_CONFIG) and machine-readable
// reports. Exit codes: 0 success, 1 usage error, 2 data error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "illusion/audio/profile.hpp"
#include "illusion/audio/source.hpp"
#include "illusion/audio/stft.hpp"
#include "illusion/audio/transform.hpp"
#include "illusion/audio/wav.hpp"
#include "illusion/calibration.hpp"
#include "illusion/cli_config.hpp"
#include "illusion/common.hpp"
#include "illusion/corpus.hpp"
#include "illusion/features.hpp"
#include "illusion/mcgurk.hpp"
#include "illusion/model_io.hpp"
#include "illusion/phoneme.hpp"
#include "illusion/sentence.hpp"
#include "illusion/synthetic.hpp"
#include "illusion/trials.hpp"

namespace {

using namespace illusion;

constexpr const char* kDefaultLexicon = "data/lexicon.dict";

// Settings shared across subcommands, resolved as flag > config file > default.
struct Context {
  CliConfig file;  // values from --config / ILLUSION_CONFIG

  std::string lexicon_flag, rules_flag, model_flag, freq_flag;
  std::size_t window_flag = 0;
  std::size_t hop_flag = 0;
  double cutoff_flag = 0.0;
  bool cutoff_set = false;
  double atten_flag = 0.0;
  bool atten_set = false;
  std::uint64_t seed_flag = 0;
  bool seed_set = false;
  unsigned threads_flag = 0;
  bool threads_set = false;

  std::string lexicon_path() const {
    if (!lexicon_flag.empty()) return lexicon_flag;
    return file.lexicon.value_or(kDefaultLexicon);
  }
  std::optional<std::string> rules_path() const {
    if (!rules_flag.empty()) return rules_flag;
    return file.rules;
  }
  std::string model_path() const {
    if (!model_flag.empty()) return model_flag;
    if (file.model) return *file.model;
    throw CLI::ValidationError("--model", "no model file given (flag or config)");
  }
  std::string freq_path() const {
    if (!freq_flag.empty()) return freq_flag;
    if (file.freq) return *file.freq;
    throw CLI::ValidationError("--freq", "no frequency list given (flag or config)");
  }
  std::size_t window() const { return window_flag ? window_flag : file.window.value_or(1024); }
  std::size_t hop() const { return hop_flag ? hop_flag : file.hop.value_or(256); }
  double cutoff() const { return cutoff_set ? cutoff_flag : file.cutoff.value_or(1000.0); }
  double atten() const { return atten_set ? atten_flag : file.atten.value_or(-12.0); }
  std::uint64_t seed() const { return seed_set ? seed_flag : file.seed.value_or(0); }
  unsigned threads() const { return threads_set ? threads_flag : file.threads.value_or(0); }

  PronunciationLexicon load_lex() const { return load_lexicon(lexicon_path()); }
  RuleTable rules() const {
    if (auto path = rules_path()) return RuleTable::load(*path);
    return RuleTable::builtin();
  }
};

// Reports go to stdout unless --out names a file.
class OutputTarget {
public:
  explicit OutputTarget(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw DataError("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
  std::ofstream file_;
};

void add_common_flags(CLI::App* cmd, Context& ctx, bool with_lexicon = true) {
  if (with_lexicon) {
    cmd->add_option("--lexicon", ctx.lexicon_flag, "Pronunciation lexicon file");
    cmd->add_option("--rules", ctx.rules_flag, "Substitution rules file (default: built-in)");
  }
}

int cmd_phonemize(const Context& ctx, const std::string& word) {
  const PronunciationLexicon lexicon = ctx.load_lex();
  std::cout << to_string(phonemize(word, lexicon).phonemes) << "\n";
  return 0;
}

int cmd_plan(const Context& ctx, const std::string& word, bool single_site, bool confusions,
             std::size_t limit) {
  const PronunciationLexicon lexicon = ctx.load_lex();
  const RuleTable rules = ctx.rules();
  const Pronunciation pron = phonemize(word, lexicon);

  std::cout << "word: " << pron.word << "\n";
  std::cout << "pronunciation: " << to_string(pron.phonemes) << "\n";
  const auto plans =
      plan_dubs(pron, single_site ? PlanMode::SingleSite : PlanMode::AllSites, rules);
  if (plans.empty()) {
    std::cout << "not attemptable: no substitutable phonemes\n";
    return 0;
  }
  for (std::size_t i = 0; i < plans.size(); ++i) {
    const DubPlan& plan = plans[i];
    std::cout << "plan " << i + 1 << ":\n";
    for (const DubSite& site : plan.sites) {
      std::cout << "  dub site " << site.index << ": " << to_string(site.rule.audio)
                << " -> lip " << to_string(site.rule.lip) << " (percepts:";
      for (std::size_t k = 0; k < site.rule.percepts.size(); ++k) {
        std::cout << (k ? " | " : " ") << to_string(site.rule.percepts[k]);
      }
      std::cout << ")\n";
    }
    const auto candidates = enumerate_percepts(plan, limit);
    std::cout << "  percepts (" << candidates.size() << "):\n";
    for (const PerceptCandidate& candidate : candidates) {
      std::cout << "    " << to_string(candidate.phonemes) << "\n";
    }
    if (confusions) {
      std::cout << "  confusions:\n";
      for (const Confusion& confusion : lexical_confusions(candidates, lexicon)) {
        std::cout << "    " << confusion.word << " <- " << to_string(confusion.candidate.phonemes)
                  << "\n";
      }
    }
  }
  return 0;
}

int cmd_features(const Context& ctx, const std::string& word) {
  const PronunciationLexicon lexicon = ctx.load_lex();
  std::cout << to_json_list(extract_features(phonemize(word, lexicon))) << "\n";
  return 0;
}

struct TrainArgs {
  std::string data_path;
  std::uint32_t trials = 10000;
  double train_fraction = 0.85;
  std::string lambda_grid;
  std::uint32_t folds = 5;
  std::string selection = "cv";
  std::string out_path;
};

int cmd_train(const Context& ctx, const TrainArgs& args) {
  const PronunciationLexicon lexicon = ctx.load_lex();
  TrialConfig config;
  config.trials = args.trials;
  config.train_fraction = args.train_fraction;
  config.master_seed = ctx.seed();
  config.cv_folds = args.folds;
  config.threads = ctx.threads();
  if (!args.lambda_grid.empty()) config.lambda_grid = parse_double_list(args.lambda_grid);
  if (args.selection == "train-mse") {
    config.selection = LambdaSelection::TrainingMse;
  } else if (args.selection != "cv") {
    throw CLI::ValidationError("--selection", "expected cv or train-mse");
  }

  const auto data = load_labeled_words(args.data_path, lexicon);
  const TrialEnsemble ensemble = run_trials(data, config);
  const ModelFile model = build_model_file(ensemble);

  std::cerr << "words: " << data.size() << ", trials: " << config.trials << "\n";
  std::cerr << "correlations: " << ensemble.correlation_summary() << "\n";
  if (!model.flagged_words.empty()) {
    std::cerr << "flagged (no out-of-fold trials): " << model.flagged_words.size() << "\n";
  }
  if (args.out_path.empty()) {
    std::cout << serialize_model(model);
  } else {
    save_model(args.out_path, model);
    std::cerr << "model written to " << args.out_path << "\n";
  }
  return 0;
}

int cmd_predict(const Context& ctx, const std::string& word, const std::string& batch_path,
                const std::string& out_path) {
  const PronunciationLexicon lexicon = ctx.load_lex();
  const ModelFile model = load_model(ctx.model_path());
  const WordPredictor predictor = model.predictor();

  std::vector<std::string> words;
  if (!batch_path.empty()) {
    std::ifstream in(batch_path);
    if (!in) throw DataError("cannot read batch file: " + batch_path);
    std::string line;
    while (std::getline(in, line)) {
      const std::string w = normalize_word(line);
      if (!w.empty()) words.push_back(w);
    }
  } else {
    words.push_back(normalize_word(word));
  }

  OutputTarget out(out_path);
  out.stream() << "word,predicted\n";
  for (const std::string& w : words) {
    const IllusionFeatureVector features = extract_features(phonemize(w, lexicon));
    out.stream() << w << ',' << format_double(predictor.predict(w, features)) << "\n";
  }
  return 0;
}

int cmd_calibrate(const Context& ctx, const std::string& data_path, const std::string& edges,
                  const std::string& out_path) {
  const PronunciationLexicon lexicon = ctx.load_lex();
  const ModelFile model = load_model(ctx.model_path());
  const WordPredictor predictor = model.predictor();

  std::vector<std::pair<double, double>> pairs;
  for (const LabeledWord& row : load_labeled_words(data_path, lexicon)) {
    pairs.emplace_back(predictor.predict(row.word, row.features), row.observed);
  }
  const std::vector<double> edge_values =
      edges.empty() ? std::vector<double>{0.1, 0.2, 0.3} : parse_double_list(edges);

  OutputTarget out(out_path);
  write_calibration_csv(out.stream(), calibrate(pairs, edge_values));
  return 0;
}

int cmd_score_sentence(const Context& ctx, const std::string& text, const std::string& file_path,
                       const std::string& oov, bool with_freq, const std::string& out_path) {
  const PronunciationLexicon lexicon = ctx.load_lex();
  const ModelFile model = load_model(ctx.model_path());
  const WordPredictor predictor = model.predictor();
  const OovPolicy policy = oov == "fail" ? OovPolicy::Fail : OovPolicy::Skip;
  if (oov != "fail" && oov != "skip") {
    throw CLI::ValidationError("--oov", "expected skip or fail");
  }

  std::vector<std::string> sentences;
  if (!file_path.empty()) {
    std::ifstream in(file_path);
    if (!in) throw DataError("cannot read sentence file: " + file_path);
    std::string line;
    while (std::getline(in, line)) {
      if (!std::string(trim(line)).empty()) sentences.emplace_back(trim(line));
    }
  } else {
    sentences.push_back(text);
  }
  if (sentences.empty()) throw DataError("no sentences to score");

  OutputTarget out(out_path);
  if (with_freq) {
    const FrequencyLexicon freq = FrequencyLexicon::load(ctx.freq_path());
    const RuleTable rules = ctx.rules();
    write_sentence_freq_report_header(out.stream());
    for (const std::string& sentence : sentences) {
      const SentencePrediction prediction =
          score_sentence_with_freq(sentence, predictor, lexicon, freq, {}, policy, rules);
      const SentenceFreqFeatures features =
          sentence_freq_features(prediction, lexicon, freq, rules);
      write_sentence_freq_report_row(out.stream(), prediction, features);
    }
  } else {
    write_sentence_report_header(out.stream());
    for (const std::string& sentence : sentences) {
      write_sentence_report_row(out.stream(),
                                score_sentence_max(sentence, predictor, lexicon, policy));
    }
  }
  return 0;
}

int cmd_corpus_sample(const Context& ctx, std::size_t n, std::size_t top_k, bool unique) {
  const FrequencyLexicon freq = FrequencyLexicon::load(ctx.freq_path());
  for (const std::string& word : sample_words(freq, n, top_k, unique, ctx.seed())) {
    std::cout << word << "\n";
  }
  return 0;
}

int cmd_corpus_prevalence(const Context& ctx, std::size_t top_k, std::uint64_t corpus_total) {
  const FrequencyLexicon freq = FrequencyLexicon::load(ctx.freq_path());
  std::cout << format_double(prevalence(freq, top_k, corpus_total)) << "\n";
  return 0;
}

int cmd_audio_profile(const Context& ctx, const std::string& wav_path, bool downmix) {
  const audio::AudioClip clip = audio::read_wav(wav_path, downmix);
  const audio::Spectrogram spec = audio::stft(clip, ctx.window(), ctx.hop());
  const audio::SpectralProfile profile = audio::spectral_profile(spec, ctx.cutoff());
  std::cout << "cutoff_hz: " << format_double(profile.cutoff) << "\n"
            << "ratio_mean: " << format_double(profile.ratio_mean) << "\n"
            << "ratio_std: " << format_double(profile.ratio_std) << "\n"
            << "centroid_hz: " << format_double(profile.centroid) << "\n"
            << "frames: " << spec.frames << "\n";
  return 0;
}

int cmd_audio_rank(const Context& ctx, const std::string& reference_path,
                   const std::string& candidates_dir, std::size_t top, bool downmix,
                   const std::string& out_path) {
  const auto profile_of = [&](const audio::AudioClip& clip) {
    return audio::spectral_profile(audio::stft(clip, ctx.window(), ctx.hop()), ctx.cutoff());
  };
  const audio::SpectralProfile reference = profile_of(audio::read_wav(reference_path, downmix));

  audio::DirectoryAudioSource source(candidates_dir, downmix);
  std::vector<std::pair<std::string, audio::SpectralProfile>> candidates;
  for (const std::string& word : source.list()) {
    try {
      candidates.emplace_back(word, profile_of(source.fetch(word)));
    } catch (const Error& e) {
      log_warning("skipping candidate \"" + word + "\": " + e.what());
    }
  }
  auto ranking = audio::rank_candidates(reference, candidates);
  if (top != 0 && ranking.size() > top) ranking.resize(top);

  OutputTarget out(out_path);
  audio::write_ranking_csv(out.stream(), ranking);
  return 0;
}

int cmd_audio_transform(const Context& ctx, const std::string& wav_path, double factor,
                        const std::string& mode, bool downmix, const std::string& out_path) {
  if (out_path.empty()) throw CLI::ValidationError("--out", "output WAV path required");
  const audio::AudioClip clip = audio::read_wav(wav_path, downmix);
  const audio::AudioClip damped = audio::damp_low(clip, ctx.cutoff(), ctx.atten());
  const audio::AudioClip stretched =
      audio::time_stretch(damped, factor, audio::parse_stretch_mode(mode), ctx.window());
  audio::write_wav(out_path, stretched);
  std::cout << out_path << "\n";
  return 0;
}

int cmd_audio_sweep(const Context& ctx, const std::string& wav_path, const std::string& cutoffs,
                    const std::string& attens, const std::string& factors,
                    const std::string& mode, bool downmix, const std::string& out_dir,
                    const std::string& manifest_path) {
  const audio::AudioClip clip = audio::read_wav(wav_path, downmix);
  std::vector<double> cutoff_grid =
      cutoffs.empty() ? std::vector<double>{ctx.cutoff()} : parse_double_list(cutoffs);
  std::vector<double> atten_grid =
      attens.empty() ? std::vector<double>{ctx.atten()} : parse_double_list(attens);
  std::vector<double> factor_grid;
  if (!factors.empty()) {
    factor_grid = parse_double_list(factors);
  } else if (ctx.file.factors) {
    factor_grid = *ctx.file.factors;
  } else {
    factor_grid.assign(audio::kDefaultStretchFactors.begin(),
                       audio::kDefaultStretchFactors.end());
  }

  const std::string stem = std::filesystem::path(wav_path).stem().string();
  const auto entries =
      audio::generate_sweep(clip, stem, cutoff_grid, atten_grid, factor_grid,
                            audio::parse_stretch_mode(mode), out_dir.empty() ? "." : out_dir);

  OutputTarget out(manifest_path);
  audio::write_sweep_manifest(out.stream(), entries);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Audiovisual speech illusion toolkit: dub planning, illusionability "
               "prediction, and spectral audio-illusion candidates"};
  app.require_subcommand(1);
  app.fallthrough(false);

  Context ctx;
  std::string config_path;
  app.add_option("--config", config_path,
                 "Config file with flat key = value defaults (env: ILLUSION_CONFIG)");

  // phonemize
  std::string word;
  auto* phonemize_cmd = app.add_subcommand("phonemize", "Print a word's phoneme sequence");
  phonemize_cmd->add_option("word", word, "Word to phonemize")->required();
  add_common_flags(phonemize_cmd, ctx);

  // plan
  bool single_site = false, confusions = false;
  std::size_t limit = 64;
  auto* plan_cmd = app.add_subcommand("plan", "Plan visual dubs for a word");
  plan_cmd->add_option("word", word, "Word to plan")->required();
  plan_cmd->add_flag("--single-site", single_site, "One plan per dub site");
  plan_cmd->add_flag("--confusions", confusions, "List real-word percept collisions");
  plan_cmd->add_option("--limit", limit, "Maximum percepts to enumerate per plan");
  add_common_flags(plan_cmd, ctx);

  // features
  auto* features_cmd = app.add_subcommand("features", "Print a word's set feature names");
  features_cmd->add_option("word", word, "Word to featurize")->required();
  add_common_flags(features_cmd, ctx);

  // train
  TrainArgs train_args;
  auto* train_cmd = app.add_subcommand("train", "Fit the word-illusionability model");
  train_cmd->add_option("--data", train_args.data_path, "Labeled CSV (word,baseline,illusory)")
      ->required();
  train_cmd->add_option("--trials", train_args.trials, "Randomized trials (default 10000)");
  train_cmd->add_option("--train-fraction", train_args.train_fraction,
                        "Training split fraction (default 0.85)");
  train_cmd->add_option("--lambda-grid", train_args.lambda_grid,
                        "Comma-separated ridge penalties (default 0.1,1,10,100)");
  train_cmd->add_option("--folds", train_args.folds, "CV folds for lambda selection");
  train_cmd->add_option("--selection", train_args.selection,
                        "Lambda selection: cv or train-mse");
  train_cmd->add_option("--out", train_args.out_path, "Model file path (default: stdout)");
  train_cmd->add_option("--seed", ctx.seed_flag, "Master seed")->each([&](const std::string&) {
    ctx.seed_set = true;
  });
  train_cmd->add_option("--threads", ctx.threads_flag, "Worker threads (0 = all cores)")
      ->each([&](const std::string&) { ctx.threads_set = true; });
  add_common_flags(train_cmd, ctx);

  // predict
  std::string batch_path, out_path;
  auto* predict_cmd = app.add_subcommand("predict", "Predict word illusionability");
  predict_cmd->add_option("word", word, "Word to predict");
  predict_cmd->add_option("--batch", batch_path, "File with one word per line");
  predict_cmd->add_option("--model", ctx.model_flag, "Model file");
  predict_cmd->add_option("--out", out_path, "Report file (default: stdout)");
  add_common_flags(predict_cmd, ctx);

  // calibrate
  std::string data_path, edges;
  auto* calibrate_cmd = app.add_subcommand("calibrate", "Bin predictions against labels");
  calibrate_cmd->add_option("--data", data_path, "Labeled CSV")->required();
  calibrate_cmd->add_option("--model", ctx.model_flag, "Model file");
  calibrate_cmd->add_option("--edges", edges, "Bin edges (default 0.1,0.2,0.3)");
  calibrate_cmd->add_option("--out", out_path, "Report file (default: stdout)");
  add_common_flags(calibrate_cmd, ctx);

  // score-sentence
  std::string sentence_text, sentence_file, oov_policy = "skip";
  bool with_freq = false;
  auto* sentence_cmd = app.add_subcommand("score-sentence", "Predict sentence illusionability");
  sentence_cmd->add_option("sentence", sentence_text, "Sentence text");
  sentence_cmd->add_option("--file", sentence_file, "File with one sentence per line");
  sentence_cmd->add_option("--model", ctx.model_flag, "Model file");
  sentence_cmd->add_option("--oov", oov_policy, "OOV policy: skip or fail");
  sentence_cmd->add_flag("--with-freq", with_freq, "Add log-frequency class features");
  sentence_cmd->add_option("--freq", ctx.freq_flag, "Frequency list (for --with-freq)");
  sentence_cmd->add_option("--out", out_path, "Report file (default: stdout)");
  add_common_flags(sentence_cmd, ctx);

  // corpus
  auto* corpus_cmd = app.add_subcommand("corpus", "Frequency-list utilities");
  corpus_cmd->require_subcommand(1);
  std::size_t sample_n = 200, top_k = 10000;
  bool unique = false;
  std::uint64_t corpus_total = 0;
  auto* sample_cmd = corpus_cmd->add_subcommand("sample", "Frequency-proportional sampling");
  sample_cmd->add_option("--freq", ctx.freq_flag, "Frequency list");
  sample_cmd->add_option("--n", sample_n, "Words to draw (default 200)");
  sample_cmd->add_option("--top-k", top_k, "Restrict to the top k ranked words");
  sample_cmd->add_flag("--unique", unique, "Sample without replacement");
  sample_cmd->add_option("--seed", ctx.seed_flag, "Sampling seed")
      ->each([&](const std::string&) { ctx.seed_set = true; });
  auto* prevalence_cmd = corpus_cmd->add_subcommand("prevalence", "Top-k corpus coverage");
  prevalence_cmd->add_option("--freq", ctx.freq_flag, "Frequency list");
  prevalence_cmd->add_option("--top-k", top_k, "Words counted as covered");
  prevalence_cmd->add_option("--corpus-total", corpus_total,
                             "Full corpus token count when the list is truncated");

  // audio
  auto* audio_cmd = app.add_subcommand("audio", "Spectral-balance audio pipeline");
  audio_cmd->require_subcommand(1);
  std::string wav_path, reference_path, candidates_dir, mode = "resample";
  std::string cutoffs, attens, factors, out_dir, manifest_path;
  double factor = 1.5;
  std::size_t top = 50;
  bool downmix = false;

  auto add_audio_flags = [&](CLI::App* cmd) {
    cmd->add_option("--window", ctx.window_flag, "STFT window size (default 1024)");
    cmd->add_option("--hop", ctx.hop_flag, "STFT hop (default 256)");
    cmd->add_option("--cutoff", ctx.cutoff_flag, "Low/high band boundary in Hz (default 1000)")
        ->each([&](const std::string&) { ctx.cutoff_set = true; });
    cmd->add_flag("--downmix", downmix, "Average stereo input to mono");
  };

  auto* profile_cmd = audio_cmd->add_subcommand("profile", "Print a clip's spectral profile");
  profile_cmd->add_option("wav", wav_path, "Input WAV")->required();
  add_audio_flags(profile_cmd);

  auto* rank_cmd = audio_cmd->add_subcommand("rank", "Rank candidates against a reference");
  rank_cmd->add_option("--reference", reference_path, "Reference WAV")->required();
  rank_cmd->add_option("--candidates", candidates_dir, "Directory of <word>.wav files")
      ->required();
  rank_cmd->add_option("--top", top, "Keep the best N (default 50, 0 = all)");
  rank_cmd->add_option("--out", out_path, "Report file (default: stdout)");
  add_audio_flags(rank_cmd);

  auto* transform_cmd = audio_cmd->add_subcommand("transform", "Damp lows and slow a clip");
  transform_cmd->add_option("wav", wav_path, "Input WAV")->required();
  transform_cmd->add_option("--out", out_path, "Output WAV")->required();
  transform_cmd->add_option("--factor", factor, "Slowdown factor in [1,3] (default 1.5)");
  transform_cmd->add_option("--mode", mode, "resample (pitch drops) or vocoder");
  transform_cmd->add_option("--atten", ctx.atten_flag, "Shelf gain in dB <= 0 (default -12)")
      ->each([&](const std::string&) { ctx.atten_set = true; });
  add_audio_flags(transform_cmd);

  auto* sweep_cmd = audio_cmd->add_subcommand("sweep", "Emit a parameter-grid of variants");
  sweep_cmd->add_option("wav", wav_path, "Input WAV")->required();
  sweep_cmd->add_option("--cutoffs", cutoffs, "Comma-separated shelf cutoffs in Hz");
  sweep_cmd->add_option("--attens", attens, "Comma-separated shelf gains in dB");
  sweep_cmd->add_option("--factors", factors, "Comma-separated slowdown factors");
  sweep_cmd->add_option("--mode", mode, "resample or vocoder");
  sweep_cmd->add_option("--out-dir", out_dir, "Output directory (default: .)");
  sweep_cmd->add_option("--manifest", manifest_path, "Manifest CSV (default: stdout)");
  add_audio_flags(sweep_cmd);

  try {
    app.parse(argc, argv);

    if (!config_path.empty()) {
      ctx.file = load_cli_config(config_path);
    } else {
      ctx.file = cli_config_from_env();
    }

    if (*phonemize_cmd) return cmd_phonemize(ctx, word);
    if (*plan_cmd) return cmd_plan(ctx, word, single_site, confusions, limit);
    if (*features_cmd) return cmd_features(ctx, word);
    if (*train_cmd) return cmd_train(ctx, train_args);
    if (*predict_cmd) {
      if (word.empty() && batch_path.empty()) {
        throw CLI::ValidationError("predict", "give a word or --batch");
      }
      return cmd_predict(ctx, word, batch_path, out_path);
    }
    if (*calibrate_cmd) return cmd_calibrate(ctx, data_path, edges, out_path);
    if (*sentence_cmd) {
      if (sentence_text.empty() && sentence_file.empty()) {
        throw CLI::ValidationError("score-sentence", "give a sentence or --file");
      }
      return cmd_score_sentence(ctx, sentence_text, sentence_file, oov_policy, with_freq,
                                out_path);
    }
    if (*sample_cmd) return cmd_corpus_sample(ctx, sample_n, top_k, unique);
    if (*prevalence_cmd) return cmd_corpus_prevalence(ctx, top_k, corpus_total);
    if (*profile_cmd) return cmd_audio_profile(ctx, wav_path, downmix);
    if (*rank_cmd) {
      return cmd_audio_rank(ctx, reference_path, candidates_dir, top, downmix, out_path);
    }
    if (*transform_cmd) {
      return cmd_audio_transform(ctx, wav_path, factor, mode, downmix, out_path);
    }
    if (*sweep_cmd) {
      return cmd_audio_sweep(ctx, wav_path, cutoffs, attens, factors, mode, downmix, out_dir,
                             manifest_path);
    }
    return 0;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
