#include "illusion/model_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace illusion {

namespace {
using ordered_json = nlohmann::ordered_json;
}

WordPredictor ModelFile::predictor() const {
  return WordPredictor::from_averages(avg_coefficients, avg_intercept, oof_predictions);
}

ModelFile build_model_file(const TrialEnsemble& ensemble) {
  ModelFile model;
  const auto& names = feature_names();
  model.feature_names.assign(names.begin(), names.end());
  model.avg_coefficients = ensemble.overall.coefficients;
  model.avg_intercept = ensemble.overall.intercept;
  model.lambda_grid = ensemble.config.lambda_grid;
  model.trials = ensemble.config.trials;
  model.train_fraction = ensemble.config.train_fraction;
  model.master_seed = ensemble.config.master_seed;
  model.train_corr_mean = ensemble.train_corr_mean;
  model.train_corr_std = ensemble.train_corr_std;
  model.test_corr_mean = ensemble.test_corr_mean;
  model.test_corr_std = ensemble.test_corr_std;
  for (const LabeledWord& row : ensemble.data) {
    auto it = ensemble.by_word.find(row.word);
    if (it != ensemble.by_word.end() && it->second.trials > 0) {
      model.oof_predictions[row.word] = predict_oof(ensemble, row.word, row.features);
    } else {
      model.flagged_words.push_back(row.word);
    }
  }
  return model;
}

std::string serialize_model(const ModelFile& model) {
  ordered_json j;
  j["feature_names"] = model.feature_names;
  j["avg_coefficients"] = model.avg_coefficients;
  j["avg_intercept"] = model.avg_intercept;
  j["lambda_grid"] = model.lambda_grid;
  j["trials"] = model.trials;
  j["train_fraction"] = model.train_fraction;
  j["master_seed"] = model.master_seed;
  j["train_corr_mean"] = model.train_corr_mean;
  j["train_corr_std"] = model.train_corr_std;
  j["test_corr_mean"] = model.test_corr_mean;
  j["test_corr_std"] = model.test_corr_std;
  j["oof_predictions"] = model.oof_predictions;  // std::map keeps keys sorted
  j["flagged_words"] = model.flagged_words;
  return j.dump(2) + "\n";
}

ModelFile parse_model(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("model file is not valid JSON: ") + e.what());
  }
  try {
    ModelFile model;
    model.feature_names = j.at("feature_names").get<std::vector<std::string>>();
    model.avg_coefficients = j.at("avg_coefficients").get<std::vector<double>>();
    model.avg_intercept = j.at("avg_intercept").get<double>();
    model.lambda_grid = j.at("lambda_grid").get<std::vector<double>>();
    model.trials = j.at("trials").get<std::uint32_t>();
    model.train_fraction = j.at("train_fraction").get<double>();
    model.master_seed = j.at("master_seed").get<std::uint64_t>();
    model.train_corr_mean = j.at("train_corr_mean").get<double>();
    model.train_corr_std = j.at("train_corr_std").get<double>();
    model.test_corr_mean = j.at("test_corr_mean").get<double>();
    model.test_corr_std = j.at("test_corr_std").get<double>();
    model.oof_predictions = j.at("oof_predictions").get<std::map<std::string, double>>();
    if (j.contains("flagged_words")) {
      model.flagged_words = j.at("flagged_words").get<std::vector<std::string>>();
    }
    if (model.avg_coefficients.size() != model.feature_names.size()) {
      throw DataError("model file: coefficient and feature name counts disagree");
    }
    return model;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("model file is missing fields: ") + e.what());
  }
}

void save_model(const std::filesystem::path& path, const ModelFile& model) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write model file: " + path.string());
  out << serialize_model(model);
}

ModelFile load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read model file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_model(buffer.str());
}

}  // namespace illusion
