#include "textsweep/classifier.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <stdexcept>

#include "textsweep/rng.hpp"

namespace textsweep {
namespace {

constexpr std::array<const char*, kNumLabels> kLabelNames = {"positive", "neutral",
                                                             "negative", "none"};

double sparse_dot(const std::vector<double>& w, const SparseVector& v) {
  double sum = 0.0;
  for (const auto& [col, weight] : v.entries) sum += w[col] * weight;
  return sum;
}

}  // namespace

const char* label_name(Label l) { return kLabelNames[static_cast<int>(l)]; }

std::optional<Label> label_from_name(std::string_view name) {
  for (int i = 0; i < kNumLabels; ++i) {
    if (name == kLabelNames[i]) return static_cast<Label>(i);
  }
  return std::nullopt;
}

LinearModel train(const std::vector<SparseVector>& vectors,
                  const std::vector<Label>& labels, std::size_t dim,
                  const TrainParams& params) {
  if (vectors.size() != labels.size())
    throw std::invalid_argument("vectors/labels size mismatch");
  if (vectors.size() < 2) throw std::invalid_argument("need at least 2 samples");
  for (const auto& v : vectors) {
    for (const auto& [col, w] : v.entries) {
      if (col >= dim) throw std::invalid_argument("vector column exceeds dimension");
    }
  }
  const std::set<Label> distinct(labels.begin(), labels.end());
  if (distinct.size() < 2) throw std::invalid_argument("degenerate training set");

  LinearModel model;
  model.classes.assign(distinct.begin(), distinct.end());
  model.dim = dim;
  model.lambda = params.lambda > 0.0 ? params.lambda
                                     : 1.0 / static_cast<double>(vectors.size());
  model.epochs = params.epochs;
  model.seed = params.seed;

  const std::size_t n = vectors.size();
  for (std::size_t c = 0; c < model.classes.size(); ++c) {
    const Label target = model.classes[c];
    // w is kept factored as scale * v so the per-step shrink stays O(nnz)
    std::vector<double> acc(dim, 0.0);
    double scale = 1.0;
    double bias = 0.0;
    Rng rng(Rng::mix(params.seed, static_cast<std::uint64_t>(target) + 1));
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);

    std::uint64_t t = 0;
    for (int epoch = 0; epoch < params.epochs; ++epoch) {
      rng.shuffle(order);
      for (const std::size_t i : order) {
        ++t;
        const double y = labels[i] == target ? 1.0 : -1.0;
        const double eta = 1.0 / (model.lambda * static_cast<double>(t));
        const double margin = y * (scale * sparse_dot(acc, vectors[i]) + bias);
        if (t == 1) {
          scale = 1.0;  // w and bias are still zero; the shrink is a no-op
        } else {
          const double shrink = 1.0 - 1.0 / static_cast<double>(t);
          scale *= shrink;
          bias *= shrink;
        }
        if (margin < 1.0) {
          const double step = eta * y / scale;
          for (const auto& [col, w] : vectors[i].entries) acc[col] += step * w;
          bias += eta * y;
        }
      }
    }
    std::vector<double> w(dim);
    for (std::size_t d = 0; d < dim; ++d) w[d] = scale * acc[d];
    model.weights.push_back(std::move(w));
    model.bias.push_back(bias);
  }
  return model;
}

std::vector<double> decision_values(const LinearModel& model, const SparseVector& v) {
  std::vector<double> scores(model.classes.size());
  for (std::size_t c = 0; c < model.classes.size(); ++c) {
    scores[c] = sparse_dot(model.weights[c], v) + model.bias[c];
  }
  return scores;
}

Label predict(const LinearModel& model, const SparseVector& v) {
  const auto scores = decision_values(model, v);
  std::size_t best = 0;
  for (std::size_t c = 1; c < scores.size(); ++c) {
    if (scores[c] > scores[best]) best = c;  // ties keep the earlier class
  }
  return model.classes[best];
}

nlohmann::json model_to_json(const LinearModel& model) {
  nlohmann::json j;
  std::vector<std::string> names;
  for (Label l : model.classes) names.emplace_back(label_name(l));
  j["classes"] = names;
  j["weights"] = model.weights;
  j["bias"] = model.bias;
  j["dim"] = model.dim;
  j["lambda"] = model.lambda;
  j["epochs"] = model.epochs;
  j["seed"] = model.seed;
  return j;
}

LinearModel model_from_json(const nlohmann::json& j) {
  LinearModel model;
  for (const auto& name : j.at("classes")) {
    const auto label = label_from_name(name.get<std::string>());
    if (!label) throw std::runtime_error("unknown class label in model file");
    model.classes.push_back(*label);
  }
  model.weights = j.at("weights").get<std::vector<std::vector<double>>>();
  model.bias = j.at("bias").get<std::vector<double>>();
  model.dim = j.at("dim").get<std::size_t>();
  model.lambda = j.at("lambda").get<double>();
  model.epochs = j.at("epochs").get<int>();
  model.seed = j.at("seed").get<std::uint64_t>();
  return model;
}

}  // namespace textsweep
