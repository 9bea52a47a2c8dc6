#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "textsweep/vectorizer.hpp"

namespace textsweep {

// The four polarity classes, in the canonical order used for argmax
// tie-breaking.
enum class Label : int { positive, neutral, negative, none };
inline constexpr int kNumLabels = 4;

const char* label_name(Label l);
std::optional<Label> label_from_name(std::string_view name);

struct TrainParams {
  double lambda = 0.0;  // <= 0 selects 1/n_samples
  int epochs = 10;
  std::uint64_t seed = 42;
};

// One-vs-rest linear max-margin model fit by stochastic subgradient descent
// on the L2-regularized hinge loss (step size 1/(lambda*t)). Deterministic
// given training order and seed.
struct LinearModel {
  std::vector<Label> classes;  // canonical order
  std::vector<std::vector<double>> weights;
  std::vector<double> bias;
  std::size_t dim = 0;
  double lambda = 0.0;
  int epochs = 0;
  std::uint64_t seed = 0;
};

// Throws std::invalid_argument on size mismatch, a single-class training
// set ("degenerate training set") or columns beyond dim.
LinearModel train(const std::vector<SparseVector>& vectors,
                  const std::vector<Label>& labels, std::size_t dim,
                  const TrainParams& params = {});

std::vector<double> decision_values(const LinearModel& model, const SparseVector& v);
Label predict(const LinearModel& model, const SparseVector& v);

nlohmann::json model_to_json(const LinearModel& model);
LinearModel model_from_json(const nlohmann::json& j);

}  // namespace textsweep
