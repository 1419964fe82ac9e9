#include "srcsel/bench/synthetic.hpp"

#include <cstdio>
#include <numeric>
#include <string>

#include "srcsel/core/error.hpp"
#include "srcsel/core/random.hpp"

namespace srcsel {

void SynthConfig::validate() const {
  if (m == 0 || n < 2 || p == 0) {
    throw Error(ErrorCode::InvalidArgument, "synthetic data needs m >= 1, n >= 2, p >= 1");
  }
  if (clean_sources > m) throw Error(ErrorCode::InvalidArgument, "more clean sources than sources");
  for (const double noise : {label_noise_clean, label_noise_corrupt}) {
    if (!(noise >= 0.0 && noise <= 0.5)) {
      throw Error(ErrorCode::InvalidArgument, "label noise must lie in [0, 0.5]");
    }
  }
}

SyntheticData generate_synthetic(const SynthConfig& cfg) {
  cfg.validate();
  SyntheticData out;
  Rng setup(cfg.seed, 0);
  out.concept_weights.resize(static_cast<Eigen::Index>(cfg.p));
  for (Eigen::Index j = 0; j < out.concept_weights.size(); ++j) {
    out.concept_weights(j) = setup.uniform(-1.0, 1.0);
  }
  std::vector<std::size_t> order(cfg.m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  setup.shuffle(std::span<std::size_t>(order));
  out.clean = SourceSet::empty(cfg.m);
  for (std::size_t i = 0; i < cfg.clean_sources; ++i) out.clean = out.clean.with(SourceId{order[i]});

  const int digits = static_cast<int>(std::to_string(cfg.m > 1 ? cfg.m - 1 : 0).size());
  const auto rows = static_cast<Eigen::Index>(cfg.n);
  const auto cols = static_cast<Eigen::Index>(cfg.p);
  for (std::size_t s = 0; s < cfg.m; ++s) {
    Rng rng(cfg.seed, 1 + s);
    const double noise =
        out.clean.contains(SourceId{s}) ? cfg.label_noise_clean : cfg.label_noise_corrupt;
    RawSource src;
    char name[32];
    std::snprintf(name, sizeof name, "source_%0*zu", std::max(digits, 2), s);
    src.name = name;
    src.data.features.resize(rows, cols);
    src.data.labels.resize(rows);
    for (Eigen::Index r = 0; r < rows; ++r) {
      double score = 0.0;
      for (Eigen::Index j = 0; j < cols; ++j) {
        const double x = rng.uniform01();
        src.data.features(r, j) = x;
        score += out.concept_weights(j) * (x - 0.5);
      }
      double label = score > 0.0 ? 1.0 : 0.0;
      if (rng.bernoulli(noise)) label = 1.0 - label;
      src.data.labels(r) = label;
    }
    out.sources.push_back(std::move(src));
  }
  return out;
}

}  // namespace srcsel
