#include <cmath>
#include <random>

#include "doctest.h"
#include "srcsel/core/error.hpp"
#include "srcsel/oracle/dataset.hpp"
#include "srcsel/oracle/eval_cache.hpp"
#include "srcsel/oracle/gain_models.hpp"
#include "srcsel/oracle/metrics.hpp"
#include "srcsel/oracle/oracle.hpp"
#include "srcsel/oracle/trainer.hpp"
#include "support/oracles.hpp"

using namespace srcsel;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an srcsel::Error");
  return ErrorCode::InvalidArgument;
}

VectorXd vec(std::initializer_list<double> v) {
  VectorXd out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out(i++) = x;
  return out;
}

// Rows numbered from `first` so provenance survives shuffling.
RawSource numbered_source(const std::string& name, int rows, double first) {
  RawSource s{name, {}};
  s.data.features.resize(rows, 2);
  s.data.labels.resize(rows);
  for (int i = 0; i < rows; ++i) {
    s.data.features(i, 0) = first + i;
    s.data.features(i, 1) = -(first + i);
    s.data.labels(i) = i % 2;
  }
  return s;
}

// Labels from a fixed hyperplane over uniform features.
std::vector<RawSource> concept_sources(std::size_t m, int rows, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<RawSource> out;
  for (std::size_t s = 0; s < m; ++s) {
    RawSource src{"s" + std::to_string(s), {}};
    src.data.features.resize(rows, 3);
    src.data.labels.resize(rows);
    src.data.sensitive = VectorXd(rows);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < 3; ++j) src.data.features(i, j) = u(gen);
      const double z = src.data.features(i, 0) - 0.5 * src.data.features(i, 1);
      src.data.labels(i) = z > 0 ? 1.0 : 0.0;
      (*src.data.sensitive)(i) = i % 2;
    }
    out.push_back(std::move(src));
  }
  return out;
}

}  // namespace

TEST_CASE("split fraction arithmetic and determinism") {
  const std::vector<RawSource> one = {numbered_source("a", 10, 0)};
  const auto split = split_sources(one, 0.2, 9);
  CHECK(split.train[0].rows() == 8);
  CHECK(split.test.rows() == 2);
  const auto again = split_sources(one, 0.2, 9);
  CHECK(fingerprint(again.train[0]) == fingerprint(split.train[0]));
  CHECK(again.test_fingerprint() == split.test_fingerprint());

  const std::vector<RawSource> three = {numbered_source("a", 100, 0), numbered_source("b", 100, 1000),
                                        numbered_source("c", 100, 2000)};
  const auto s3 = split_sources(three, 0.2, 1);
  CHECK(s3.test.rows() == 60);
  CHECK(s3.test_rows_per_source == std::vector<std::size_t>{20, 20, 20});
  // Train and test rows are disjoint.
  for (std::size_t s = 0; s < 3; ++s) {
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(s3.train[s].rows()); ++i) {
      const double id = s3.train[s].features(i, 0);
      CHECK((s3.test.features.col(0).array() == id).count() == 0);
    }
  }
}

TEST_CASE("split rejects empty and tiny sources") {
  CHECK(code_of([] { split_sources({numbered_source("a", 0, 0)}, 0.2, 0); }) ==
        ErrorCode::EmptySource);
  CHECK(code_of([] { split_sources({numbered_source("a", 1, 0)}, 0.2, 0); }) ==
        ErrorCode::DegenerateSplit);
}

TEST_CASE("assemble concatenates member training rows in id order") {
  const std::vector<RawSource> three = {numbered_source("a", 20, 0), numbered_source("b", 30, 100),
                                        numbered_source("c", 40, 200)};
  const auto data = split_sources(three, 0.25, 4);
  const auto s2 = assemble_training(SourceSet::singleton(3, SourceId{2}), data);
  CHECK(s2.features == data.train[2].features);
  CHECK(s2.labels == data.train[2].labels);

  const auto s13 = assemble_training(SourceSet::from_mask(3, 0b101), data);
  CHECK(s13.rows() == data.train[0].rows() + data.train[2].rows());
  CHECK(s13.features.topRows(data.train[0].features.rows()) == data.train[0].features);
  CHECK(s13.features.bottomRows(data.train[2].features.rows()) == data.train[2].features);
  CHECK(code_of([&] { assemble_training(SourceSet::empty(3), data); }) == ErrorCode::EmptySubset);
}

TEST_CASE("standardizer leaves constant columns unscaled") {
  MatrixXd x(3, 2);
  x << 1, 5, 2, 5, 3, 5;
  const auto st = Standardizer::fit(x);
  CHECK(st.scale()(1) == 1.0);
  const MatrixXd z = st.apply(x);
  CHECK(z.col(1).cwiseAbs().maxCoeff() == 0.0);
  CHECK(z.col(0).mean() == doctest::Approx(0.0));
}

TEST_CASE("logistic gradient matches central differences") {
  std::mt19937_64 gen(21);
  std::normal_distribution<double> n01;
  MatrixXd x(40, 4);
  VectorXd y(40);
  for (Eigen::Index i = 0; i < 40; ++i) {
    for (Eigen::Index j = 0; j < 4; ++j) x(i, j) = n01(gen);
    y(i) = (gen() & 1) ? 1.0 : 0.0;
  }
  const LogisticObjective obj(x, y, 0.3);
  for (int point = 0; point < 10; ++point) {
    VectorXd theta(obj.dimension());
    for (Eigen::Index j = 0; j < theta.size(); ++j) theta(j) = n01(gen);
    const VectorXd analytic = obj.gradient(theta);
    VectorXd numeric(theta.size());
    const double h = 1e-5;
    for (Eigen::Index j = 0; j < theta.size(); ++j) {
      VectorXd up = theta, down = theta;
      up(j) += h;
      down(j) -= h;
      numeric(j) = (obj.loss(up) - obj.loss(down)) / (2 * h);
    }
    CHECK((numeric - analytic).lpNorm<Eigen::Infinity>() <=
          1e-5 * analytic.lpNorm<Eigen::Infinity>());
  }
}

TEST_CASE("logistic fits separable data and degenerate labels") {
  MatrixXd x(20, 1);
  VectorXd y(20);
  for (int i = 0; i < 20; ++i) {
    x(i, 0) = (i - 9.5) / 5.0;
    y(i) = x(i, 0) > 0 ? 1.0 : 0.0;
  }
  TrainerConfig cfg;
  cfg.ridge = 0.0;
  cfg.max_iterations = 20000;
  const auto w = fit_logistic(x, y, cfg);
  const VectorXd pred = (w.decision(x).array() >= 0.0).cast<double>();
  CHECK(accuracy(pred, y) == 100.0);

  const VectorXd zeros = VectorXd::Zero(20);
  const auto w0 = fit_logistic(x, zeros, TrainerConfig{});
  const VectorXd p0 = (w0.decision(x).array() >= 0.0).cast<double>();
  CHECK(p0.sum() == 0.0);
  CHECK(sigmoid(w0.decision(x).maxCoeff()) < 0.5);

  CHECK(code_of([&] { fit_logistic(x, VectorXd::Constant(20, 2.0), cfg); }) ==
        ErrorCode::NonBinaryLabels);
}

TEST_CASE("linear trainer closed forms") {
  std::mt19937_64 gen(5);
  std::normal_distribution<double> n01;
  MatrixXd x(50, 3);
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < 3; ++j) x(i, j) = n01(gen);
  }
  const VectorXd truth = vec({1.5, -2.0, 0.25});
  const VectorXd y = x * truth;
  const VectorXd w = fit_linear(x, y, 0.0);
  CHECK((w - truth).lpNorm<Eigen::Infinity>() < 1e-9);
  CHECK((x * w - y).squaredNorm() / 50.0 <= 1e-10);

  // Residuals are orthogonal to the columns.
  VectorXd noisy = y;
  for (Eigen::Index i = 0; i < noisy.size(); ++i) noisy(i) += n01(gen);
  const VectorXd wn = fit_linear(x, noisy, 0.0);
  CHECK((x.transpose() * (noisy - x * wn)).lpNorm<Eigen::Infinity>() <= 1e-8);

  // Orthonormal columns give w = X'y.
  const Eigen::HouseholderQR<MatrixXd> qr(x);
  const MatrixXd q = qr.householderQ() * MatrixXd::Identity(50, 3);
  const VectorXd wq = fit_linear(q, noisy, 0.0);
  CHECK((wq - q.transpose() * noisy).lpNorm<Eigen::Infinity>() < 1e-10);

  CHECK(fit_linear(x, y, 1e9).norm() <= 1e-6);

  MatrixXd dup(4, 2);
  dup << 1, 2, 2, 4, 3, 6, 4, 8;
  CHECK(code_of([&] { fit_linear(dup, vec({1, 2, 3, 4}), 0.0); }) == ErrorCode::SingularSystem);
  CHECK(fit_linear(dup, vec({1, 2, 3, 4}), 1e-6).allFinite());
}

TEST_CASE("accuracy") {
  CHECK(accuracy(vec({1, 0, 1}), vec({1, 1, 1})) == doctest::Approx(200.0 / 3.0).epsilon(1e-15));
  CHECK(accuracy(vec({1, 0}), vec({1, 0})) == 100.0);
  CHECK(accuracy(vec({1, 0}), vec({0, 1})) == 0.0);
  CHECK(code_of([] { accuracy(VectorXd(), VectorXd()); }) == ErrorCode::EmptyInput);
}

TEST_CASE("tpr gap") {
  // group 0 positives predicted [1,0], group 1 positives predicted [1,1].
  const VectorXd truth = vec({1, 1, 1, 1, 0});
  const VectorXd pred = vec({1, 0, 1, 1, 1});
  const VectorXd group = vec({0, 0, 1, 1, 0});
  CHECK(tpr_gap(pred, truth, group) == -0.5);
  CHECK(tpr_gap(truth, truth, group) == 0.0);
  CHECK(tpr_gap(vec({1, 1, 0, 0}), vec({1, 1, 1, 1}), vec({0, 0, 1, 1})) == 1.0);
  CHECK(code_of([] { tpr_gap(vec({1, 0}), vec({1, 0}), vec({0, 1})); }) == ErrorCode::NoPositives);
}

TEST_CASE("fairness and regression gains") {
  CHECK(fairness_gain(80, 0, 37) == 80);
  CHECK(fairness_gain(80, -0.5, 10) == 75);
  CHECK(fairness_gain(99, 1, 10) == 100);
  CHECK(fairness_gain(5, -1, 10) == 0);
  CHECK(mse(vec({1, 2}), vec({1, 2})) == 0.0);
  CHECK(mse(vec({3, 4, 5}), vec({1, 2, 3})) == 4.0);
  CHECK(mse(vec({1, 3}), vec({2, 2})) == 1.0);
  CHECK(regression_gain(0.0, 2.0) == 100.0);
  CHECK(regression_gain(2.0, 2.0) == 0.0);
  CHECK(regression_gain(0.5, 2.0) == 75.0);
  CHECK(regression_gain(5.0, 2.0) == 0.0);
  CHECK(code_of([] { regression_gain(1.0, 0.0); }) == ErrorCode::ZeroBaseline);
}

TEST_CASE("oracle memoizes and counts misses") {
  auto oracle = testing::table_oracle(3, testing::three_source_profits());
  const auto ab = SourceSet::from_mask(3, 0b011);
  const auto first = oracle.evaluate(ab);
  CHECK(oracle.explored() == 1);
  CHECK(oracle.evaluate(ab) == first);
  CHECK(oracle.explored() == 1);
  CHECK(oracle.cache().hits() == 1);
  CHECK(first.profit == first.gain);
  CHECK(code_of([&] { oracle.evaluate(SourceSet::empty(3)); }) == ErrorCode::EmptySubset);
}

TEST_CASE("oracle agrees with the fixture table") {
  const auto table = testing::three_source_profits();
  auto oracle = testing::table_oracle(3, table);
  for (std::uint64_t mask = 1; mask < 8; ++mask) {
    CHECK(oracle.profit(SourceSet::from_mask(3, mask)) == table[mask]);
  }
  CHECK(oracle.explored() == 7);
  CHECK(oracle.best_evaluated()->subset.mask() == 0b011);
}

TEST_CASE("oracle costs use singleton gains and count them as explored") {
  auto values = testing::three_source_profits();
  values[1] = 76;
  values[2] = 77;
  values[3] = 80;
  Oracle oracle(std::make_shared<TableGain>(3, values), CostModel{});
  const auto b = oracle.evaluate(SourceSet::from_mask(3, 0b011));
  CHECK(b.gain == 80);
  CHECK(b.cost == doctest::Approx(0.13).epsilon(1e-12));
  CHECK(b.profit == b.gain - b.cost);
  CHECK(oracle.explored() == 3);
  CHECK(oracle.individual_cost(SourceId{0}) == doctest::Approx(0.06).epsilon(1e-12));
}

TEST_CASE("oracle budget and warm store") {
  const auto table = testing::three_source_profits();
  auto warm = std::make_shared<EvalCache>();
  {
    auto full = testing::table_oracle(3, table);
    for (std::uint64_t mask = 1; mask < 8; ++mask) full.evaluate(SourceSet::from_mask(3, mask));
    for (const auto& [s, v] : full.cache().entries()) warm->store(s, v);
  }
  std::atomic<int> calls{0};
  auto counting = std::make_shared<FunctionGain>(3, [&](const SourceSet& s) {
    ++calls;
    return table[s.mask()];
  });
  Oracle oracle(counting, CostModel::free());
  oracle.set_warm_store(warm);
  CHECK(oracle.profit(SourceSet::from_mask(3, 5)) == 14);
  CHECK(calls == 0);
  CHECK(oracle.explored() == 1);

  oracle.set_budget(2);
  oracle.profit(SourceSet::from_mask(3, 6));
  CHECK(code_of([&] { oracle.profit(SourceSet::from_mask(3, 7)); }) == ErrorCode::BudgetExceeded);
  CHECK(oracle.profit(SourceSet::from_mask(3, 5)) == 14);
}

TEST_CASE("eval cache persists bit-exactly") {
  testing::TempDir dir("cache");
  auto oracle = testing::table_oracle(3, {0, 0.1, 1.0 / 3.0, 2.0 / 7.0, 1e-17, 5, 6, 7});
  for (std::uint64_t mask = 1; mask < 8; ++mask) oracle.evaluate(SourceSet::from_mask(3, mask));
  oracle.cache().save(dir / "cache.txt");
  EvalCache loaded;
  loaded.load(dir / "cache.txt", 3);
  CHECK(loaded.fingerprint() == oracle.cache().fingerprint());
  CHECK(loaded.size() == 7);
}

TEST_CASE("trained gain is deterministic with a fixed test set") {
  auto data = std::make_shared<const SplitDataset>(split_sources(concept_sources(4, 60, 2), 0.25, 3));
  TaskSpec task;
  const auto before = data->test_fingerprint();
  auto m1 = std::make_shared<TrainedModelGain>(data, task);
  auto m2 = std::make_shared<TrainedModelGain>(data, task);
  Oracle o1(m1, CostModel::free());
  Oracle o2(m2, CostModel{});
  for (std::uint64_t mask = 1; mask < 16; ++mask) {
    const auto s = SourceSet::from_mask(4, mask);
    const auto a = o1.evaluate(s);
    const auto b = o2.evaluate(s);
    CHECK(a.gain == b.gain);
    CHECK((a.gain >= 0.0 && a.gain <= 100.0));
    CHECK(b.cost >= 0.0);
  }
  CHECK(data->test_fingerprint() == before);
  // Noise-free concept: training on everything should classify well.
  CHECK(o1.gain(SourceSet::full(4)) > 90.0);
}

TEST_CASE("fairness task without positives in a group scores the worst gap") {
  auto sources = concept_sources(2, 40, 8);
  for (auto& s : sources) {
    for (Eigen::Index i = 0; i < s.data.labels.size(); ++i) {
      if ((*s.data.sensitive)(i) == 1.0) s.data.labels(i) = 0.0;
    }
  }
  auto data = std::make_shared<const SplitDataset>(split_sources(sources, 0.25, 0));
  TaskSpec task;
  task.kind = TaskKind::Fairness;
  task.sensitive_column = "a";
  TaskSpec plain = task;
  plain.kind = TaskKind::Classification;
  plain.sensitive_column.reset();
  const TrainedModelGain fair(data, task);
  const TrainedModelGain acc(data, plain);
  const auto s = SourceSet::full(2);
  CHECK(fair.gain(s) == std::clamp(acc.gain(s) - 10.0, 0.0, 100.0));
  CHECK(fair.undefined_tpr_count() == 1);
}

TEST_CASE("regression gain against the mean predictor") {
  std::mt19937_64 gen(4);
  std::normal_distribution<double> n01;
  std::vector<RawSource> sources;
  for (int s = 0; s < 3; ++s) {
    RawSource src{"r" + std::to_string(s), {}};
    src.data.features.resize(30, 2);
    src.data.labels.resize(30);
    for (int i = 0; i < 30; ++i) {
      src.data.features(i, 0) = n01(gen);
      src.data.features(i, 1) = n01(gen);
      src.data.labels(i) = 3.0 + 2.0 * src.data.features(i, 0) - src.data.features(i, 1);
    }
    sources.push_back(std::move(src));
  }
  auto data = std::make_shared<const SplitDataset>(split_sources(sources, 0.2, 1));
  TaskSpec task;
  task.kind = TaskKind::Regression;
  task.trainer = TrainerConfig::linear_defaults();
  const TrainedModelGain model(data, task);
  CHECK(model.gain(SourceSet::full(3)) == doctest::Approx(100.0).epsilon(1e-6));

  TaskSpec wrong = task;
  wrong.trainer = TrainerConfig::logistic_defaults();
  CHECK(code_of([&] { TrainedModelGain(data, wrong); }) == ErrorCode::ConfigError);
}
