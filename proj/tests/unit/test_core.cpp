#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "srcsel/core/catalog.hpp"
#include "srcsel/core/cost.hpp"
#include "srcsel/core/error.hpp"
#include "srcsel/core/format.hpp"
#include "srcsel/core/parallel.hpp"
#include "srcsel/core/random.hpp"
#include "srcsel/core/source_set.hpp"

using namespace srcsel;

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

}  // namespace

TEST_CASE("source set basics") {
  const auto s = SourceSet::from_ids(4, {SourceId{0}, SourceId{2}});
  CHECK(s.size() == 2);
  CHECK(s.contains(SourceId{2}));
  CHECK_FALSE(s.contains(SourceId{1}));
  CHECK(s.to_hex() == "5");
  CHECK(SourceSet::from_hex(4, "5") == s);
  CHECK(SourceSet::empty(4).to_hex() == "0");
  CHECK(s.complement() == SourceSet::from_ids(4, {SourceId{1}, SourceId{3}}));
  CHECK(SourceSet::full(4).mask() == 0xf);
  CHECK(s.with(SourceId{1}).mask() == 0x7);
  CHECK(s.without(SourceId{0}).mask() == 0x4);
}

TEST_CASE("source sets of different catalogs do not mix") {
  const auto a = SourceSet::full(3);
  const auto b = SourceSet::full(4);
  CHECK(code_of([&] { (void)(a | b); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { (void)a.contains(SourceId{3}); }) == ErrorCode::InvalidArgument);
  CHECK(a != b);
}

TEST_CASE("source sets wider than one word") {
  const auto s = SourceSet::from_ids(130, {SourceId{0}, SourceId{64}, SourceId{129}});
  CHECK(s.size() == 3);
  CHECK(SourceSet::from_hex(130, s.to_hex()) == s);
  CHECK(s.to_hex() == "20000000000000001" "0000000000000001");
  CHECK(s.complement().size() == 127);
  std::vector<std::size_t> seen;
  s.for_each([&](SourceId id) { seen.push_back(id.index); });
  CHECK(seen == std::vector<std::size_t>{0, 64, 129});
}

TEST_CASE("set algebra holds on random masks") {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t m = 1 + gen() % 70;
    auto random_set = [&] {
      std::vector<SourceId> ids;
      for (std::size_t i = 0; i < m; ++i) {
        if (gen() & 1) ids.push_back(SourceId{i});
      }
      return SourceSet::from_ids(m, ids);
    };
    const auto a = random_set();
    const auto b = random_set();
    CHECK((a | b).size() + (a & b).size() == a.size() + b.size());
    CHECK(((a - b) | (a & b)) == a);
    CHECK(((a - b) & b).is_empty());
    CHECK((a | a.complement()) == SourceSet::full(m));
    CHECK(SourceSet::from_hex(m, a.to_hex()) == a);
    for (const auto id : b.members()) CHECK((a | b).contains(id));
  }
}

TEST_CASE("canonical order prefers fewer members, then the smaller mask") {
  const auto ab = SourceSet::from_mask(3, 0b011);
  const auto c = SourceSet::from_mask(3, 0b100);
  const auto a = SourceSet::from_mask(3, 0b001);
  CHECK(canonical_less(c, ab));
  CHECK(canonical_less(a, c));
  CHECK_FALSE(canonical_less(a, a));
}

TEST_CASE("catalog") {
  SourceCatalog cat({{"CA", 10}, {"TX", 20}, {"NY", 5}});
  CHECK(cat.size() == 3);
  CHECK(cat.at(SourceId{1}).name == "TX");
  CHECK(cat.find("NY")->index == 2);
  CHECK_FALSE(cat.find("WA").has_value());
  CHECK(cat.describe(SourceSet::from_mask(3, 0b101)) == "{CA,NY}");
  CHECK(code_of([] { SourceCatalog({{"a", 1}, {"a", 2}}); }) == ErrorCode::DuplicateSourceName);
}

TEST_CASE("cost of one source") {
  CostModel model;
  CHECK(cost_of_source(76, model) == doctest::Approx(0.06).epsilon(1e-12));
  model.t = 2;
  CHECK(cost_of_source(76, model) == doctest::Approx(0.36).epsilon(1e-12));
  model.t = 1;
  CHECK(cost_of_source(50, model) == 0.0);
  CHECK(cost_of_source(76, CostModel::free()) == 0.0);
  model.t = 3;
  CHECK(code_of([&] { model.validate(); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("worked example subset costs and profits") {
  const CostModel model;
  IndividualGains gains(8);
  gains[1] = 76;
  gains[4] = 77;
  gains[7] = 76;
  const auto s17 = SourceSet::from_ids(8, {SourceId{1}, SourceId{7}});
  const auto s47 = SourceSet::from_ids(8, {SourceId{4}, SourceId{7}});
  const double c17 = cost_of_subset(s17, gains, model);
  const double c47 = cost_of_subset(s47, gains, model);
  CHECK(std::abs(c17 - 0.12) <= 1e-9);
  CHECK(std::abs(c47 - 0.13) <= 1e-9);
  CHECK(std::abs(profit(77.46, c17).profit - 77.34) <= 1e-9);
  CHECK(std::abs(profit(76.28, c47).profit - 76.15) <= 1e-9);
  CHECK(cost_of_subset(SourceSet::empty(8), gains, model) == 0.0);
  CHECK(code_of([&] {
          cost_of_subset(SourceSet::singleton(8, SourceId{0}), gains, model);
        }) == ErrorCode::MissingGain);
}

TEST_CASE("subset cost is additive over disjoint parts") {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> g(60, 100);
  const CostModel model{2, 1.0, -70.0, 0.01, false};
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 10;
    IndividualGains gains(m);
    for (auto& x : gains) x = g(gen);
    const auto a = SourceSet::from_mask(m, gen() & 0x3ff);
    const auto b = SourceSet::from_mask(m, gen() & 0x3ff) - a;
    CHECK(cost_of_subset(a | b, gains, model) ==
          doctest::Approx(cost_of_subset(a, gains, model) + cost_of_subset(b, gains, model)));
  }
}

TEST_CASE("profit is gain minus cost without re-rounding") {
  const auto p = profit(0.3, 0.1);
  CHECK(p.profit == 0.3 - 0.1);
  CHECK(profit(42.5, 0.0).profit == 42.5);
  CHECK(profit(80, 0.1).profit > profit(80, 0.2).profit);
}

TEST_CASE("rng is reproducible and streams differ") {
  Rng a(11), b(11), c(11, 1);
  for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
  Rng d(11);
  CHECK(d.next() != c.next());
  Rng e(5);
  for (int i = 0; i < 1000; ++i) {
    const double u = e.uniform01();
    CHECK((u >= 0.0 && u < 1.0));
    CHECK(e.index(7) < 7);
  }
  std::vector<int> v = {0, 1, 2, 3, 4, 5};
  e.shuffle(std::span<int>(v));
  std::sort(v.begin(), v.end());
  CHECK(v == std::vector<int>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("real formatting round-trips") {
  std::mt19937_64 gen(1);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 1000; ++i) {
    const double x = u(gen);
    CHECK(parse_real(format_real(x)) == x);
  }
  CHECK(parse_real(" 2.5 ") == 2.5);
  CHECK(code_of([] { parse_real("2.5x"); }) == ErrorCode::InvalidArgument);
  CHECK(parse_integer("-3") == -3);
  CHECK(split("a,,b", ',') == std::vector<std::string>{"a", "", "b"});
}

TEST_CASE("parallel_for covers the range and rethrows") {
  std::vector<int> hits(1000, 0);
  parallel_for(0, hits.size(), 4, [&](std::size_t i) { hits[i] += 1; });
  CHECK(std::count(hits.begin(), hits.end(), 1) == 1000);
  CHECK_THROWS_AS(parallel_for(0, 100, 3,
                               [](std::size_t i) {
                                 if (i == 42) throw std::runtime_error("boom");
                               }),
                  std::runtime_error);
}
