#include "srcsel/core/cost.hpp"

#include <algorithm>
#include <string>

#include "srcsel/core/error.hpp"

namespace srcsel {

void CostModel::validate() const {
  if (t < 0 || t > 2) throw Error(ErrorCode::InvalidArgument, "cost exponent t must be 0, 1 or 2");
  if (c < 0.0) throw Error(ErrorCode::InvalidArgument, "cost scale c must be non-negative");
}

double cost_of_source(double individual_gain, const CostModel& model) {
  if (model.zero_cost) return 0.0;
  const double base = model.a * individual_gain + model.b;
  double raw = model.c;
  for (int i = 0; i < model.t; ++i) raw *= base;
  return std::max(0.0, raw);
}

double cost_of_subset(const SourceSet& s, const IndividualGains& gains, const CostModel& model) {
  double total = 0.0;
  s.for_each([&](SourceId id) {
    if (model.zero_cost) return;
    if (id.index >= gains.size() || !gains[id.index]) {
      throw Error(ErrorCode::MissingGain,
                  "no individual gain recorded for source " + std::to_string(id.index));
    }
    total += cost_of_source(*gains[id.index], model);
  });
  return total;
}

ProfitBreakdown profit(double gain, double cost) { return ProfitBreakdown{gain, cost, gain - cost}; }

}  // namespace srcsel
