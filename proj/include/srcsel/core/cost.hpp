#pragma once

#include <optional>
#include <vector>

#include "srcsel/core/source_set.hpp"

namespace srcsel {

// Acquisition cost of one source as a polynomial of its individual gain g:
//   cost(s) = (a*g + b)^t * c, clamped below at zero.
// `zero_cost` short-circuits every cost to 0.
struct CostModel {
  int t = 1;
  double a = 1.0;
  double b = -70.0;
  double c = 0.01;
  bool zero_cost = false;

  static CostModel free() {
    CostModel m;
    m.zero_cost = true;
    return m;
  }

  // Throws InvalidArgument when t is outside {0,1,2} or c < 0.
  void validate() const;
};

struct ProfitBreakdown {
  double gain = 0.0;
  double cost = 0.0;
  double profit = 0.0;

  friend bool operator==(const ProfitBreakdown&, const ProfitBreakdown&) = default;
};

// Individual gains indexed by SourceId; nullopt means "not measured yet".
using IndividualGains = std::vector<std::optional<double>>;

double cost_of_source(double individual_gain, const CostModel& model);

// Sum of member costs. Throws MissingGain if a member has no recorded gain.
double cost_of_subset(const SourceSet& s, const IndividualGains& gains, const CostModel& model);

ProfitBreakdown profit(double gain, double cost);

}  // namespace srcsel
