#include "srcsel/oracle/oracle.hpp"

#include "srcsel/core/error.hpp"

namespace srcsel {

Oracle::Oracle(std::shared_ptr<const GainModel> model, CostModel costs,
               std::shared_ptr<EvalCache> cache)
    : model_(std::move(model)),
      costs_(costs),
      cache_(cache ? std::move(cache) : std::make_shared<EvalCache>()) {
  if (!model_) throw Error(ErrorCode::InvalidArgument, "oracle needs a gain model");
  costs_.validate();
}

ProfitBreakdown Oracle::evaluate(const SourceSet& subset) {
  if (subset.is_empty()) throw Error(ErrorCode::EmptySubset, "the empty subset has no profit");
  if (subset.width() != source_count()) {
    throw Error(ErrorCode::InvalidArgument, "subset width does not match the catalog");
  }
  ProfitBreakdown value;
  if (auto hit = cache_->lookup(subset)) {
    value = *hit;
  } else {
    if (budget_ && cache_->size() >= *budget_) {
      throw Error(ErrorCode::BudgetExceeded,
                  "exploration budget of " + std::to_string(*budget_) + " evaluations reached");
    }
    value = compute(subset);
    cache_->store(subset, value);
  }
  note_candidate(subset, value);
  return value;
}

ProfitBreakdown Oracle::compute(const SourceSet& subset) {
  if (warm_) {
    if (auto known = warm_->peek(subset)) return *known;
  }
  double gain = 0.0;
  try {
    gain = model_->gain(subset);
  } catch (const Error& e) {
    throw Error(e.code(), "while evaluating subset " + subset.to_hex() + ": " + e.what());
  }
  if (costs_.zero_cost) return ::srcsel::profit(gain, 0.0);

  IndividualGains gains(source_count());
  if (subset.size() == 1) {
    gains[subset.members().front().index] = gain;
  } else {
    subset.for_each([&](SourceId id) {
      gains[id.index] = evaluate(SourceSet::singleton(source_count(), id)).gain;
    });
  }
  return ::srcsel::profit(gain, cost_of_subset(subset, gains, costs_));
}

double Oracle::individual_cost(SourceId id) {
  if (costs_.zero_cost) return 0.0;
  return evaluate(SourceSet::singleton(source_count(), id)).cost;
}

void Oracle::note_candidate(const SourceSet& subset, const ProfitBreakdown& value) {
  std::lock_guard lock(best_mu_);
  if (!best_ || value.profit > best_->breakdown.profit ||
      (value.profit == best_->breakdown.profit && canonical_less(subset, best_->subset))) {
    best_ = EvaluatedSubset{subset, value};
  }
}

std::optional<EvaluatedSubset> Oracle::best_evaluated() const {
  std::lock_guard lock(best_mu_);
  return best_;
}

void Oracle::reset_best() {
  std::lock_guard lock(best_mu_);
  best_.reset();
}

}  // namespace srcsel
