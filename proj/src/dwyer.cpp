#include "lpg/dwyer.hpp"

#include <stdexcept>

namespace lpg {

DwyerSeries dwyer_quotients(const LPresentation& L, int c_max, const NqBudget& budget) {
  if (!L.invariant()) throw std::invalid_argument("dwyer_quotients requires an invariant L-presentation");
  if (c_max < 1) throw std::invalid_argument("c_max must be positive");
  Deadline dl(budget.max_seconds);
  NqEngine eng(L);
  DwyerSeries out;
  for (int c = 1; c <= c_max; ++c) {
    if (dl.expired()) {
      out.partial = true;
      out.message = "time limit reached before entry " + std::to_string(c);
      break;
    }
    try {
      auto step = eng.extend(true, dl, budget.max_tails);
      out.entries.push_back(*step.dwyer);
    } catch (const BudgetExceeded& e) {
      out.partial = true;
      out.message = e.what();
      break;
    }
  }
  return out;
}

}  // namespace lpg
