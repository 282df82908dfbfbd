#include "cyclebuy/baselines.hpp"

#include <stdexcept>

namespace cyclebuy {

NaiveThresholdStrategy::NaiveThresholdStrategy(double threshold) : threshold_(threshold) {
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw std::invalid_argument("naive-threshold: threshold must lie in [0, 1]");
  }
}

}  // namespace cyclebuy
