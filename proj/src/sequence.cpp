#include "sequence.hpp"

#include <cmath>
#include <string>

#include "errors.hpp"

namespace fracspec {

RealSequence::RealSequence(std::vector<double> samples) : samples_(std::move(samples)) {
  if (samples_.empty()) throw InvalidArgument("sequence must contain at least one sample");
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    if (!std::isfinite(samples_[i])) {
      throw InvalidArgument("sample " + std::to_string(i) + " is not finite");
    }
  }
}

}  // namespace fracspec
