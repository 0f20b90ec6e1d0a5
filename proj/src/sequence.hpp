#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fracspec {

/// Non-empty sequence of finite real samples.
class RealSequence {
 public:
  explicit RealSequence(std::vector<double> samples);

  std::size_t size() const noexcept { return samples_.size(); }
  std::span<const double> samples() const noexcept { return samples_; }
  double operator[](std::size_t i) const noexcept { return samples_[i]; }

  friend bool operator==(const RealSequence&, const RealSequence&) = default;

 private:
  std::vector<double> samples_;
};

}  // namespace fracspec
