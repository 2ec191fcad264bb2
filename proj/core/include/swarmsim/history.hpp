#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace swarmsim {

// Ring buffer of the most recent 2*memory_m recharge-attempt counts as
// broadcast by the base station. The buffer is twice the predictor window so
// each predictor can be scored on memory_m held-out points.
class AttendanceHistory {
 public:
  // initial is oldest-first and must contain exactly 2*memory_m entries.
  AttendanceHistory(int memory_m, const std::vector<int>& initial)
      : m_(memory_m), buf_(initial.size()), head_(0) {
    if (static_cast<int>(initial.size()) != 2 * memory_m)
      throw std::invalid_argument("attendance history must hold 2*memory_m entries");
    for (std::size_t i = 0; i < buf_.size(); ++i) buf_[i] = initial[initial.size() - 1 - i];
  }

  // i-th newest entry; at(0) is the latest broadcast.
  int at(std::size_t i) const { return buf_[(head_ + i) % buf_.size()]; }

  std::size_t size() const { return buf_.size(); }
  int memory_m() const { return m_; }

  // Appends the newest attendance count, evicting the oldest entry.
  void push(int attendance) {
    head_ = (head_ + buf_.size() - 1) % buf_.size();
    buf_[head_] = attendance;
  }

  // Contents newest-first, flattened for contiguous window access.
  std::vector<int> newest_first() const {
    std::vector<int> out(buf_.size());
    for (std::size_t i = 0; i < buf_.size(); ++i) out[i] = at(i);
    return out;
  }

 private:
  int m_;
  std::vector<int> buf_;  // buf_[(head_ + i) % size] = i-th newest
  std::size_t head_;
};

}  // namespace swarmsim
