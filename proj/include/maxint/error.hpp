#pragma once

#include <chrono>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace maxint {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
  using Error::Error;
};
class CapExceeded : public Error {
  using Error::Error;
};
class NodeCapExceeded : public CapExceeded {
  using CapExceeded::CapExceeded;
};
class Timeout : public Error {
  using Error::Error;
};
class NotAGroup : public Error {
  using Error::Error;
};
class NotNormal : public Error {
  using Error::Error;
};
class ParentMismatch : public Error {
  using Error::Error;
};
class PNotDividing : public Error {
  using Error::Error;
};
class TrivialGroup : public Error {
  using Error::Error;
};
class DegenerateGroup : public Error {
  using Error::Error;
};
class NotIrredundant : public Error {
  using Error::Error;
};
class NotAlmostSimple : public Error {
  using Error::Error;
};
class CoreNotTrivial : public Error {
  using Error::Error;
};

/// Wall-clock budget shared by a search. A default-constructed budget never expires.
class Budget {
 public:
  using clock = std::chrono::steady_clock;

  Budget() = default;
  explicit Budget(double seconds)
      : limited_(seconds > 0),
        deadline_(clock::now() + std::chrono::duration_cast<clock::duration>(
                                     std::chrono::duration<double>(seconds))) {}

  static Budget unlimited() { return Budget{}; }

  bool limited() const { return limited_; }

  /// Throws Timeout once the deadline has passed; the clock is read every 1024 calls.
  void tick(const char* what) const {
    if (!limited_) return;
    if ((++ticks_ & 1023u) != 0) return;
    check(what);
  }
  void check(const char* what) const {
    if (limited_ && clock::now() > deadline_)
      throw Timeout(std::string("budget exhausted in ") + what);
  }

 private:
  bool limited_ = false;
  clock::time_point deadline_{};
  mutable std::size_t ticks_ = 0;
};

}  // namespace maxint
