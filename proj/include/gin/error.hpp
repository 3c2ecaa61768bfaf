#pragma once

#include <stdexcept>
#include <string>

namespace gin {

/// Caller violated an operation's precondition (bad input, mismatched sizes).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A linear-algebra step found fewer independent columns than required.
class RankDeficiency : public std::runtime_error {
 public:
  RankDeficiency(const std::string& what, std::size_t achieved)
      : std::runtime_error(what), achieved_rank(achieved) {}
  std::size_t achieved_rank;
};

}  // namespace gin
