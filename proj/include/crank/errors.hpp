#pragma once

#include <stdexcept>
#include <string>

namespace crank {

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct RangeError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// work would exceed a hard cap (enumeration size, search length)
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// numerics too close to a singularity to trust; distance is how close
struct ConditioningError : std::runtime_error {
  ConditioningError(const std::string& what, double dist)
      : std::runtime_error(what), distance(dist) {}
  double distance;
};

}  // namespace crank
