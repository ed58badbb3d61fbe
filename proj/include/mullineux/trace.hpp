#pragma once

#include <string>
#include <vector>

#include "mullineux/charges.hpp"

namespace mullineux {

/// One named step of a computation with the rendered state it produced.
struct TraceStep {
  std::string label;
  Multicharge charge;
  std::string state;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

using Trace = std::vector<TraceStep>;

}  // namespace mullineux
