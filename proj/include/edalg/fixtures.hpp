#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "edalg/relation.hpp"

namespace edalg {

/// Read-only embedded input data.
struct Fixture {
  std::string name;
  std::string description;
  std::optional<PeriodVector> periods;
  std::optional<std::string> expression;  // text form, used when there are no periods
};

const std::vector<Fixture>& fixtures();
/// Throws std::invalid_argument naming the known fixtures.
const Fixture& fixture(std::string_view name);
BracketExpr fixture_expression(const Fixture& f);

}  // namespace edalg
