#include "goint/errors.hpp"

#include <utility>

namespace goint {

ConstructionError::ConstructionError(std::string precondition, const std::string& detail)
    : Error(precondition + ": " + detail), precondition_(std::move(precondition)) {}

}  // namespace goint
