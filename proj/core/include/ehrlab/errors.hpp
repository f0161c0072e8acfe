#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ehrlab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Ragged point lists, mismatched ambient dimensions, empty input.
struct DimensionError : Error {
  using Error::Error;
};

/// Raised by operations that require dim(P) == ambient dimension.
struct NotFullDimensionalError : Error {
  using Error::Error;
};

/// Malformed JSON, rational strings, or schema violations.
struct ParseError : Error {
  using Error::Error;
};

struct InsufficientSamplesError : Error {
  InsufficientSamplesError(std::int64_t residue, std::size_t have, std::size_t need)
      : Error("insufficient samples in residue class " + std::to_string(residue) +
              " mod period: have " + std::to_string(have) + ", need " + std::to_string(need)),
        residue(residue), have(have), need(need) {}
  std::int64_t residue;
  std::size_t have;
  std::size_t need;
};

/// An interpolated quasi-polynomial failed to reproduce a held-out count.
/// Always indicates a geometry or period-bound defect, never expected input.
struct ValidationMismatchError : Error {
  using Error::Error;
};

/// The leading Ehrhart coefficient came out non-constant.
struct PeriodViolationError : Error {
  using Error::Error;
};

struct ShiftSearchError : Error {
  ShiftSearchError(std::string msg, std::vector<std::int64_t> tried)
      : Error(std::move(msg)), last_tried(std::move(tried)) {}
  std::vector<std::int64_t> last_tried;
};

/// Supplied shift parameters fail the designated facet checks.
struct FacetValidationError : Error {
  using Error::Error;
};

}  // namespace ehrlab
