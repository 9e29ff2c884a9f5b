#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace modschwarz {

enum class ErrorKind {
  DivisionByNonUnit,
  DivisionByZero,
  NonUnitBase,
  NonvanishingInnerConstant,
  IncompatibleOffsets,
  IrrationalOffset,
  InsufficientOrder,
  UnsupportedWeight,
  OddExponent,
  InternalMismatch,
  InvalidC,
  RecipeInconsistent,
  InvalidRepresentation,
  PivotVanishes,
  LeadingCancellation,
  NotProportionalToDeltaPower,
  DegenerateDerivative,
  NotProportional,
  ConstantMismatch,
  OdeResidualNonzero,
  InvalidParameters,
  NotUpperHalfPlane,
  OutsideDisk,
  NonFiniteValue,
  ClosedFormRequiresReducedN,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByNonUnit: return "DivisionByNonUnit";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NonUnitBase: return "NonUnitBase";
    case ErrorKind::NonvanishingInnerConstant: return "NonvanishingInnerConstant";
    case ErrorKind::IncompatibleOffsets: return "IncompatibleOffsets";
    case ErrorKind::IrrationalOffset: return "IrrationalOffset";
    case ErrorKind::InsufficientOrder: return "InsufficientOrder";
    case ErrorKind::UnsupportedWeight: return "UnsupportedWeight";
    case ErrorKind::OddExponent: return "OddExponent";
    case ErrorKind::InternalMismatch: return "InternalMismatch";
    case ErrorKind::InvalidC: return "InvalidC";
    case ErrorKind::RecipeInconsistent: return "RecipeInconsistent";
    case ErrorKind::InvalidRepresentation: return "InvalidRepresentation";
    case ErrorKind::PivotVanishes: return "PivotVanishes";
    case ErrorKind::LeadingCancellation: return "LeadingCancellation";
    case ErrorKind::NotProportionalToDeltaPower: return "NotProportionalToDeltaPower";
    case ErrorKind::DegenerateDerivative: return "DegenerateDerivative";
    case ErrorKind::NotProportional: return "NotProportional";
    case ErrorKind::ConstantMismatch: return "ConstantMismatch";
    case ErrorKind::OdeResidualNonzero: return "OdeResidualNonzero";
    case ErrorKind::InvalidParameters: return "InvalidParameters";
    case ErrorKind::NotUpperHalfPlane: return "NotUpperHalfPlane";
    case ErrorKind::OutsideDisk: return "OutsideDisk";
    case ErrorKind::NonFiniteValue: return "NonFiniteValue";
    case ErrorKind::ClosedFormRequiresReducedN: return "ClosedFormRequiresReducedN";
  }
  return "Unknown";
}

/// Every failure in the library is reported through this type. Checks that
/// locate a bad coefficient carry its index.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, std::optional<std::size_t> index = std::nullopt)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), index_(index) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> index_;
};

}  // namespace modschwarz
