#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace liegeom {

enum class ErrorKind {
    ShapeMismatch,
    DivisionByZero,
    NonFinite,
    DegenerateForm,
    NotSymmetric,
    NotAntisymmetric,
    NotLieAlgebra,
    NotUnimodular,
    WrongDimension,
    DependentVectors,
    BadNorm,
    NoExactRoot,
    DegenerateRestriction,
    NotSubalgebraInvariant,
    WrongIsotropyDimension,
    WrongIsotropyType,
    MissingForm,
    PreconditionViolated,
    EmptyCatalog,
    DegenerateSample,
};

std::string_view to_string(ErrorKind kind);

// All library failures surface as this exception; `kind()` is the typed tag.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace liegeom
