#pragma once

#include <stdexcept>
#include <string>

namespace prelie {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define PRELIE_DEFINE_ERROR(Name)                                             \
    class Name : public Error {                                               \
    public:                                                                   \
        explicit Name(const std::string& what) : Error(#Name, what) {}        \
    }

// Structural problems with the input (shapes, fields).
PRELIE_DEFINE_ERROR(ShapeError);
PRELIE_DEFINE_ERROR(DimensionMismatch);
PRELIE_DEFINE_ERROR(NotSquare);
PRELIE_DEFINE_ERROR(FieldMismatch);
PRELIE_DEFINE_ERROR(InvalidScalar);
PRELIE_DEFINE_ERROR(InfiniteField);

// Mathematical preconditions that were checked and do not hold.
PRELIE_DEFINE_ERROR(DivisionByZero);
PRELIE_DEFINE_ERROR(Singular);
PRELIE_DEFINE_ERROR(NotAdmissible);
PRELIE_DEFINE_ERROR(NotCocycle);
PRELIE_DEFINE_ERROR(NoUnit);
PRELIE_DEFINE_ERROR(UnverifiedCocycle);
PRELIE_DEFINE_ERROR(UnverifiedOperator);
PRELIE_DEFINE_ERROR(UnverifiedNS);
PRELIE_DEFINE_ERROR(UnverifiedSeries);
PRELIE_DEFINE_ERROR(UnverifiedAlgebra);
PRELIE_DEFINE_ERROR(UnverifiedRepresentation);

// Resource limits.
PRELIE_DEFINE_ERROR(BudgetExceeded);

#undef PRELIE_DEFINE_ERROR

}  // namespace prelie
