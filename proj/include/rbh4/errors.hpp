#pragma once

#include <stdexcept>
#include <string>

namespace rbh4 {

/// Base class for every error raised by the library. `kind()` is the stable
/// machine-readable name used in CLI messages and reports.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define RBH4_DEFINE_ERROR(Name)                                                \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& what) : Error(#Name, what) {}         \
    };

RBH4_DEFINE_ERROR(FieldMismatch)
RBH4_DEFINE_ERROR(DivisionByZero)
RBH4_DEFINE_ERROR(InvalidModulus)
RBH4_DEFINE_ERROR(ParseError)
RBH4_DEFINE_ERROR(DimMismatch)
RBH4_DEFINE_ERROR(Singular)
RBH4_DEFINE_ERROR(InvalidParams)
RBH4_DEFINE_ERROR(InvalidDim)
RBH4_DEFINE_ERROR(NotASubalgebra)
RBH4_DEFINE_ERROR(Unclassifiable)
RBH4_DEFINE_ERROR(DomainViolation)
RBH4_DEFINE_ERROR(WeightMismatch)
RBH4_DEFINE_ERROR(BadReduction)
RBH4_DEFINE_ERROR(Infeasible)
RBH4_DEFINE_ERROR(UnknownFamily)

#undef RBH4_DEFINE_ERROR

}  // namespace rbh4
