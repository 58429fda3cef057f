#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyper {

enum class ErrorKind {
    NotAGroup,
    EmptyHyperproduct,
    NonCommutative,
    NonAssociative,
    NonDistributive,
    SignRuleViolation,
    EmptyOperand,
    NoIdentity,
    NotAHyperideal,
    ImproperIdeal,
    BadQuery,
    AbsUndefined,
    NoMaximalIdeal,
    BudgetExceeded,
    DegreeOverflow,
    IllDefinedQuotient,
    NotAnEquivalence,
    NotClosed,
    PreconditionUnmet,
    UnknownTheorem,
    BadSpec,
    Parse,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {
    }

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace hyper
