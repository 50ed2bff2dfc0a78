#pragma once

#include <stdexcept>
#include <string>

namespace paralie {

/// Structure constants that do not define a Lie algebra: either not
/// antisymmetric or failing the Jacobi identity.
class NotALieAlgebra : public std::invalid_argument {
public:
    NotALieAlgebra(const std::string& what, double defect)
        : std::invalid_argument(what), defect_(defect) {}
    double defect() const noexcept { return defect_; }

private:
    double defect_;
};

/// A PhiBasisStructure that violates one of its defining identities.
class InvalidStructure : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace paralie
