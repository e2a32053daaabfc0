#pragma once

#include <stdexcept>
#include <string>

namespace spincat {

/// Two values living in different spin spaces were combined.
class SpaceMismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The superposition normalization 2 + 2 cos(theta) xi^{2j} collapsed below
/// threshold, so the state is undefined as written.
class DegenerateSuperpositionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// g2 requested for a state with vanishing <J+ J->.
class UndefinedCorrelationError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A Hermitian-only operation received a non-Hermitian operator.
class NonHermitianError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A quantity violated a structural guarantee by more than roundoff can
/// explain (e.g. variance below -1e-12). Indicates a bug, not bad input.
class InternalConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A closed form was evaluated at a pole of its printed expression.
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A scan found no sign change to bracket.
class NoCrossingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace spincat
