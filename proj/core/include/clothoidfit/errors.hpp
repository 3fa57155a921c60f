// Copyright 2026 The clothoidfit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CLOTHOIDFIT_ERRORS_HPP
#define CLOTHOIDFIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace clothoidfit {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of a function: a non-finite value,
/// an order out of range or another violated precondition.
class DomainError : public Error {
public:
    using Error::Error;
};

/// The two Hermite endpoints coincide, so no chord direction exists.
class DegenerateInputError : public Error {
public:
    using Error::Error;
};

/// Chord-frame angles phi0 = -phi1 = +-pi. The interpolating clothoid does
/// not exist there (its length grows without bound as the corner is
/// approached).
class ExcludedConfigurationError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Newton iteration did not reach the residual tolerance.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double last_iterate, int iterations)
        : Error(what), last_iterate_(last_iterate), iterations_(iterations) {}

    double last_iterate() const noexcept { return last_iterate_; }
    int iterations() const noexcept { return iterations_; }

private:
    double last_iterate_;
    int iterations_;
};

/// g'(A) vanished and no sign change of g could be bracketed either.
class SingularDerivativeError : public ConvergenceError {
public:
    using ConvergenceError::ConvergenceError;
};

/// A computed root does not give a positive length; indicates a wrong root.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

} // namespace clothoidfit

#endif // CLOTHOIDFIT_ERRORS_HPP
