/*
 * Copyright 2026 The qalg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once
#include <stdexcept>
#include <string>

namespace qalg {

/// Base class for every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid or incomplete run configuration (unknown system, missing charge).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Inputs outside the domain of a formula.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A numerical check failed; carries the offending magnitude.
class ResidualError : public Error {
public:
    ResidualError(const std::string& msg, double residual) :
      Error(msg), m_residual_(residual) {}

    double residual() const noexcept { return m_residual_; }

private:
    double m_residual_;
};

} // namespace qalg
