// Copyright 2026 The homewheel Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace homewheel {

// Base class for every error the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidAxis : public Error {
public:
    using Error::Error;
};

class InvalidParameter : public Error {
public:
    using Error::Error;
};

// A servo angle outside its closed range reached an operation that requires a valid state.
class RangeError : public Error {
public:
    using Error::Error;
};

// simulate() was handed a trajectory that breaks time order, range, or rate constraints.
class ValidationFailure : public Error {
public:
    using Error::Error;
};

// The requested gait period cannot be met at the configured servo rates.
class RateInfeasible : public Error {
public:
    using Error::Error;
};

class ZeroDistance : public Error {
public:
    using Error::Error;
};

// Malformed trajectory, trace, or config text. line/column are 1-based; 0 when unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(what), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace homewheel
