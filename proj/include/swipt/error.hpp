// SPDX-License-Identifier: Apache-2.0
//
// swipt-ac: robust SWIPT power-splitting receiver with AC computing
// Copyright (C) 2026 The swipt-ac authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>

namespace swipt {

enum class ErrorCode {
    domain,             // argument outside the mathematical domain of an operation
    infeasible_target,  // harvest target at or above the saturation level
    config,             // malformed or invalid configuration
    io,                 // file could not be read or written
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string &what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void throw_domain(const std::string &what) { throw Error(ErrorCode::domain, what); }

[[noreturn]] inline void throw_config(const std::string &what) { throw Error(ErrorCode::config, what); }

[[noreturn]] inline void throw_io(const std::string &what) { throw Error(ErrorCode::io, what); }

} // namespace swipt
