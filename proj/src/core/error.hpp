// SPDX-License-Identifier: Apache-2.0
//
// rischan: RIS-aided channel estimation simulator
// Copyright (C) 2026 The rischan authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef RISCHAN_ERROR_HPP
#define RISCHAN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace rischan
{
    enum class ErrorCode
    {
        InvalidArgument = 1,
        DimensionMismatch,
        RankDeficient,
        Singular,
        Config,
        Io,
        Infeasible
    };

    class Error : public std::runtime_error
    {
    public:
        Error(ErrorCode code, const std::string &msg) : std::runtime_error(msg), code_(code) {}
        ErrorCode code() const noexcept { return code_; }

    private:
        ErrorCode code_;
    };

    [[noreturn]] inline void fail(ErrorCode code, const std::string &msg) { throw Error(code, msg); }
}

#endif
