// Copyright 2026 The dad Authors
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
#include <string_view>

namespace dad {

// Reason codes for user-facing failures. The CLI prints them verbatim, so the
// spelling returned by to_string() is part of the command-line contract.
enum class ErrorCode {
  kInvalidArgument,
  kDomainMismatch,
  kInvalidPermutation,
  kNotDerangement,
  kEmptySet,
  kDuplicatePermutation,
  kNotInvariant,
  kVertexOutOfRange,
  kInvalidDigraph,
  kNotRegular,
  kNotSymmetric,
  kOddValency,
  kNoPerfectMatching,
  kGuardExceeded,
  kParseError,
  kInvalidGroup,
  kNotLoopless,
  kIdentityInConnectionSet,
  kInvalidSubgroup,
  kIoError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dad
