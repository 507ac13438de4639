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

#include "dad/error.hpp"

namespace dad {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "invalid_argument";
    case ErrorCode::kDomainMismatch:
      return "domain_mismatch";
    case ErrorCode::kInvalidPermutation:
      return "invalid_permutation";
    case ErrorCode::kNotDerangement:
      return "not_derangement";
    case ErrorCode::kEmptySet:
      return "empty_set";
    case ErrorCode::kDuplicatePermutation:
      return "duplicate_permutation";
    case ErrorCode::kNotInvariant:
      return "not_invariant";
    case ErrorCode::kVertexOutOfRange:
      return "vertex_out_of_range";
    case ErrorCode::kInvalidDigraph:
      return "invalid_digraph";
    case ErrorCode::kNotRegular:
      return "not_regular";
    case ErrorCode::kNotSymmetric:
      return "not_symmetric";
    case ErrorCode::kOddValency:
      return "odd_valency";
    case ErrorCode::kNoPerfectMatching:
      return "no_perfect_matching";
    case ErrorCode::kGuardExceeded:
      return "guard_exceeded";
    case ErrorCode::kParseError:
      return "parse_error";
    case ErrorCode::kInvalidGroup:
      return "invalid_group";
    case ErrorCode::kNotLoopless:
      return "not_loopless";
    case ErrorCode::kIdentityInConnectionSet:
      return "identity_in_connection_set";
    case ErrorCode::kInvalidSubgroup:
      return "invalid_subgroup";
    case ErrorCode::kIoError:
      return "io_error";
  }
  return "unknown";
}

}  // namespace dad
