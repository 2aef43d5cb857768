// Copyright 2026 The gpricing Authors
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

#ifndef GPRICING_ERROR_H_
#define GPRICING_ERROR_H_

#include <stdexcept>
#include <string>

namespace gpricing {

// Coarse classification used by the command line front end to pick an exit
// code. Library code throws PricingError with one of these kinds.
enum class ErrorKind {
  kInvalidInput,     // malformed file, schema mismatch, bad parameters
  kPrecondition,     // instance violates a solver precondition
  kLimitExceeded,    // brute-force search space above the configured limit
  kGirthNotReached,  // high-girth sampler gave up
  kInternal,         // an invariant that should never break did
};

const char* ErrorKindName(ErrorKind kind);

class PricingError : public std::runtime_error {
 public:
  PricingError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gpricing

#endif  // GPRICING_ERROR_H_
