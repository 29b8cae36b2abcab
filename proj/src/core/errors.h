// Copyright 2026 The Sleepnet Authors.
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

#ifndef SLEEPNET_CORE_ERRORS_H_
#define SLEEPNET_CORE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace sleepnet {

// Error categories surfaced through the C API as status codes.
enum class ErrorKind {
  kInput,            // malformed argument (negative distance, bad index, ...)
  kDomain,           // argument outside the function's domain
  kParameter,        // model parameters that make a formula undefined
  kConfig,           // configuration file problems
  kBudget,           // explicit refusal: search space or attempts exhausted
  kStateCorruption,  // internal invariant broken (e.g. strategy not normalized)
  kIo,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void Fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace sleepnet

#endif  // SLEEPNET_CORE_ERRORS_H_
