// Copyright 2026 the bbsym authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BBSYM_ERRORS_HPP
#define BBSYM_ERRORS_HPP

#include <functional>
#include <stdexcept>
#include <string>

namespace bbsym {

// Input violates a documented precondition: bad parse, dimension mismatch,
// invalid tableau, non-involutive pulse where one is required, and so on.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what)
      : std::invalid_argument(what) {}
};

// A pulse cycle whose composed conjugation is not the identity automorphism.
class ClosureError : public ValidationError {
 public:
  explicit ClosureError(const std::string& what) : ValidationError(what) {}
};

// A dense realization would exceed the configured dimension cap.
class CapError : public std::runtime_error {
 public:
  explicit CapError(const std::string& what) : std::runtime_error(what) {}
};

// Non-fatal diagnostics (e.g. a dropped pure-bath term) go through a
// replaceable handler so embedders can capture them; default writes stderr.
using WarnHandler = std::function<void(const std::string&)>;
void set_warn_handler(WarnHandler handler);  // empty handler restores default
void warn(const std::string& message);

}  // namespace bbsym

#endif  // BBSYM_ERRORS_HPP
