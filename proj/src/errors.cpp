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

#include "bbsym/errors.hpp"

#include <cstdio>

namespace bbsym {

namespace {
WarnHandler g_warn_handler;  // empty -> default stderr sink
}

void set_warn_handler(WarnHandler handler) { g_warn_handler = std::move(handler); }

void warn(const std::string& message) {
  if (g_warn_handler) {
    g_warn_handler(message);
  } else {
    std::fprintf(stderr, "bbsym: warning: %s\n", message.c_str());
  }
}

}  // namespace bbsym
