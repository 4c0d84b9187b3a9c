// Copyright 2026 The Afptas Authors
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

#include "afptas/log.hpp"

#include <cstdlib>
#include <cstring>
#include <iostream>
#include <mutex>

namespace afptas {

LogLevel log_level() {
  static const LogLevel level = [] {
    const char* env = std::getenv("AFPTAS_LOG");
    if (env == nullptr || *env == '\0') return LogLevel::kSilent;
    if (std::strcmp(env, "debug") == 0) return LogLevel::kDebug;
    return LogLevel::kInfo;
  }();
  return level;
}

void log_line(LogLevel level, const std::string& message) {
  static std::mutex mu;
  if (log_level() >= level) {
    std::lock_guard<std::mutex> lock(mu);
    std::cerr << "[afptas] " << message << "\n";
  }
}

}  // namespace afptas
