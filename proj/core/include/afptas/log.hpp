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

#ifndef AFPTAS_LOG_HPP
#define AFPTAS_LOG_HPP

#include <sstream>
#include <string>

namespace afptas {

// Stage-level logging controlled by the AFPTAS_LOG environment variable:
// unset/"" = silent, "info" = stage transitions, "debug" = per-iteration LP
// detail. Output goes to stderr.
enum class LogLevel { kSilent = 0, kInfo = 1, kDebug = 2 };

LogLevel log_level();
void log_line(LogLevel level, const std::string& message);

template <typename... Args>
void log_info(const Args&... args) {
  if (log_level() >= LogLevel::kInfo) {
    std::ostringstream os;
    (os << ... << args);
    log_line(LogLevel::kInfo, os.str());
  }
}

template <typename... Args>
void log_debug(const Args&... args) {
  if (log_level() >= LogLevel::kDebug) {
    std::ostringstream os;
    (os << ... << args);
    log_line(LogLevel::kDebug, os.str());
  }
}

}  // namespace afptas

#endif  // AFPTAS_LOG_HPP
