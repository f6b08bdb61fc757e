// Copyright 2026 The torictrace Authors. All Rights Reserved.
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

#pragma once

#include <ostream>

namespace torictrace {

/// Exit codes of the command line tool.
enum ExitCode : int {
  kExitGorenstein = 0,
  kExitNearlyGorenstein = 1,
  kExitPunctured = 2,
  kExitNeither = 3,
  kExitInput = 64,
  kExitNoInput = 66,
  kExitResource = 69,
  kExitInconsistent = 70,
};

/// Runs `torictrace <command> ...` with output and diagnostics sent to the
/// given streams; returns the exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace torictrace
