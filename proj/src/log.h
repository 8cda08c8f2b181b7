// syllasplit/src/log.h

// Copyright 2026  The syllasplit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef SYLLASPLIT_LOG_H_
#define SYLLASPLIT_LOG_H_

#include <spdlog/logger.h>

namespace syllasplit {

/// Process-wide stderr logger. The level comes from the SYLLASPLIT_LOG
/// environment variable (trace, debug, info, warn, error, off); default warn.
spdlog::logger& logger();

}  // namespace syllasplit

#endif  // SYLLASPLIT_LOG_H_
