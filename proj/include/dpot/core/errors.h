//
// Copyright 2026 The dpot Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef DPOT_CORE_ERRORS_H_
#define DPOT_CORE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace dpot {

// Two operands (vectors, masks) disagree on length.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A coordinate or offset lies outside its valid range.
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Invalid numeric parameters (epsilon, k, trial counts, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A channel produced a sample that cannot be consumed, or lacks a required
// component such as the designated output.
class ChannelFault : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact-mode request beyond what enumeration can handle.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Value does not fit the fixed-width representation it is encoded into.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// Malformed experiment configuration (CLI flags, config files, registry keys).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace dpot

#endif  // DPOT_CORE_ERRORS_H_
