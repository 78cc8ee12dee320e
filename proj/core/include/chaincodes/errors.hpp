/*
   Copyright 2026 The chaincodes authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CHAINCODES_ERRORS_HPP
#define CHAINCODES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chaincodes {

/// Invalid user input (bad parameters, malformed strings, out-of-range data).
class InputError : public std::invalid_argument {
   public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A configured resource bound (enumeration size, ring size) was exceeded.
class BoundError : public std::runtime_error {
   public:
    explicit BoundError(const std::string& what) : std::runtime_error(what) {}
};

/// The span handed to a cyclic-code operation is not closed under the shift.
class NotCyclicError : public InputError {
   public:
    explicit NotCyclicError(const std::string& what) : InputError(what) {}
};

}  // namespace chaincodes

#endif  // CHAINCODES_ERRORS_HPP
