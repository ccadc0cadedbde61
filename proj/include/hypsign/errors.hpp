// Copyright 2026 The hypsign Authors
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

#ifndef HYPSIGN_ERRORS_HPP
#define HYPSIGN_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hypsign {

/// Malformed text input. position() is the 0-based offset of the offending character.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string &what, std::string input, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position) + " in \"" +
                                input + "\""),
          input_(std::move(input)),
          position_(position) {}

    const std::string &input() const noexcept { return input_; }
    std::size_t position() const noexcept { return position_; }

private:
    std::string input_;
    std::size_t position_;
};

/// Well-formed input that violates a domain rule: incompatible couple,
/// wrong pattern shape, a root that does not divide, and so on.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace hypsign

#endif  // HYPSIGN_ERRORS_HPP
