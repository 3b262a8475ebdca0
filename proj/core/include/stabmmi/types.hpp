// Copyright 2026 The stabmmi Authors
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

#ifndef STABMMI_TYPES_HPP
#define STABMMI_TYPES_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace stabmmi {

/// Subset of parties/vertices. Party t (0-based) is bit t.
using Mask = std::uint64_t;

constexpr std::size_t kMaxParties = 64;

constexpr Mask full_mask(std::size_t n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
constexpr std::size_t mask_size(Mask m) { return static_cast<std::size_t>(std::popcount(m)); }

inline Mask mask_of(std::initializer_list<std::size_t> parties) {
    Mask m = 0;
    for (auto p : parties) {
        m |= Mask{1} << p;
    }
    return m;
}

inline std::vector<std::size_t> mask_members(Mask m) {
    std::vector<std::size_t> out;
    while (m) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
        m &= m - 1;
    }
    return out;
}

/// Renders a mask as space-separated 1-based labels, e.g. 0b101 -> "1 3".
std::string mask_label(Mask m);

/// Malformed textual input (graph6, JSON, tableau rows, gate scripts).
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A search or enumeration would exceed a configured size limit.
class LimitExceeded : public std::runtime_error {
  public:
    LimitExceeded(const std::string &what, std::size_t partial = 0)
        : std::runtime_error(what), partial_size_(partial) {}
    std::size_t partial_size() const { return partial_size_; }

  private:
    std::size_t partial_size_;
};

/// A value that should satisfy a structural invariant does not.
class InvariantViolation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

}  // namespace stabmmi

#endif  // STABMMI_TYPES_HPP
