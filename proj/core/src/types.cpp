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

#include "stabmmi/types.hpp"

namespace stabmmi {

std::string mask_label(Mask m) {
    std::string out;
    for (auto v : mask_members(m)) {
        if (!out.empty()) {
            out.push_back(' ');
        }
        out += std::to_string(v + 1);
    }
    return out;
}

}  // namespace stabmmi
