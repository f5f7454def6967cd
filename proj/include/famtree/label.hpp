// Copyright 2026 The famtree authors
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

#ifndef FAMTREE_LABEL_HPP_
#define FAMTREE_LABEL_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace famtree {

// Path address of a vertex in a rooted ordered tree. The empty path is the
// root; (2,1,3) is the 3rd child of the 1st child of the root's 2nd child.
// Every component is >= 1.
struct Label {
  std::vector<std::uint32_t> path;

  Label() = default;
  explicit Label(std::vector<std::uint32_t> components);
  Label(std::initializer_list<std::uint32_t> components);

  bool is_root() const noexcept { return path.empty(); }
  std::size_t depth() const noexcept { return path.size(); }

  // Parent address; only defined for non-root labels.
  Label parent() const;
  Label child(std::uint32_t index) const;

  bool operator==(const Label&) const = default;
  auto operator<=>(const Label&) const = default;
};

// Text form: "root" for the empty path, otherwise dot-separated positive
// integers ("2.1.3"). format_label is the exact inverse of parse_label.
Label parse_label(std::string_view text);
std::string format_label(const Label& label);

}  // namespace famtree

#endif  // FAMTREE_LABEL_HPP_
