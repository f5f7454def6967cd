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

#include "famtree/label.hpp"

#include <charconv>
#include <stdexcept>

namespace famtree {

namespace {

[[noreturn]] void bad_label(std::string_view text) {
  throw std::invalid_argument("invalid label: '" + std::string(text) + "'");
}

}  // namespace

Label::Label(std::vector<std::uint32_t> components) : path(std::move(components)) {
  for (std::uint32_t c : path) {
    if (c == 0) throw std::invalid_argument("label components must be >= 1");
  }
}

Label::Label(std::initializer_list<std::uint32_t> components)
    : Label(std::vector<std::uint32_t>(components)) {}

Label Label::parent() const {
  if (is_root()) throw std::logic_error("root label has no parent");
  Label up;
  up.path.assign(path.begin(), path.end() - 1);
  return up;
}

Label Label::child(std::uint32_t index) const {
  if (index == 0) throw std::invalid_argument("child index must be >= 1");
  Label down = *this;
  down.path.push_back(index);
  return down;
}

Label parse_label(std::string_view text) {
  if (text == "root") return Label{};
  if (text.empty()) bad_label(text);
  Label label;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t dot = text.find('.', pos);
    std::string_view part =
        text.substr(pos, dot == std::string_view::npos ? dot : dot - pos);
    std::uint32_t value = 0;
    auto [end, ec] = std::from_chars(part.begin(), part.end(), value);
    if (ec != std::errc{} || end != part.end() || value == 0) bad_label(text);
    label.path.push_back(value);
    if (dot == std::string_view::npos) break;
    pos = dot + 1;
    if (pos == text.size()) bad_label(text);  // trailing dot
  }
  return label;
}

std::string format_label(const Label& label) {
  if (label.is_root()) return "root";
  std::string out;
  for (std::size_t i = 0; i < label.path.size(); ++i) {
    if (i > 0) out += '.';
    out += std::to_string(label.path[i]);
  }
  return out;
}

}  // namespace famtree
