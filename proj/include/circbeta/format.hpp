// Copyright 2026 The circbeta Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CIRCBETA_FORMAT_HPP
#define CIRCBETA_FORMAT_HPP

#include <charconv>
#include <string>
#include <system_error>

namespace circbeta {

/// Locale-independent decimal with 17 significant digits (round-trips).
inline std::string format_g17(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return res.ec == std::errc{} ? std::string(buf, res.ptr) : std::string("nan");
}

/// Shortest locale-independent decimal that round-trips.
inline std::string format_shortest(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return res.ec == std::errc{} ? std::string(buf, res.ptr) : std::string("nan");
}

}  // namespace circbeta

#endif  // CIRCBETA_FORMAT_HPP
