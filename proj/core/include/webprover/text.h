// Copyright 2026 The Webprover Authors
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
#ifndef WEBPROVER_TEXT_H_
#define WEBPROVER_TEXT_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace webprover {

// Script text is held as Unicode scalar values so that every offset and
// length exchanged with clients counts scalars, never bytes.
using Text = std::u32string;
using TextView = std::u32string_view;

class Utf8Error : public std::runtime_error {
 public:
  Utf8Error(const std::string& what, std::size_t byte_offset)
      : std::runtime_error(what), byte_offset_(byte_offset) {}
  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

// Throws Utf8Error on malformed input, overlong forms and surrogates.
Text DecodeUtf8(std::string_view bytes);
std::string EncodeUtf8(TextView text);
std::string EncodeUtf8(char32_t c);

inline Text ToText(std::string_view bytes) { return DecodeUtf8(bytes); }
inline std::string ToUtf8(TextView text) { return EncodeUtf8(text); }

std::size_t ScalarCount(std::string_view bytes);

std::string ToHex(const unsigned char* data, std::size_t size);

}  // namespace webprover

#endif  // WEBPROVER_TEXT_H_
