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
#ifndef WEBPROVER_XML_WRITER_H_
#define WEBPROVER_XML_WRITER_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace webprover {

// Escapes & < > " for text and attribute values.
std::string XmlEscape(std::string_view s);

// Wraps s in CDATA sections, splitting any "]]>" it contains.
std::string XmlCdata(std::string_view s);

// A tiny element tree. Elements with children print one child per line;
// leaf elements print inline; empty ones self-close.
class XmlElement {
 public:
  explicit XmlElement(std::string name) : name_(std::move(name)) {}

  XmlElement& Attr(std::string name, std::string value);
  XmlElement& Attr(std::string name, long long value);
  XmlElement& Text(std::string text);
  XmlElement& Cdata(std::string text);
  XmlElement& Child(XmlElement child);

  void Write(std::string& out) const;

 private:
  std::string name_;
  std::vector<std::pair<std::string, std::string>> attrs_;
  std::string body_;  // already escaped
  std::vector<XmlElement> children_;
};

// <?xml ...?> declaration and a <response> root around items.
std::string XmlResponse(const std::vector<XmlElement>& items);

}  // namespace webprover

#endif  // WEBPROVER_XML_WRITER_H_
