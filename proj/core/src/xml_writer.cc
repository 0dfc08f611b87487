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
#include "webprover/xml_writer.h"

namespace webprover {

std::string XmlEscape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string XmlCdata(std::string_view s) {
  std::string out = "<![CDATA[";
  std::size_t start = 0;
  while (true) {
    const std::size_t p = s.find("]]>", start);
    if (p == std::string_view::npos) break;
    // End the section between "]]" and ">".
    out.append(s.substr(start, p + 2 - start));
    out += "]]><![CDATA[";
    start = p + 2;
  }
  out.append(s.substr(start));
  out += "]]>";
  return out;
}

XmlElement& XmlElement::Attr(std::string name, std::string value) {
  attrs_.emplace_back(std::move(name), std::move(value));
  return *this;
}

XmlElement& XmlElement::Attr(std::string name, long long value) {
  return Attr(std::move(name), std::to_string(value));
}

XmlElement& XmlElement::Text(std::string text) {
  body_ += XmlEscape(text);
  return *this;
}

XmlElement& XmlElement::Cdata(std::string text) {
  body_ += XmlCdata(text);
  return *this;
}

XmlElement& XmlElement::Child(XmlElement child) {
  children_.push_back(std::move(child));
  return *this;
}

void XmlElement::Write(std::string& out) const {
  out += '<';
  out += name_;
  for (const auto& [k, v] : attrs_) {
    out += ' ';
    out += k;
    out += "=\"";
    out += XmlEscape(v);
    out += '"';
  }
  if (body_.empty() && children_.empty()) {
    out += "/>";
    return;
  }
  out += '>';
  out += body_;
  if (!children_.empty()) {
    out += '\n';
    for (const XmlElement& c : children_) {
      c.Write(out);
      out += '\n';
    }
  }
  out += "</";
  out += name_;
  out += '>';
}

std::string XmlResponse(const std::vector<XmlElement>& items) {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<response>\n";
  for (const XmlElement& e : items) {
    e.Write(out);
    out += '\n';
  }
  out += "</response>\n";
  return out;
}

}  // namespace webprover
