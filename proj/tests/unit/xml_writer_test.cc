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

#include <gtest/gtest.h>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <sstream>

namespace webprover {
namespace {

namespace pt = boost::property_tree;

pt::ptree Parse(const std::string& xml) {
  std::istringstream in(xml);
  pt::ptree tree;
  pt::read_xml(in, tree);
  return tree;
}

TEST(XmlWriterTest, Escape) {
  EXPECT_EQ(XmlEscape("a<b>&\"c'"), "a&lt;b&gt;&amp;&quot;c'");
  EXPECT_EQ(XmlEscape("∧"), "∧");
}

TEST(XmlWriterTest, CdataSplitsTerminator) {
  EXPECT_EQ(XmlCdata("x"), "<![CDATA[x]]>");
  EXPECT_EQ(XmlCdata("a]]>b"), "<![CDATA[a]]]]><![CDATA[>b]]>");
  const std::string doc = XmlResponse({XmlElement("s").Cdata("a]]>b<A href=\"u\">")});
  EXPECT_EQ(Parse(doc).get<std::string>("response.s"), "a]]>b<A href=\"u\">");
}

TEST(XmlWriterTest, Layout) {
  XmlElement goals("goals");
  goals.Attr("count", 1LL);
  goals.Child(XmlElement("goal")
                  .Attr("index", 0LL)
                  .Child(XmlElement("hyp").Attr("name", "H").Text("a ∧ b"))
                  .Child(XmlElement("concl").Text("a")));
  const std::string doc =
      XmlResponse({XmlElement("executed").Attr("chars", 3LL), std::move(goals)});
  EXPECT_EQ(doc,
            "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
            "<response>\n"
            "<executed chars=\"3\"/>\n"
            "<goals count=\"1\">\n"
            "<goal index=\"0\">\n"
            "<hyp name=\"H\">a ∧ b</hyp>\n"
            "<concl>a</concl>\n"
            "</goal>\n"
            "</goals>\n"
            "</response>\n");
  const pt::ptree tree = Parse(doc);
  EXPECT_EQ(tree.get<int>("response.executed.<xmlattr>.chars"), 3);
  EXPECT_EQ(tree.get<std::string>("response.goals.goal.hyp"), "a ∧ b");
}

TEST(XmlWriterTest, AttributesAreEscaped) {
  const std::string doc =
      XmlResponse({XmlElement("c").Attr("lexeme", "<&\">").Text("x < y")});
  const pt::ptree tree = Parse(doc);
  EXPECT_EQ(tree.get<std::string>("response.c.<xmlattr>.lexeme"), "<&\">");
  EXPECT_EQ(tree.get<std::string>("response.c"), "x < y");
}

TEST(XmlWriterTest, EmptyResponse) {
  EXPECT_EQ(XmlResponse({}),
            "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<response>\n</response>\n");
}

}  // namespace
}  // namespace webprover
