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
#include "webprover/daemon.h"

#include <gtest/gtest.h>

#include <atomic>
#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <regex>
#include <sstream>
#include <thread>

#include "support/corpus.h"
#include "support/protocol.h"

namespace webprover {
namespace {

namespace pt = boost::property_tree;
using testing::DaemonHarness;
using testing::ElementText;

pt::ptree Xml(const Response& r) {
  std::istringstream in(r.body);
  pt::ptree tree;
  pt::read_xml(in, tree);
  return tree.get_child("response");
}

std::string ErrorCode(const Response& r) {
  return Xml(r).get<std::string>("error.<xmlattr>.code", "");
}

const char kIdentity[] = "theorem t : a → a.\nintro H.\nexact H.\nqed.";

class DaemonTest : public ::testing::Test {
 protected:
  DaemonHarness h_{testing::CorpusLibraryFiles()};
};

TEST_F(DaemonTest, Register) {
  const Response ok = h_.Post("/matita/register",
                              {{"user", "alice"}, {"password", "password1"}});
  EXPECT_EQ(ok.status, 200);
  EXPECT_EQ(Xml(ok).count("ok"), 1u);
  const Response again = h_.Post("/matita/register",
                                 {{"user", "alice"}, {"password", "password1"}});
  EXPECT_EQ(again.status, 409);
  EXPECT_EQ(ErrorCode(again), "taken");
  const Response bad = h_.Post("/matita/register",
                               {{"user", "A!ce"}, {"password", "password1"}});
  EXPECT_EQ(bad.status, 400);
  EXPECT_EQ(ErrorCode(bad), "invalid");
  EXPECT_EQ(ErrorCode(h_.Post("/matita/register", {{"user", "bob"}})), "invalid");
}

TEST_F(DaemonTest, Login) {
  const std::string token = h_.Join("alice");
  EXPECT_TRUE(std::regex_match(token, std::regex("[0-9a-f]{32}")));
  EXPECT_NE(h_.Join("alice"), token);
  EXPECT_EQ(h_.daemon().TokenCount(), 2u);
  const Response wrong = h_.Post("/matita/login",
                                 {{"user", "alice"}, {"password", "password2"}});
  const Response nobody = h_.Post("/matita/login",
                                  {{"user", "nobody"}, {"password", "password1"}});
  EXPECT_EQ(wrong.status, 401);
  EXPECT_EQ(ErrorCode(wrong), "auth");
  EXPECT_EQ(wrong.body, nobody.body);
  const std::string s = h_.NewSession(token);
  EXPECT_EQ(s, "1");
  EXPECT_EQ(h_.Execute(token, s, "all", kIdentity).status, 200);
}

TEST_F(DaemonTest, EveryProtectedEndpointNeedsAToken) {
  const std::vector<std::pair<std::string, std::string>> endpoints = {
      {"POST", "/matita/logout"}, {"POST", "/matita/session/new"},
      {"POST", "/matita/execute"}, {"POST", "/matita/undo"},
      {"GET", "/matita/goals"},   {"GET", "/matita/ls"},
      {"GET", "/matita/read"},    {"POST", "/matita/save"},
      {"POST", "/matita/commit"}, {"POST", "/matita/update"}};
  for (const auto& [method, path] : endpoints) {
    for (const std::map<std::string, std::string>& params :
         {std::map<std::string, std::string>{},
          std::map<std::string, std::string>{{"token", "feed"}}}) {
      const Response r = h_.daemon().Handle(
          Request{method, path, params, ""});
      EXPECT_EQ(r.status, 401) << path;
      EXPECT_EQ(ErrorCode(r), "auth") << path;
    }
  }
}

TEST_F(DaemonTest, ExecuteIdentity) {
  const std::string token = h_.Join("alice");
  const std::string s = h_.NewSession(token);
  const Response r = h_.Execute(token, s, "all", kIdentity);
  const pt::ptree x = Xml(r);
  EXPECT_EQ(x.get<std::size_t>("executed.<xmlattr>.chars"),
            ScalarCount(kIdentity));
  EXPECT_EQ(x.get<int>("executed.<xmlattr>.statements"), 4);
  EXPECT_EQ(x.count("statement"), 4u);
  EXPECT_EQ(x.get<int>("goals.<xmlattr>.count"), 0);
  EXPECT_EQ(x.count("error"), 0u);
}

TEST_F(DaemonTest, StepwiseExecutionAndGoals) {
  const std::string token = h_.Join("alice");
  const std::string s = h_.NewSession(token);
  const Response first = h_.Execute(token, s, "one", kIdentity);
  const pt::ptree x = Xml(first);
  EXPECT_EQ(x.get<int>("executed.<xmlattr>.chars"), 18);
  EXPECT_EQ(x.get<int>("goals.<xmlattr>.count"), 1);
  EXPECT_EQ(x.get<std::string>("goals.goal.concl"), "a → a");

  const std::string rest = std::string(kIdentity).substr(std::string("theorem t : a → a.").size());
  const pt::ptree y = Xml(h_.Execute(token, s, "one", rest));
  EXPECT_EQ(y.get<int>("statement.<xmlattr>.index"), 1);
  EXPECT_EQ(y.get<std::string>("goals.goal.hyp.<xmlattr>.name"), "H");
  EXPECT_EQ(y.get<std::string>("goals.goal.hyp"), "a");

  const pt::ptree g = Xml(h_.Get("/matita/goals", {{"token", token}, {"session", s}}));
  EXPECT_EQ(g.get<std::string>("goals.goal.concl"), "a");
}

TEST_F(DaemonTest, ExecutionErrors) {
  const std::string token = h_.Join("alice");
  const std::string s = h_.NewSession(token);
  const pt::ptree x = Xml(h_.Execute(token, s, "all", "theorem t : a → a.\nsplit."));
  EXPECT_EQ(x.get<int>("executed.<xmlattr>.chars"), 18);
  EXPECT_EQ(x.get<std::string>("error.<xmlattr>.code"), "tactic");
  EXPECT_EQ(x.get<int>("error.<xmlattr>.offset"), 19);
  EXPECT_EQ(x.get<int>("error.<xmlattr>.length"), 6);
  EXPECT_FALSE(x.get<std::string>("error").empty());
  EXPECT_EQ(ErrorCode(h_.Execute(token, s, "sideways", "qed.")), "invalid");
  EXPECT_EQ(ErrorCode(h_.Execute(token, "99", "all", "qed.")), "notfound");
  EXPECT_EQ(ErrorCode(h_.Execute(token, s, "all", "\xff")), "invalid");
}

TEST_F(DaemonTest, AmbiguityProducesChoices) {
  const std::string token = h_.Join("alice");
  const std::string s = h_.NewSession(token);
  const pt::ptree x = Xml(h_.Execute(token, s, "all", "theorem t : a & b.\n"));
  const pt::ptree& c = x.get_child("choices");
  EXPECT_EQ(c.get<std::string>("<xmlattr>.lexeme"), "&");
  EXPECT_EQ(c.get<int>("<xmlattr>.offset"), 14);
  EXPECT_EQ(c.get<int>("<xmlattr>.length"), 1);
  EXPECT_EQ(c.count("candidate"), 2u);
  const pt::ptree y = Xml(h_.Execute(
      token, s, "all",
      "theorem t : a <A href=\"builtin://logic#and\">&</A> b.\n"));
  EXPECT_EQ(y.count("choices"), 0u);
  EXPECT_EQ(y.get<std::string>("statement"),
            "theorem t : a <A href=\"builtin://logic#and\">&</A> b.");
}

TEST_F(DaemonTest, StatementsRoundTripInCdata) {
  const std::string token = h_.Join("alice");
  const std::string s = h_.NewSession(token);
  const std::string script =
      "theorem t : a ∧ b → b ∧ a. (* ]]> <b>not markup</b> *) intro H. "
      "apply conj_comm. exact H. qed.";
  const pt::ptree x = Xml(h_.Execute(
      token, s, "all",
      "theorem t : a ∧ b → b ∧ a. (* ]]> <b>not markup</b> *) intro H. "
      "apply <A href=\"lib://shared/logic#conj_comm\">conj_comm</A>. exact H. qed."));
  std::string joined;
  for (const auto& [name, child] : x) {
    if (name == "statement") joined += child.data();
  }
  EXPECT_NE(joined.find("]]> <b>not markup</b>"), std::string::npos);
  EXPECT_NE(joined.find("<A href=\"lib://shared/logic#conj_comm\">conj_comm</A>"),
            std::string::npos);
  EXPECT_EQ(x.get<int>("goals.<xmlattr>.count"), 0);
}

TEST_F(DaemonTest, Undo) {
  const std::string token = h_.Join("alice");
  const std::string s = h_.NewSession(token);
  h_.Execute(token, s, "all", kIdentity);
  const Response one = h_.Post("/matita/undo", {{"token", token}, {"session", s}, {"steps", "1"}});
  EXPECT_EQ(Xml(one).get<int>("undone.<xmlattr>.steps"), 1);
  EXPECT_EQ(Xml(one).get<int>("undone.<xmlattr>.remaining"), 3);
  EXPECT_EQ(Xml(one).get<int>("goals.<xmlattr>.count"), 0);
  h_.Execute(token, s, "all", "\nqed.");
  const Response all = h_.Post("/matita/undo", {{"token", token}, {"session", s}, {"steps", "all"}});
  EXPECT_NE(all.body.find("<undone steps=\"4\" remaining=\"0\"/>"), std::string::npos);
  EXPECT_EQ(ErrorCode(h_.Post("/matita/undo", {{"token", token}, {"session", s}, {"steps", "0"}})),
            "invalid");
  EXPECT_EQ(ErrorCode(h_.Post("/matita/undo", {{"token", token}, {"session", s}})), "invalid");
}

TEST_F(DaemonTest, FileServices) {
  const std::string token = h_.Join("alice");
  const Response missing = h_.Get("/matita/read", {{"token", token}, {"file", "nope.ma"}});
  EXPECT_EQ(missing.status, 404);
  EXPECT_NE(missing.body.find("<error code=\"notfound\"/>"), std::string::npos);
  EXPECT_EQ(ErrorCode(h_.Get("/matita/read", {{"token", token}, {"file", "../etc"}})),
            "access");
  const std::string content = "theorem t : a → a. (* ]]> *)\n";
  EXPECT_EQ(h_.Post("/matita/save", {{"token", token}, {"file", "work/m.ma"}}, content).status,
            200);
  const pt::ptree f = Xml(h_.Get("/matita/read", {{"token", token}, {"file", "work/m.ma"}}));
  EXPECT_EQ(f.get<std::string>("file"), content);
  EXPECT_EQ(f.get<std::string>("file.<xmlattr>.path"), "work/m.ma");
  const pt::ptree l = Xml(h_.Get("/matita/ls", {{"token", token}}));
  std::vector<std::string> names;
  for (const auto& [n, e] : l.get_child("listing")) {
    if (n == "entry") names.push_back(e.get<std::string>("<xmlattr>.name"));
  }
  EXPECT_EQ(names, (std::vector<std::string>{"alt.ma", "logic.ma", "work"}));
  const pt::ptree w = Xml(h_.Get("/matita/ls", {{"token", token}, {"path", "work"}}));
  EXPECT_EQ(w.get<std::string>("listing.entry.<xmlattr>.kind"), "file");
  EXPECT_EQ(w.get<std::string>("listing.entry.<xmlattr>.modified"), "1");
}

TEST_F(DaemonTest, CommitAndUpdate) {
  const std::string a = h_.Join("alice");
  const std::string b = h_.Join("bob");
  EXPECT_EQ(Xml(h_.Post("/matita/commit", {{"token", a}})).count("nothing"), 1u);
  h_.Post("/matita/save", {{"token", a}, {"file", "logic.ma"}}, "axiom z : x → x.\n");
  const Response c = h_.Post("/matita/commit", {{"token", a}});
  EXPECT_NE(c.body.find("<committed revision=\"2\"/>"), std::string::npos);
  const pt::ptree u = Xml(h_.Post("/matita/update", {{"token", b}}));
  EXPECT_EQ(u.get<std::string>("update.updated.path"), "logic.ma");
  EXPECT_EQ(u.get_child("update.conflicts").size(), 0u);
  const Response again = h_.Post("/matita/update", {{"token", b}});
  EXPECT_NE(again.body.find("<update>\n<updated/>\n<conflicts/>\n</update>"),
            std::string::npos);
}

TEST_F(DaemonTest, NewSessionsSeeTheCommittedLibrary) {
  const std::string a = h_.Join("alice");
  h_.Post("/matita/save", {{"token", a}, {"file", "extra.ma"}},
          "theorem swap : x ∧ y → y ∧ x. auto. qed.\n");
  h_.Post("/matita/commit", {{"token", a}});
  const std::string s = h_.NewSession(a);
  const pt::ptree x = Xml(h_.Execute(
      a, s, "all", "theorem t : p ∧ q → q ∧ p. intro H. apply swap. exact H. qed."));
  EXPECT_EQ(x.count("error"), 0u);
  EXPECT_EQ(x.get<int>("executed.<xmlattr>.statements"), 5);
}

TEST_F(DaemonTest, SessionForAFileUsesItsModule) {
  const std::string a = h_.Join("alice");
  const Response r = h_.Post("/matita/session/new", {{"token", a}, {"file", "dir/m.ma"}});
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(ErrorCode(h_.Post("/matita/session/new", {{"token", a}, {"file", "../m.ma"}})),
            "access");
  EXPECT_EQ(ErrorCode(h_.Post("/matita/session/new", {{"token", a}, {"file", "m.txt"}})),
            "invalid");
}

TEST_F(DaemonTest, IsolationBetweenUsers) {
  const std::string a = h_.Join("alice");
  const std::string b = h_.Join("bob");
  const std::string sa = h_.NewSession(a);
  const std::string sb = h_.NewSession(b);
  const char* steps_a[] = {"theorem t : p → p.", " intro H.", " exact H.", " qed.",
                           " theorem u : p → p. exact t. qed."};
  const char* steps_b[] = {"theorem t : q ∧ r → r ∧ q.", " auto.", " qed.",
                           " theorem u : q ∧ r → r ∧ q. exact t. qed."};
  std::size_t i = 0, j = 0;
  while (i < std::size(steps_a) || j < std::size(steps_b)) {
    if (i < std::size(steps_a)) {
      EXPECT_EQ(Xml(h_.Execute(a, sa, "all", steps_a[i++])).count("error"), 0u);
    }
    if (j < std::size(steps_b)) {
      EXPECT_EQ(Xml(h_.Execute(b, sb, "all", steps_b[j++])).count("error"), 0u);
    }
  }
  // A user's definitions are invisible to others and to their other tokens.
  const std::string sb2 = h_.NewSession(b);
  const pt::ptree x = Xml(h_.Execute(b, sb2, "all", "theorem v : q ∧ r → r ∧ q. exact t."));
  EXPECT_EQ(x.get<std::string>("error.<xmlattr>.code"), "parse");
}

TEST_F(DaemonTest, SessionsBelongToTheirToken) {
  const std::string a = h_.Join("alice");
  const std::string b = h_.Join("bob");
  const std::string sa = h_.NewSession(a);
  EXPECT_EQ(ErrorCode(h_.Execute(b, sa, "all", kIdentity)), "notfound");
  EXPECT_EQ(ErrorCode(h_.Get("/matita/goals", {{"token", b}, {"session", sa}})),
            "notfound");
}

TEST_F(DaemonTest, LogoutAndExpiry) {
  const std::string a = h_.Join("alice");
  const std::string s = h_.NewSession(a);
  EXPECT_EQ(h_.Post("/matita/logout", {{"token", a}}).status, 200);
  EXPECT_EQ(ErrorCode(h_.Execute(a, s, "all", kIdentity)), "auth");

  const std::string b = h_.Join("bob");
  h_.Advance(std::chrono::minutes(119));
  EXPECT_EQ(h_.Get("/matita/ls", {{"token", b}}).status, 200);
  h_.Advance(std::chrono::minutes(119));
  EXPECT_EQ(h_.Get("/matita/ls", {{"token", b}}).status, 200);
  h_.Advance(std::chrono::minutes(121));
  EXPECT_EQ(ErrorCode(h_.Get("/matita/ls", {{"token", b}})), "auth");
  EXPECT_EQ(h_.daemon().TokenCount(), 0u);
}

TEST_F(DaemonTest, OversizedBodies) {
  const std::string a = h_.Join("alice");
  const std::string s = h_.NewSession(a);
  const std::string big((1u << 20) + 1, ' ');
  const Response r = h_.Execute(a, s, "all", big);
  EXPECT_EQ(r.status, 413);
  EXPECT_EQ(ErrorCode(r), "toolarge");
  EXPECT_EQ(ErrorCode(h_.Post("/matita/save", {{"token", a}, {"file", "m.ma"}}, big)),
            "toolarge");
}

TEST_F(DaemonTest, RoutingErrors) {
  const Response nf = h_.Get("/matita/nothing", {});
  EXPECT_EQ(nf.status, 404);
  EXPECT_EQ(ErrorCode(nf), "notfound");
  const Response m = h_.Get("/matita/execute", {});
  EXPECT_EQ(m.status, 405);
  EXPECT_EQ(ErrorCode(m), "method");
}

TEST_F(DaemonTest, BusySessionRejectsASecondMutation) {
  const std::string a = h_.Join("alice");
  const std::string s = h_.NewSession(a);
  std::string big;
  for (int i = 0; i < 200; ++i) {
    big += "theorem t" + std::to_string(i) + " : a ∧ b → b ∧ a. auto. qed. ";
  }
  std::atomic<bool> done = false;
  std::thread worker([&] {
    while (h_.Execute(a, s, "all", big).status == 409) {
    }
    done = true;
  });
  bool saw_busy = false;
  while (!done && !saw_busy) {
    const Response r =
        h_.Post("/matita/undo", {{"token", a}, {"session", s}, {"steps", "1"}});
    if (r.status == 409) {
      saw_busy = ErrorCode(r) == "busy";
    }
  }
  worker.join();
  EXPECT_TRUE(saw_busy);
  // Other sessions are unaffected.
  const std::string s2 = h_.NewSession(a);
  EXPECT_EQ(h_.Execute(a, s2, "all", kIdentity).status, 200);
}

TEST(DaemonGoldenTest, ResponsesMatchGoldenFiles) {
  for (const auto& [name, response] : testing::GoldenScenarios()) {
    EXPECT_EQ(response.body, testing::ReadTestFile("golden/" + name + ".xml")) << name;
    EXPECT_EQ(response.content_type, "application/xml");
  }
}

TEST(BuildLibraryTest, LoadsFilesInPathOrder) {
  SharedSnapshot shared;
  shared.head = 3;
  shared.files["a.ma"] = SharedFile{"axiom base : x → x.", 1};
  shared.files["b/c.ma"] = SharedFile{"theorem uses : p → p. exact base. qed.", 2};
  const LibrarySnapshot lib = BuildLibrary(shared);
  EXPECT_EQ(lib.head, 3);
  EXPECT_TRUE(lib.env.Contains(LibUri::Library("shared", "a", "base")));
  EXPECT_TRUE(lib.env.Contains(LibUri::Library("shared", "b/c", "uses")));
}

}  // namespace
}  // namespace webprover
