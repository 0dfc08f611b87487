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
#include "webprover/libstore.h"

#include <openssl/crypto.h>
#include <openssl/evp.h>
#include <openssl/rand.h>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "webprover/lib_uri.h"
#include "webprover/text.h"

namespace webprover {
namespace fs = std::filesystem;
namespace {

constexpr int kPbkdf2Iterations = 20000;
constexpr std::size_t kSaltBytes = 16;
constexpr std::size_t kDigestBytes = 32;

std::vector<std::string> Split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t p = s.find(sep, start);
    out.emplace_back(s.substr(start, p - start));
    if (p == std::string_view::npos) break;
    start = p + 1;
  }
  return out;
}

std::string ReadFile(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw NotFoundError("no such file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Write to a sibling temporary and rename over the target.
void WriteFile(const fs::path& p, std::string_view content) {
  fs::create_directories(p.parent_path());
  fs::path tmp = p;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw StoreError("cannot write " + p.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw StoreError("cannot write " + p.string());
  }
  fs::rename(tmp, p);
}

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

std::string Digest(const std::string& password, const unsigned char* salt) {
  unsigned char out[kDigestBytes];
  if (PKCS5_PBKDF2_HMAC(password.data(), static_cast<int>(password.size()),
                        salt, kSaltBytes, kPbkdf2Iterations, EVP_sha256(),
                        kDigestBytes, out) != 1) {
    throw StoreError("password hashing failed");
  }
  return ToHex(out, kDigestBytes);
}

std::vector<unsigned char> FromHex(std::string_view hex) {
  std::vector<unsigned char> out;
  for (std::size_t i = 0; i + 1 < hex.size(); i += 2) {
    out.push_back(static_cast<unsigned char>(
        std::stoi(std::string(hex.substr(i, 2)), nullptr, 16)));
  }
  return out;
}

void ValidateScriptPath(const std::string& path) {
  constexpr std::string_view kExt = ".ma";
  if (path.size() <= kExt.size() || !path.ends_with(kExt) ||
      !IsValidModulePath(std::string_view(path).substr(
          0, path.size() - kExt.size()))) {
    throw ValidationError("not a script path: " + path);
  }
}

}  // namespace

std::string NormalizePath(std::string_view path) {
  if (path.starts_with('/') || path.find('\\') != std::string_view::npos ||
      path.find('\0') != std::string_view::npos) {
    throw AccessError("path escapes the library: " + std::string(path));
  }
  std::string out;
  for (const std::string& seg : Split(path, '/')) {
    if (seg.empty() || seg == ".") continue;
    if (seg == "..") {
      throw AccessError("path escapes the library: " + std::string(path));
    }
    if (!out.empty()) out += '/';
    out += seg;
  }
  return out;
}

std::map<std::string, long> LibStore::SharedMeta::LastChanged() const {
  std::map<std::string, long> out;
  for (const Record& r : history) {
    for (const std::string& p : r.paths) out[p] = r.rev;
  }
  return out;
}

LibStore::LibStore(fs::path root) : root_(std::move(root)) {
  fs::create_directories(root_ / "shared" / "files");
  fs::create_directories(root_ / "users");
  if (!fs::exists(root_ / "accounts")) WriteFile(root_ / "accounts", "");
  if (!fs::exists(root_ / "shared" / "meta")) StoreShared(SharedMeta{});
}

std::mutex& LibStore::UserMutex(const std::string& user) const {
  std::lock_guard lock(users_mu_);
  auto& slot = user_mu_[user];
  if (!slot) slot = std::make_unique<std::mutex>();
  return *slot;
}

fs::path LibStore::UserDir(const std::string& user) const {
  return root_ / "users" / user;
}

void LibStore::RequireUser(const std::string& user) const {
  if (!IsValidUserId(user) || !fs::exists(UserDir(user) / "meta")) {
    throw NotFoundError("unknown user " + user);
  }
}

bool LibStore::HasUser(const std::string& user) const {
  if (!IsValidUserId(user)) return false;
  std::lock_guard lock(accounts_mu_);
  for (const std::string& line : Lines(ReadFile(root_ / "accounts"))) {
    if (Split(line, '\t').front() == user) return true;
  }
  return false;
}

void LibStore::Register(const std::string& user, const std::string& password) {
  if (!IsValidUserId(user) || user == kSharedOwner) {
    throw ValidationError("invalid user id");
  }
  if (password.size() < kMinPasswordLength) {
    throw ValidationError("password too short");
  }
  std::lock_guard lock(accounts_mu_);
  std::string accounts = ReadFile(root_ / "accounts");
  for (const std::string& line : Lines(accounts)) {
    if (Split(line, '\t').front() == user) throw TakenError("user id taken");
  }
  unsigned char salt[kSaltBytes];
  if (RAND_bytes(salt, kSaltBytes) != 1) throw StoreError("no randomness");

  {
    std::lock_guard ulock(UserMutex(user));
    std::shared_lock slock(shared_mu_);
    const SharedMeta meta = LoadShared();
    std::map<std::string, WorkingFile> files;
    for (const auto& [path, rev] : meta.LastChanged()) {
      WriteFile(UserDir(user) / "files" / path,
                ReadFile(root_ / "shared" / "files" / path));
      files[path] = WorkingFile{meta.head, false};
    }
    fs::create_directories(UserDir(user) / "files");
    StoreWorking(user, files);
  }
  accounts += user + "\t" + ToHex(salt, kSaltBytes) + "\t" +
              Digest(password, salt) + "\n";
  WriteFile(root_ / "accounts", accounts);
}

bool LibStore::Authenticate(const std::string& user,
                            const std::string& password) const {
  std::string line_for_user;
  {
    std::lock_guard lock(accounts_mu_);
    for (const std::string& line : Lines(ReadFile(root_ / "accounts"))) {
      if (Split(line, '\t').front() == user) line_for_user = line;
    }
  }
  const std::vector<std::string> f = Split(line_for_user, '\t');
  if (f.size() != 3) return false;
  const std::vector<unsigned char> salt = FromHex(f[1]);
  if (salt.size() != kSaltBytes) return false;
  const std::string digest = Digest(password, salt.data());
  return digest.size() == f[2].size() &&
         CRYPTO_memcmp(digest.data(), f[2].data(), digest.size()) == 0;
}

LibStore::SharedMeta LibStore::LoadShared() const {
  SharedMeta meta;
  for (const std::string& line : Lines(ReadFile(root_ / "shared" / "meta"))) {
    const std::vector<std::string> f = Split(line, '\t');
    if (f.size() == 2 && f[0] == "head") {
      meta.head = std::stol(f[1]);
    } else if (f.size() == 3) {
      meta.history.push_back({std::stol(f[0]), f[1], Split(f[2], ',')});
    } else {
      throw StoreError("corrupt shared metadata");
    }
  }
  return meta;
}

void LibStore::StoreShared(const SharedMeta& meta) const {
  std::string out = "head\t" + std::to_string(meta.head) + "\n";
  for (const SharedMeta::Record& r : meta.history) {
    out += std::to_string(r.rev) + "\t" + r.user + "\t";
    for (std::size_t i = 0; i < r.paths.size(); ++i) {
      if (i > 0) out += ',';
      out += r.paths[i];
    }
    out += "\n";
  }
  WriteFile(root_ / "shared" / "meta", out);
}

std::map<std::string, WorkingFile> LibStore::LoadWorking(
    const std::string& user) const {
  std::map<std::string, WorkingFile> out;
  for (const std::string& line : Lines(ReadFile(UserDir(user) / "meta"))) {
    const std::vector<std::string> f = Split(line, '\t');
    if (f.size() != 3) throw StoreError("corrupt working copy metadata");
    out[f[0]] = WorkingFile{std::stol(f[1]), f[2] == "1"};
  }
  return out;
}

void LibStore::StoreWorking(
    const std::string& user,
    const std::map<std::string, WorkingFile>& files) const {
  std::string out;
  for (const auto& [path, wf] : files) {
    out += path + "\t" + std::to_string(wf.base) + "\t" +
           (wf.modified ? "1" : "0") + "\n";
  }
  WriteFile(UserDir(user) / "meta", out);
}

void LibStore::Save(const std::string& user, std::string_view path,
                    const std::string& content) {
  RequireUser(user);
  const std::string p = NormalizePath(path);
  ValidateScriptPath(p);
  try {
    DecodeUtf8(content);
  } catch (const Utf8Error&) {
    throw ValidationError("content is not UTF-8");
  }
  std::lock_guard lock(UserMutex(user));
  auto files = LoadWorking(user);
  WriteFile(UserDir(user) / "files" / p, content);
  files[p].modified = true;
  StoreWorking(user, files);
}

std::string LibStore::Read(const std::string& user,
                           std::string_view path) const {
  RequireUser(user);
  const std::string p = NormalizePath(path);
  std::lock_guard lock(UserMutex(user));
  const fs::path full = UserDir(user) / "files" / p;
  if (p.empty() || !fs::is_regular_file(full)) {
    throw NotFoundError("no such file: " + p);
  }
  return ReadFile(full);
}

std::vector<ListingEntry> LibStore::Ls(const std::string& user,
                                       std::string_view path) const {
  RequireUser(user);
  const std::string p = NormalizePath(path);
  std::lock_guard lock(UserMutex(user));
  const fs::path dir = UserDir(user) / "files" / p;
  if (!fs::is_directory(dir)) throw NotFoundError("no such directory: " + p);
  const auto files = LoadWorking(user);
  std::vector<ListingEntry> out;
  for (const fs::directory_entry& e : fs::directory_iterator(dir)) {
    const std::string name = e.path().filename().string();
    if (name.ends_with(".tmp")) continue;
    ListingEntry entry{name, e.is_directory(), false};
    if (!entry.is_dir) {
      auto it = files.find(p.empty() ? name : p + "/" + name);
      entry.modified = it != files.end() && it->second.modified;
    }
    out.push_back(std::move(entry));
  }
  std::sort(out.begin(), out.end(),
            [](const ListingEntry& a, const ListingEntry& b) {
              return a.name < b.name;
            });
  return out;
}

std::map<std::string, WorkingFile> LibStore::WorkingState(
    const std::string& user) const {
  RequireUser(user);
  std::lock_guard lock(UserMutex(user));
  return LoadWorking(user);
}

CommitResult LibStore::Commit(const std::string& user,
                              std::optional<std::vector<std::string>> paths) {
  RequireUser(user);
  std::lock_guard ulock(UserMutex(user));
  std::unique_lock slock(shared_mu_);
  auto files = LoadWorking(user);

  std::set<std::string> chosen;
  if (paths) {
    for (const std::string& raw : *paths) {
      const std::string p = NormalizePath(raw);
      auto it = files.find(p);
      if (it == files.end()) throw NotFoundError("no such file: " + p);
      if (it->second.modified) chosen.insert(p);
    }
  } else {
    for (const auto& [p, wf] : files) {
      if (wf.modified) chosen.insert(p);
    }
  }
  CommitResult result;
  if (chosen.empty()) {
    result.nothing = true;
    return result;
  }

  SharedMeta meta = LoadShared();
  const auto last = meta.LastChanged();
  for (const std::string& p : chosen) {
    auto it = last.find(p);
    if (it != last.end() && it->second > files[p].base) {
      result.conflicts.push_back(p);
    }
  }
  if (!result.conflicts.empty()) return result;

  const long rev = meta.head + 1;
  for (const std::string& p : chosen) {
    WriteFile(root_ / "shared" / "files" / p,
              ReadFile(UserDir(user) / "files" / p));
  }
  meta.head = rev;
  meta.history.push_back({rev, user, {chosen.begin(), chosen.end()}});
  StoreShared(meta);
  for (const std::string& p : chosen) files[p] = WorkingFile{rev, false};
  StoreWorking(user, files);
  result.revision = rev;
  return result;
}

UpdateResult LibStore::Update(const std::string& user) {
  RequireUser(user);
  std::lock_guard ulock(UserMutex(user));
  std::shared_lock slock(shared_mu_);
  auto files = LoadWorking(user);
  const SharedMeta meta = LoadShared();
  UpdateResult result;
  std::set<std::string> conflicted;
  for (const auto& [p, rev] : meta.LastChanged()) {
    auto it = files.find(p);
    const long base = it == files.end() ? 0 : it->second.base;
    if (rev <= base) continue;
    if (it != files.end() && it->second.modified) {
      result.conflicts.push_back(p);
      conflicted.insert(p);
      continue;
    }
    WriteFile(UserDir(user) / "files" / p,
              ReadFile(root_ / "shared" / "files" / p));
    files[p] = WorkingFile{meta.head, false};
    result.updated.push_back(p);
  }
  for (auto& [p, wf] : files) {
    if (!conflicted.contains(p) && wf.base != 0) wf.base = meta.head;
  }
  StoreWorking(user, files);
  return result;
}

long LibStore::Import(const std::map<std::string, std::string>& files,
                      const std::string& author) {
  std::unique_lock slock(shared_mu_);
  SharedMeta meta = LoadShared();
  std::vector<std::string> paths;
  for (const auto& [raw, content] : files) {
    const std::string p = NormalizePath(raw);
    ValidateScriptPath(p);
    WriteFile(root_ / "shared" / "files" / p, content);
    paths.push_back(p);
  }
  if (paths.empty()) return meta.head;
  meta.head += 1;
  meta.history.push_back({meta.head, author, paths});
  StoreShared(meta);
  return meta.head;
}

long LibStore::Head() const {
  std::shared_lock lock(shared_mu_);
  return LoadShared().head;
}

SharedSnapshot LibStore::Shared() const {
  std::shared_lock lock(shared_mu_);
  const SharedMeta meta = LoadShared();
  SharedSnapshot snap;
  snap.head = meta.head;
  for (const auto& [p, rev] : meta.LastChanged()) {
    snap.files[p] = SharedFile{ReadFile(root_ / "shared" / "files" / p), rev};
  }
  return snap;
}

}  // namespace webprover
