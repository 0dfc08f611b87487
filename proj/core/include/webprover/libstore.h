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
#ifndef WEBPROVER_LIBSTORE_H_
#define WEBPROVER_LIBSTORE_H_

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace webprover {

class StoreError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
// A path leaving the user's tree.
class AccessError : public StoreError {
 public:
  using StoreError::StoreError;
};
class NotFoundError : public StoreError {
 public:
  using StoreError::StoreError;
};
class ValidationError : public StoreError {
 public:
  using StoreError::StoreError;
};
class TakenError : public StoreError {
 public:
  using StoreError::StoreError;
};

// Owner recorded for revisions made by Import.
inline constexpr char kSharedOwner[] = "shared";

inline constexpr std::size_t kMinPasswordLength = 8;

// Normalized relative path with no empty, "." or ".." segments. Throws
// AccessError.
std::string NormalizePath(std::string_view path);

struct ListingEntry {
  std::string name;
  bool is_dir = false;
  bool modified = false;
  bool operator==(const ListingEntry&) const = default;
};

struct CommitResult {
  std::optional<long> revision;     // set when accepted
  std::vector<std::string> conflicts;
  bool nothing = false;             // no modified files
};

struct UpdateResult {
  std::vector<std::string> updated;
  std::vector<std::string> conflicts;
  bool operator==(const UpdateResult&) const = default;
};

struct SharedFile {
  std::string content;
  long last_changed = 0;
};

struct SharedSnapshot {
  long head = 0;
  std::map<std::string, SharedFile> files;
};

struct WorkingFile {
  long base = 0;  // 0 for files never seen on the shared side
  bool modified = false;
};

// Accounts, per-user working copies and the shared repository, kept under
// one directory:
//
//   accounts                  id TAB salt-hex TAB digest-hex
//   shared/meta               "head" TAB n, then rev TAB user TAB paths
//   shared/files/...
//   users/<id>/meta           path TAB base TAB 0|1
//   users/<id>/files/...
class LibStore {
 public:
  explicit LibStore(std::filesystem::path root);

  const std::filesystem::path& root() const { return root_; }

  // Creates the account and checks out the shared head. Throws
  // ValidationError or TakenError.
  void Register(const std::string& user, const std::string& password);
  bool Authenticate(const std::string& user, const std::string& password) const;
  bool HasUser(const std::string& user) const;

  void Save(const std::string& user, std::string_view path,
            const std::string& content);
  std::string Read(const std::string& user, std::string_view path) const;
  std::vector<ListingEntry> Ls(const std::string& user,
                               std::string_view path) const;
  std::map<std::string, WorkingFile> WorkingState(const std::string& user) const;

  // All-or-nothing; paths defaults to every modified file.
  CommitResult Commit(const std::string& user,
                      std::optional<std::vector<std::string>> paths = {});
  UpdateResult Update(const std::string& user);

  // Writes files straight into the shared repository as one revision.
  long Import(const std::map<std::string, std::string>& files,
              const std::string& author = kSharedOwner);

  long Head() const;
  SharedSnapshot Shared() const;

 private:
  struct SharedMeta {
    long head = 0;
    struct Record {
      long rev;
      std::string user;
      std::vector<std::string> paths;
    };
    std::vector<Record> history;
    std::map<std::string, long> LastChanged() const;
  };

  std::mutex& UserMutex(const std::string& user) const;
  void RequireUser(const std::string& user) const;
  std::filesystem::path UserDir(const std::string& user) const;

  SharedMeta LoadShared() const;
  void StoreShared(const SharedMeta& meta) const;
  std::map<std::string, WorkingFile> LoadWorking(const std::string& user) const;
  void StoreWorking(const std::string& user,
                    const std::map<std::string, WorkingFile>& files) const;

  std::filesystem::path root_;
  mutable std::shared_mutex shared_mu_;
  mutable std::mutex accounts_mu_;
  mutable std::mutex users_mu_;
  mutable std::map<std::string, std::unique_ptr<std::mutex>> user_mu_;
};

}  // namespace webprover

#endif  // WEBPROVER_LIBSTORE_H_
