// Copyright 2026 The cryptext Authors. All Rights Reserved.
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

#include <charconv>
#include <cmath>

#include <sys/socket.h>
#include <sys/wait.h>
#include <unistd.h>

#include "cryptext/error.hpp"
#include "cryptext/normalize.hpp"

namespace cryptext {
namespace {

std::string join_space(std::span<const std::string> tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += ' ';
    out += tokens[i];
  }
  return out;
}

[[noreturn]] void scorer_error(const std::string& what) {
  throw Error(ErrorCode::kScorerError, "external scorer: " + what);
}

}  // namespace

ExternalProcessScorer::ExternalProcessScorer(const std::string& command) {
  int fds[2];
  if (::socketpair(AF_UNIX, SOCK_STREAM | SOCK_CLOEXEC, 0, fds) != 0) {
    scorer_error("socketpair failed");
  }
  const pid_t pid = ::fork();
  if (pid < 0) {
    ::close(fds[0]);
    ::close(fds[1]);
    scorer_error("fork failed");
  }
  if (pid == 0) {
    ::dup2(fds[1], STDIN_FILENO);
    ::dup2(fds[1], STDOUT_FILENO);
    ::execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    ::_exit(127);
  }
  ::close(fds[1]);
  pid_ = pid;
  to_child_ = fds[0];
  from_child_ = fds[0];
}

ExternalProcessScorer::~ExternalProcessScorer() {
  if (to_child_ >= 0) {
    ::shutdown(to_child_, SHUT_WR);
    ::close(to_child_);
  }
  if (pid_ > 0) {
    int status = 0;
    ::waitpid(pid_, &status, 0);
  }
}

double ExternalProcessScorer::score(std::string_view word, std::span<const std::string> left,
                                    std::span<const std::string> right) const {
  std::lock_guard lock(mu_);
  const std::string request =
      std::string(word) + "\t" + join_space(left) + "\t" + join_space(right) + "\n";
  std::size_t sent = 0;
  while (sent < request.size()) {
    const auto n = ::send(to_child_, request.data() + sent, request.size() - sent, MSG_NOSIGNAL);
    if (n <= 0) scorer_error("process is not accepting requests");
    sent += static_cast<std::size_t>(n);
  }
  std::size_t nl;
  while ((nl = pending_.find('\n')) == std::string::npos) {
    char buf[4096];
    const auto n = ::recv(from_child_, buf, sizeof buf, 0);
    if (n <= 0) scorer_error("process closed its output");
    pending_.append(buf, static_cast<std::size_t>(n));
  }
  std::string line = pending_.substr(0, nl);
  pending_.erase(0, nl + 1);
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
  double value = 0;
  auto [p, ec] = std::from_chars(line.data(), line.data() + line.size(), value);
  if (ec != std::errc{} || p != line.data() + line.size() || !std::isfinite(value)) {
    scorer_error("unparseable reply '" + line + "'");
  }
  return value;
}

}  // namespace cryptext
