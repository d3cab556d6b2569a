#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>
#include <vector>

namespace testsupport {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

inline std::string quote(const std::string& s) {
  std::string q = "'";
  for (const char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

// Runs the CLI with a shell-quoted argument list; stderr is discarded
// unless merged into the captured output.
inline RunResult run_cli(const std::vector<std::string>& args, bool merge_stderr = false) {
  std::string cmd = quote(ONTALIGN_CLI);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace testsupport
