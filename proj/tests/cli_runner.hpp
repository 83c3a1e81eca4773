#pragma once

// Runs the ginv executable and checks the cases in golden/cli_cases.json.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ginv/json_io.hpp"

namespace ginv::cli_test {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

inline std::string shell_quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

inline RunResult run(const std::string& exe, const std::vector<std::string>& args) {
  std::string cmd = shell_quote(exe);
  for (const auto& a : args) cmd += " " + shell_quote(a);
  cmd += " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

/// Expands "@name" arguments to files in the fixture directory.
inline std::vector<std::string> expand(const json& args, const std::string& fixtures) {
  std::vector<std::string> out;
  for (const auto& a : args) {
    std::string s = a.get<std::string>();
    out.push_back(!s.empty() && s[0] == '@' ? fixtures + "/" + s.substr(1) : s);
  }
  return out;
}

struct CaseResult {
  std::string name;
  int expected_exit = 0;
  int exit_code = -1;
  bool passed = false;
  std::string message;
};

inline json last_line(const std::string& text) {
  std::istringstream in(text);
  std::string line, last;
  while (std::getline(in, line))
    if (!line.empty()) last = line;
  return json::parse(last);
}

inline CaseResult run_case(const std::string& exe, const std::string& fixtures, const json& c) {
  CaseResult r{c.at("name").get<std::string>(), c.at("exit").get<int>(), -1, false, {}};
  auto out = run(exe, expand(c.at("args"), fixtures));
  r.exit_code = out.exit_code;
  try {
    if (out.exit_code != r.expected_exit) throw std::runtime_error("exit " + std::to_string(out.exit_code));
    if (c.contains("expect")) {
      json doc = json::parse(out.out);
      for (auto& [ptr, value] : c["expect"].items()) {
        json::json_pointer p(ptr);
        if (!doc.contains(p)) throw std::runtime_error("missing " + ptr);
        if (doc.at(p) != value) throw std::runtime_error(ptr + " = " + doc.at(p).dump());
      }
    }
    if (c.contains("summary") || c.contains("summary_has")) {
      json summary = last_line(out.out);
      if (!summary.value("summary", false)) throw std::runtime_error("last line is not a summary");
      if (c.contains("summary"))
        for (auto& [key, value] : c["summary"].items())
          if (summary.value(key, json()) != value) throw std::runtime_error(key + " = " + summary.value(key, json()).dump());
      if (c.contains("summary_has"))
        for (const auto& key : c["summary_has"])
          if (!summary.contains(key.get<std::string>())) throw std::runtime_error("summary lacks " + key.dump());
    }
    r.passed = true;
  } catch (const std::exception& e) {
    r.message = e.what();
  }
  return r;
}

inline std::vector<CaseResult> run_cases(const std::string& exe, const std::string& cases_path, const std::string& fixtures) {
  std::ifstream in(cases_path);
  if (!in) throw std::runtime_error("cannot open " + cases_path);
  json cases = json::parse(in);
  std::vector<CaseResult> out;
  for (const auto& c : cases) out.push_back(run_case(exe, fixtures, c));
  return out;
}

}  // namespace ginv::cli_test
