#pragma once
// Golden transcripts: blocks of "$ ruled ... | ruled ...", the expected output, then "[exit N]".
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ruled/cli.hpp"

namespace transcript {

// Splits on blanks; single or double quotes group, the pipe symbol separates commands.
inline std::vector<std::vector<std::string>> split_pipeline(const std::string& line) {
  std::vector<std::vector<std::string>> cmds(1);
  std::string cur;
  char quote = 0;
  bool have = false;
  auto flush = [&] {
    if (have) cmds.back().push_back(cur);
    cur.clear();
    have = false;
  };
  for (char c : line) {
    if (quote ? c == quote : (c == '"' || c == '\'')) {
      quote = quote ? 0 : c;
      have = true;
    } else if (!quote && c == ' ') {
      flush();
    } else if (!quote && c == '|') {
      flush();
      cmds.emplace_back();
    } else {
      cur += c;
      have = true;
    }
  }
  flush();
  return cmds;
}

// Runs one pipeline in-process; returns stdout and stderr of the last stage plus its exit code.
inline std::string run_pipeline(const std::string& line) {
  std::string input, out_text, err_text;
  int code = 0;
  for (auto& argv : split_pipeline(line)) {
    if (!argv.empty() && argv.front() == "ruled") argv.erase(argv.begin());
    std::istringstream in(input);
    std::ostringstream out, err;
    code = ruled::run_cli(argv, in, out, err);
    input = out.str();
    out_text = out.str();
    err_text = err.str();
  }
  std::string result = out_text;
  std::istringstream es(err_text);
  for (std::string l; std::getline(es, l);) result += "stderr: " + l + "\n";
  return result + "[exit " + std::to_string(code) + "]\n";
}

// Re-runs every "$ " line of a transcript and returns the regenerated text.
inline std::string replay(const std::string& text) {
  std::istringstream is(text);
  std::string out;
  for (std::string l; std::getline(is, l);) {
    if (l.rfind("$ ", 0) != 0) continue;
    if (!out.empty()) out += "\n";
    out += l + "\n" + run_pipeline(l.substr(2));
  }
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace transcript
