#include <golden/errors.hpp>

namespace golden {

namespace {

std::string describe(const std::string& message, int line, int column,
                     const std::vector<std::string>& expected) {
  std::string out = "syntax error at line " + std::to_string(line) + ", column " +
                    std::to_string(column) + ": " + message;
  if (!expected.empty()) {
    out += " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) out += i + 1 == expected.size() ? " or " : ", ";
      out += expected[i];
    }
    out += ")";
  }
  return out;
}

}  // namespace

SyntaxError::SyntaxError(std::string message, int line, int column,
                         std::vector<std::string> expected)
    : Error(describe(message, line, column, expected)),
      detail_(std::move(message)),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

}  // namespace golden
