#include <cctype>
#include <string>
#include <vector>

#include "skein/diagram.hpp"
#include "skein/errors.hpp"

namespace skein {

namespace {

struct PdScanner {
  const std::string& s;
  size_t i = 0;

  explicit PdScanner(const std::string& text) : s(text) {}

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  // Between tokens one separating comma is allowed.
  void skip_separator() {
    skip_ws();
    if (i < s.size() && s[i] == ',') ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }

  [[noreturn]] void fail(const std::string& msg, size_t at) {
    size_t end = at;
    while (end < s.size() && s[end] != ',' && !std::isspace(static_cast<unsigned char>(s[end])))
      ++end;
    throw MalformedSyntax("PD code: " + msg + " near \"" + s.substr(at, end - at) +
                          "\" (offset " + std::to_string(at) + ")");
  }

  long read_int(size_t token_start) {
    skip_ws();
    size_t start = i;
    if (i < s.size() && s[i] == '-') ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start || (s[start] == '-' && i == start + 1))
      fail("expected integer", token_start);
    return std::stol(s.substr(start, i - start));
  }

  // X(a,b,c,d) or U(k); returns the integers read.
  std::vector<long> read_token(char& kind) {
    skip_ws();
    size_t token_start = i;
    char c = s[i];
    if (c == 'X' || c == 'x')
      kind = 'X';
    else if (c == 'U' || c == 'u')
      kind = 'U';
    else
      fail("expected X(...) or U(...)", token_start);
    ++i;
    skip_ws();
    if (i >= s.size() || s[i] != '(') fail("expected '('", token_start);
    ++i;
    std::vector<long> values;
    for (;;) {
      values.push_back(read_int(token_start));
      skip_ws();
      if (i < s.size() && s[i] == ',') {
        ++i;
        continue;
      }
      break;
    }
    skip_ws();
    if (i >= s.size() || s[i] != ')') fail("expected ')'", token_start);
    ++i;
    if (kind == 'X' && values.size() != 4)
      fail("crossing needs exactly 4 arcs, got " + std::to_string(values.size()),
           token_start);
    if (kind == 'U' && values.size() != 1)
      fail("U takes exactly one count", token_start);
    return values;
  }
};

}  // namespace

LinkDiagram LinkDiagram::parse_pd(const std::string& text) {
  PdScanner sc(text);
  if (sc.done()) throw MalformedSyntax("PD code: empty input");

  std::vector<std::array<Arc, 4>> tuples;
  int unknots = 0;
  bool first = true;
  while (!sc.done()) {
    if (!first) sc.skip_separator();
    first = false;
    if (sc.done()) break;
    char kind = 0;
    size_t at = sc.i;
    std::vector<long> values = sc.read_token(kind);
    if (kind == 'X') {
      std::array<Arc, 4> t{};
      for (int k = 0; k < 4; ++k) {
        if (values[k] <= 0)
          throw MalformedSyntax("PD code: arc identifiers must be positive (offset " +
                                std::to_string(at) + ")");
        t[k] = static_cast<Arc>(values[k]);
      }
      tuples.push_back(t);
    } else {
      if (values[0] < 1)
        throw MalformedSyntax("PD code: U(k) needs k >= 1 (offset " +
                              std::to_string(at) + ")");
      unknots += static_cast<int>(values[0]);
    }
  }
  if (tuples.empty()) return LinkDiagram::unlink(unknots);
  return LinkDiagram::from_tuples(tuples, unknots);
}

}  // namespace skein
