#include "c2coh/grading.hpp"

#include <cctype>
#include <limits>

#include "c2coh/errors.hpp"

namespace c2coh {

std::string to_string(RODegree d) {
  std::string s = std::to_string(d.p);
  s += d.q < 0 ? "-" : "+";
  s += std::to_string(d.q < 0 ? -d.q : d.q);
  s += "*al";
  return s;
}

namespace {

std::string token_at(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) return "";
  std::size_t end = pos + 1;
  while (end < text.size() && std::isalnum(static_cast<unsigned char>(text[end])) &&
         std::isalnum(static_cast<unsigned char>(text[pos])))
    ++end;
  return std::string(text.substr(pos, end - pos));
}

}  // namespace

// terms: [sign] int | [sign] [int '*'] al
RODegree parse_degree(std::string_view text) {
  RODegree d;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& msg) -> RODegree {
    throw ParseError("degree: " + msg, pos, token_at(text, pos));
  };
  skip();
  if (pos == text.size()) return fail("empty degree");
  bool first = true;
  while (true) {
    skip();
    if (pos == text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!first) {
      return fail("expected '+' or '-'");
    }
    first = false;
    long value = 1;
    bool have_number = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value > std::numeric_limits<int>::max()) return fail("integer too large");
        ++pos;
      }
      have_number = true;
      skip();
    }
    bool is_alpha = false;
    if (pos < text.size() && text[pos] == '*') {
      if (!have_number) return fail("unexpected '*'");
      ++pos;
      skip();
      if (text.substr(pos, 2) != "al") return fail("expected 'al'");
      is_alpha = true;
    } else if (text.substr(pos, 2) == "al") {
      is_alpha = true;
    } else if (!have_number) {
      return fail("expected integer or 'al'");
    }
    if (is_alpha) {
      pos += 2;
      if (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos])))
        return fail("unexpected character");
      d.q += sign * static_cast<int>(value);
    } else {
      d.p += sign * static_cast<int>(value);
    }
  }
  return d;
}

}  // namespace c2coh
