#include "ssc/sexpr.hpp"

#include <cctype>

namespace ssc {

std::string print_sexp(const Sexp& e) {
  if (e.is_atom) return e.atom;
  std::string out = "(";
  for (size_t i = 0; i < e.items.size(); ++i) {
    if (i) out += ' ';
    out += print_sexp(e.items[i]);
  }
  out += ')';
  return out;
}

namespace {

struct Cursor {
  const std::string& src;
  size_t pos = 0;

  void skip_ws() {
    while (pos < src.size()) {
      char c = src[pos];
      if (c == ';') {
        while (pos < src.size() && src[pos] != '\n') ++pos;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos;
      } else {
        break;
      }
    }
  }

  bool done() {
    skip_ws();
    return pos >= src.size();
  }

  Sexp next() {
    skip_ws();
    if (pos >= src.size()) throw ParseError("unexpected end of input");
    char c = src[pos];
    if (c == '(') {
      ++pos;
      std::vector<Sexp> items;
      while (true) {
        skip_ws();
        if (pos >= src.size()) throw ParseError("unclosed '('");
        if (src[pos] == ')') {
          ++pos;
          return Sexp::list(std::move(items));
        }
        items.push_back(next());
      }
    }
    if (c == ')') throw ParseError("unexpected ')'");
    size_t start = pos;
    while (pos < src.size()) {
      char d = src[pos];
      if (std::isspace(static_cast<unsigned char>(d)) || d == '(' || d == ')' ||
          d == ';')
        break;
      ++pos;
    }
    return Sexp::sym(src.substr(start, pos - start));
  }
};

}  // namespace

Sexp parse_sexp(const std::string& src) {
  Cursor cur{src};
  Sexp e = cur.next();
  if (!cur.done()) throw ParseError("trailing input after s-expression");
  return e;
}

std::vector<Sexp> parse_sexps(const std::string& src) {
  Cursor cur{src};
  std::vector<Sexp> out;
  while (!cur.done()) out.push_back(cur.next());
  return out;
}

}  // namespace ssc
