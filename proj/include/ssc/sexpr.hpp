#ifndef SSC_SEXPR_HPP
#define SSC_SEXPR_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace ssc {

// Minimal s-expression reader/writer. Atoms are bare symbols or integers;
// `;` starts a line comment.
struct Sexp {
  bool is_atom = true;
  std::string atom;
  std::vector<Sexp> items;

  static Sexp sym(std::string s) {
    Sexp e;
    e.is_atom = true;
    e.atom = std::move(s);
    return e;
  }
  static Sexp list(std::vector<Sexp> xs) {
    Sexp e;
    e.is_atom = false;
    e.items = std::move(xs);
    return e;
  }
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Canonical printing: single spaces, no trailing whitespace.
std::string print_sexp(const Sexp& e);

Sexp parse_sexp(const std::string& src);
std::vector<Sexp> parse_sexps(const std::string& src);

}  // namespace ssc

#endif
