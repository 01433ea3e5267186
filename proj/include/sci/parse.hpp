#ifndef SCI_PARSE_HPP
#define SCI_PARSE_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "sci/formula.hpp"

namespace sci {

// ── Concrete grammar ─────────────────────────────────────────────────────────
//
//   constants   T  F
//   variables   x0 x1 x2 ...
//   connectives ~  &  |  ->  <->  ==  []
//
// Binding, tightest first:  ~ and []  >  &  >  |  >  -> (right-assoc)
// >  <->  >  == ; <-> and == are non-associative.  Whitespace is
// insignificant.  [] and == are accepted in either language and expanded on
// the spot, so the resulting tree is always language-pure:
//
//   identity language:  [] p      ~>  (p == T)
//   modal language:     (p == q)  ~>  ([](p -> q) & [](q -> p))
//   both:               (p <-> q) ~>  ((p -> q) & (q -> p))

struct ParseError : std::runtime_error {
    ParseError(std::size_t pos, const std::string& what)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
    std::size_t position;
};

Formula parse(std::string_view text, Language lang);

// Fully parenthesised rendering; parse(print(f), language_of(f)) == f.
std::string print(const Formula& f);

}  // namespace sci

#endif  // SCI_PARSE_HPP
