#pragma once
// Error codes shared across the library. Every throwing operation raises
// Error with a code so callers (CLI, tests) can branch without matching
// message strings.

#include <stdexcept>
#include <string>

namespace ivcol {

enum class Errc {
  BadArgument,           // malformed instance or parameter
  OddK,                  // construction requires an even part count
  OddM,                  // 1-factorization requires an even vertex count
  NotIntervalColorable,  // n*k odd: no interval coloring exists
  InvalidBase,           // lift base fails verification
  NotRegular,            // compress input graph is not regular
  NotVerified,           // compress input coloring fails verification
  AlreadyMinimal,        // compress at t == max degree
  BadT,                  // color count below max degree or < 1
  NotColorable,          // exact w/W on a graph with no interval coloring
  LengthMismatch,        // color array length != edge count
  EmptySet,              // interval test on an empty set
  ParseError,            // malformed coloring document
  Unsupported,           // beyond engine limits (color count cap)
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace ivcol
