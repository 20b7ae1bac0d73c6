#ifndef PROVAR_ERRORS_HPP
#define PROVAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace provar {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownSymbol : Error {
  explicit UnknownSymbol(char c)
      : Error(std::string("unknown symbol '") + c + "'"), symbol(c) {}
  char symbol;
};

struct AlphabetMismatch : Error {
  AlphabetMismatch() : Error("alphabet mismatch") {}
};

struct NotPrime : Error {
  explicit NotPrime(long p) : Error("not a prime: " + std::to_string(p)) {}
};

struct DimensionMismatch : Error {
  DimensionMismatch() : Error("dimension mismatch") {}
};

struct NotASpanningTree : Error {
  NotASpanningTree() : Error("edge set is not a spanning tree") {}
};

struct NotAMember : Error {
  NotAMember() : Error("word is not a member of the subgroup") {}
};

struct NotASubgroup : Error {
  NotASubgroup() : Error("not a subgroup of the given group") {}
};

struct NotNormal : Error {
  NotNormal() : Error("subgroup is not normal") {}
};

struct OrderCapExceeded : Error {
  explicit OrderCapExceeded(std::size_t cap)
      : Error("group order cap exceeded (cap " + std::to_string(cap) + ")") {}
};

struct FringeCapExceeded : Error {
  explicit FringeCapExceeded(std::size_t cap)
      : Error("fringe enumeration cap exceeded (cap " + std::to_string(cap) +
              ")"),
        cap(cap) {}
  std::size_t cap;
};

// A theory-level assertion failed.  Never swallowed: a failure here means
// either a bug or a genuine counterexample and must abort the computation.
struct CertificateFailure : Error {
  explicit CertificateFailure(const std::string& what)
      : Error("certificate failure: " + what) {}
};

}  // namespace provar

#endif  // PROVAR_ERRORS_HPP
