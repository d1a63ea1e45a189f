#ifndef DCAT_ERRORS_HPP
#define DCAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dcat {

// Base for all thrown failures. Law violations found by validators are not
// exceptions; they are collected into a DiagnosticReport instead.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownObjectError : Error {
  explicit UnknownObjectError(const std::string& id)
      : Error("unknown object '" + id + "'"), object(id) {}
  std::string object;
};

struct UnknownArrowError : Error {
  explicit UnknownArrowError(const std::string& id)
      : Error("unknown arrow '" + id + "'"), arrow(id) {}
  std::string arrow;
};

struct NotComposableError : Error {
  NotComposableError(const std::string& f_, const std::string& g_,
                     const std::string& where = "")
      : Error("arrows not composable: '" + f_ + "' then '" + g_ + "'" +
              (where.empty() ? "" : " [" + where + "]")),
        f(f_),
        g(g_) {}
  std::string f, g;
};

// A mixed word fails to chain when evaluated in the base category.
struct NotComposableInPError : Error {
  NotComposableInPError(const std::string& first, const std::string& second)
      : Error("images not composable in P: '" + first + "' then '" + second +
              "'"),
        f(first),
        g(second) {}
  std::string f, g;
};

struct NotAGroupoidError : Error {
  using Error::Error;
};

struct SizeLimitError : Error {
  using Error::Error;
};

// An action or formal-word application was requested outside its domain.
struct TypingError : Error {
  using Error::Error;
};

struct NotNormalError : Error {
  NotNormalError(const std::string& h_, const std::string& m_,
                 const std::string& conjugate_)
      : Error("subgroup not normal: conjugate of '" + m_ + "' by '" + h_ +
              "' is '" + conjugate_ + "', which escapes the subgroup"),
        h(h_),
        m(m_),
        conjugate(conjugate_) {}
  std::string h, m, conjugate;
};

struct SemicoreAxiomError : Error {
  SemicoreAxiomError(const std::string& what, const std::string& m_,
                     const std::string& h_)
      : Error(what), m(m_), h(h_) {}
  std::string m, h;
};

struct ParseError : Error {
  using Error::Error;
};

// A file refers to an id that does not exist, or declares a table entry on
// an impossible key (for example a composite of a non-composable pair).
struct ReferenceError : Error {
  using Error::Error;
};

}  // namespace dcat

#endif  // DCAT_ERRORS_HPP
