#ifndef GLP_ERRORS_HPP
#define GLP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace glp {

// A mathematical precondition failed (exit code 1 in the CLI).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed structured input (exit code 2 in the CLI).
class SchemaError : public std::runtime_error {
 public:
  SchemaError(const std::string& path, const std::string& what)
      : std::runtime_error(path.empty() ? what : path + ": " + what), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace glp

#endif
