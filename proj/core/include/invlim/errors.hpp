#pragma once

#include <stdexcept>
#include <string>

namespace invlim {

/* Contract violations (bad shapes, invalid construction data) throw.
   Expected negative outcomes -- "not divisible", "no preimage" -- are
   returned as values instead; they carry refutation data, not stack traces. */

class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/* Two modules were combined whose shapes do not line up. */
class shape_error : public error {
 public:
  using error::error;
};

/* A constructor or operation was handed data outside its domain. */
class value_error : public error {
 public:
  using error::error;
};

/* Malformed external input; `path` locates the first offending node. */
class parse_error : public error {
 public:
  parse_error(std::string path, const std::string& what)
      : error(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace invlim
