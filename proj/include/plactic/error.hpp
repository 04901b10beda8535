#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace plactic {

// Base class for everything the library throws.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Letter outside [1, n], or two operands over different alphabets.
class alphabet_error : public error {
 public:
  using error::error;
};

// Negative duration, or a value outside the domain of an operation.
class domain_error : public error {
 public:
  using error::error;
};

// Malformed or out-of-bounds interval set.
class interval_error : public error {
 public:
  using error::error;
};

class not_a_row : public error {
 public:
  using error::error;
};

// Reading word (or row list) violating the dominance chain.  `index` is the
// 1-based i of the first failing pair u_i, u_{i+1}.
class not_a_tableau : public error {
 public:
  not_a_tableau(std::size_t index, const std::string& what)
      : error(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class interleaving_error : public error {
 public:
  using error::error;
};

// An inverse computation did not reproduce its input.
class reconstruction_error : public error {
 public:
  using error::error;
};

class invalid_move : public error {
 public:
  using error::error;
};

class oracle_too_large : public error {
 public:
  using error::error;
};

class shape_mismatch : public error {
 public:
  using error::error;
};

// Text input that does not follow the grammar; `position` is a 0-based
// character offset into the input.
class parse_error : public error {
 public:
  parse_error(std::size_t position, const std::string& what)
      : error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace plactic
