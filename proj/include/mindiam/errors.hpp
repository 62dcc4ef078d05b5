#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mindiam {

/// Base of every error thrown by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class size_error : public error {
 public:
  using error::error;
};

class loop_error : public error {
 public:
  using error::error;
};

class index_error : public error {
 public:
  using error::error;
};

class degree_error : public error {
 public:
  using error::error;
};

class parity_error : public error {
 public:
  using error::error;
};

// graph6 decoding failures
class malformed_error : public error {
 public:
  using error::error;
};

class length_error : public error {
 public:
  using error::error;
};

class padding_error : public error {
 public:
  using error::error;
};

// text formats (edge lists, masks)
class parse_error : public error {
 public:
  using error::error;
};

class reciprocity_error : public error {
 public:
  using error::error;
};

class connectivity_error : public error {
 public:
  using error::error;
};

/// Catalog miss; carries the nearest (n, k) cells that are covered.
class not_found_error : public error {
 public:
  not_found_error(const std::string& what, std::vector<std::pair<int, int>> alternatives)
      : error(what), alternatives_(std::move(alternatives)) {}

  const std::vector<std::pair<int, int>>& alternatives() const noexcept { return alternatives_; }

 private:
  std::vector<std::pair<int, int>> alternatives_;
};

}  // namespace mindiam
