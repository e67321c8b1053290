#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lefkit/errors.hpp"

namespace lefkit {

/// Ordered set of variable names, x_1 > x_2 > ... > x_n by position.
/// The last variable plays the distinguished role in grevlex and in the
/// associated-graded constructions.
class VariableSet {
 public:
  explicit VariableSet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<std::size_t> index(const std::string& name) const;

  bool operator==(const VariableSet& rhs) const { return names_ == rhs.names_; }

  /// Same set with one fresh variable appended; `hint` gets a numeric
  /// suffix when it clashes with an existing name.
  VariableSet with_fresh_variable(const std::string& hint, std::string* chosen = nullptr) const;

  static bool is_identifier(const std::string& s);

 private:
  std::vector<std::string> names_;
};

}  // namespace lefkit
