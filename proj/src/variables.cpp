#include "lefkit/variables.hpp"

#include <cctype>
#include <set>

namespace lefkit {

VariableSet::VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw Error("variable set must be nonempty");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!is_identifier(n)) throw Error("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw Error("duplicate variable name '" + n + "'");
  }
}

std::optional<std::size_t> VariableSet::index(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

VariableSet VariableSet::with_fresh_variable(const std::string& hint, std::string* chosen) const {
  std::string candidate = hint;
  int suffix = 0;
  while (index(candidate).has_value()) candidate = hint + std::to_string(++suffix);
  if (chosen) *chosen = candidate;
  std::vector<std::string> names = names_;
  names.push_back(candidate);
  return VariableSet(std::move(names));
}

bool VariableSet::is_identifier(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace lefkit
