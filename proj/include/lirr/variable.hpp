#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace lirr {

using VarId = std::int32_t;

// Central interner for variable names. All symbol families used by the
// algorithms (primed copies x', intermediate copies x'', tag variables,
// difference variables d!x, invariant variables k!i, loop counters) are
// allocated here so they can never collide with user names. Fresh-variable
// generation is deterministic given the same request sequence.
class VariableContext {
 public:
  VarId intern(const std::string& name) {
    auto it = ids_.find(name);
    if (it != ids_.end()) return it->second;
    VarId id = static_cast<VarId>(names_.size());
    names_.push_back(name);
    ids_.emplace(name, id);
    return id;
  }

  bool contains(const std::string& name) const { return ids_.count(name) != 0; }

  VarId lookup(const std::string& name) const {
    auto it = ids_.find(name);
    if (it == ids_.end()) throw std::out_of_range("unknown variable: " + name);
    return it->second;
  }

  const std::string& name(VarId v) const { return names_.at(static_cast<std::size_t>(v)); }
  std::size_t size() const { return names_.size(); }

  VarId primed(VarId v) { return intern(name(v) + "'"); }
  VarId doubleprimed(VarId v) { return intern(name(v) + "''"); }

  // "base!n" with a per-base counter; skips names the user already took.
  VarId fresh(const std::string& base) {
    for (;;) {
      std::string cand = base + "!" + std::to_string(counters_[base]++);
      if (!contains(cand)) return intern(cand);
    }
  }

 private:
  std::vector<std::string> names_;
  std::map<std::string, VarId> ids_;
  std::map<std::string, std::uint64_t> counters_;
};

}  // namespace lirr
