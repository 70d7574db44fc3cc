#pragma once

#include <string>

#include "toric/fan.hpp"

namespace toric::test {

inline Fan fixture(const std::string& name) { return load_fan(std::string(TORIC_FIXTURES) + "/" + name + ".json"); }

inline bool has_code(const std::vector<Diagnostic>& ds, const std::string& code) {
  for (const auto& d : ds)
    if (d.code == code) return true;
  return false;
}

}  // namespace toric::test
