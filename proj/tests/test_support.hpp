#pragma once

#include <string>

#include "weyl/order.hpp"
#include "weyl/scheme_io.hpp"

inline std::string data_path(const std::string& name) {
  return std::string(WEYL_DATA_DIR) + "/" + name;
}

inline weyl::RawScheme load_raw(const std::string& name) {
  return weyl::parse_scheme_file(data_path(name));
}

inline weyl::System load_system(const std::string& name, weyl::Int cap = 0) {
  const weyl::RawScheme raw = load_raw(name);
  weyl::CartanScheme scheme = weyl::CartanScheme::from_raw(raw);
  if (cap <= 0) cap = weyl::default_root_cap(scheme);
  weyl::RootGenResult rg = weyl::generate_roots(scheme, cap);
  if (!rg.finite()) throw std::runtime_error("fixture has no finite roots");
  return weyl::System::build(std::move(scheme), std::move(*rg.roots));
}
