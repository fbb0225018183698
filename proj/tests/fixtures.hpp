#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "omegaforge/certificates/certificates.hpp"

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"strassen_n2",   "strassen_n5",   "waring_m0",     "waring_m1",
                                              "span_limit_m1", "span_limit_m2", "span_limit_m3", "span_limit_m4",
                                              "span_limit_m5", "a3_toric"};
  return names;
}

inline nlohmann::json load_fixture_json(const std::string& name) {
  std::ifstream in(std::string(OMEGAFORGE_DATA_DIR) + "/fixtures/" + name + ".json");
  return nlohmann::json::parse(in);
}

inline omegaforge::Certificate load_fixture(const std::string& name) {
  return omegaforge::certificate_from_json(load_fixture_json(name));
}
