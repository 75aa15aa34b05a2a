#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "hadamard/core.hpp"
#include "hadamard/io.hpp"

#ifndef HADAMARD_TEST_DATA_DIR
#error "HADAMARD_TEST_DATA_DIR must be defined"
#endif

namespace fixtures {

inline std::string read_text(const std::string& name) {
  std::ifstream in(std::string(HADAMARD_TEST_DATA_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing test data " + name);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

/// A 15 x 15 {0,1} Hadamard matrix in canonical column order.
inline hadamard::BitMatrix matrix15() {
  std::istringstream in(read_text("matrix15.dense01"));
  return hadamard::io::read_dense01(in).at(0).matrix;
}

/// Its group-list listing, wrapped over several indented lines.
inline std::string matrix15_listing() { return read_text("matrix15.grouplist"); }

/// The single m = 3 matrix.
inline hadamard::BitMatrix matrix3() { return hadamard::BitMatrix{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}; }

inline hadamard::SignMatrix sylvester4() {
  return hadamard::SignMatrix{{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}};
}

}  // namespace fixtures
