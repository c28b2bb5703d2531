#pragma once

// Fixtures shared by the test binaries. Paths resolve against the source
// tree through OJ_TEST_DATA_DIR so the binaries run from any directory.

#include <string>

#include <oddjacobi/phase_space.hpp>
#include <oddjacobi/structure_file.hpp>

namespace fixtures {

inline std::string data_path(const std::string& name) {
  return std::string(OJ_TEST_DATA_DIR) + "/" + name;
}

inline std::string ex1_path() { return data_path("EX1.oj"); }
inline std::string ex2_path() { return data_path("EX2.oj"); }

/// The 1|1-dimensional chart (x even, xi odd).
inline oddjacobi::PhaseSpace r11() {
  using oddjacobi::Parity;
  return oddjacobi::PhaseSpace::over(
      {{{"x", Parity::even}, {"xi", Parity::odd}}});
}

/// The 2|2-dimensional chart (x, y even; xi, eta odd).
inline oddjacobi::PhaseSpace r22() {
  using oddjacobi::Parity;
  return oddjacobi::PhaseSpace::over({{{"x", Parity::even},
                                       {"y", Parity::even},
                                       {"xi", Parity::odd},
                                       {"eta", Parity::odd}}});
}

inline oddjacobi::ExactQSStructure ex1() {
  return oddjacobi::as_exact_qs(oddjacobi::load_structure_file(ex1_path()));
}

inline oddjacobi::ExactQSStructure ex2() {
  return oddjacobi::as_exact_qs(oddjacobi::load_structure_file(ex2_path()));
}

}  // namespace fixtures
