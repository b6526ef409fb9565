#pragma once

#include "umdnorms/norms.hpp"

#include <optional>
#include <string>
#include <variant>

namespace umdnorms {

// Space literals: l1:4, l2:8, linf:3, wlp:p=3,w=1;2;0.5 (append ,real for
// the real scalar field).
NormedSpace parse_space(const std::string& literal);

// System literals: E:n, C:n, S:n, Ebar:n, Erange:lo..hi, and tensor pairs
// like SxC:n.
using SystemRef = std::variant<TrigSystem, TensorSystem>;
SystemRef parse_system(const std::string& literal);

int system_size(const SystemRef& ref);
int system_max_frequency(const SystemRef& ref);
std::string system_describe(const SystemRef& ref);

// Complex literal a+bi (also plain reals and bare imaginary parts).
Complex parse_complex(const std::string& text);
std::string format_complex(const Complex& z);

// CSV of rows; complex entries as a+bi literals.
Mat read_matrix_csv(const std::string& path);
std::vector<Vec> parse_tuple_inline(const std::string& text);  // [[1,2],[3,4]]
std::vector<Vec> read_tuple_csv(const std::string& path);      // rows = vectors

}  // namespace umdnorms
