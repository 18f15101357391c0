#pragma once

#include <string>
#include <vector>

#include "core/system_file.hpp"

namespace ans {

SystemSpec base_b(int b);
SystemSpec unary();
SystemSpec bounded(int l);
SystemSpec fibonacci();
SystemSpec squares_system();
/// S on B_c with X = val_S(B_d); t_X(n) = Θ(n^(c/d)).
SystemSpec rational_power(int c, int d);
/// t_X(n) = Θ((log n)^k n^l).
SystemSpec logpoly(int k, int l);
/// t_X(n) = Θ(n^l / (log n)^k).
SystemSpec inverse_logpoly(int k, int l);

/// Dispatches on the family names used by the CLI.
SystemSpec construct_family(const std::string& family, const std::vector<long>& params);

}  // namespace ans
