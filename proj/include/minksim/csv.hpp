#pragma once

// Byte-stable text emission: fixed columns, C-locale decimal points,
// half-up rounding at the printed precision, \n line endings.

#include <string>
#include <vector>

#include "minksim/experiments.hpp"

namespace minksim {

/// Value formatted with `decimals` digits, rounded half-up. NaN prints as
/// an empty field (a missing measurement).
std::string format_fixed(double value, int decimals);

/// "Tw,x,t,ta,err%,tp" rows; x/t/tp at 1 decimal, ta/err% at 2.
std::string dilation_csv(const std::vector<DilationRow>& rows);

/// "Tw,p,v,va,v_err%,E,Ea,E_err%" rows, 2 decimals throughout.
std::string force_csv(const std::vector<ForceRow>& rows);

/// One "x t" pair per line.
std::string worldline_text(const std::vector<std::pair<double, double>>& pts);

/// One "p v va" triple per line.
std::string vp_curve_text(const std::vector<std::tuple<double, double, double>>& pts);

}  // namespace minksim
