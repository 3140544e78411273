#include "minksim/csv.hpp"

#include <cmath>
#include <cstdio>

namespace minksim {

std::string format_fixed(double value, int decimals) {
    if (std::isnan(value)) return "";
    double scale = std::pow(10.0, decimals);
    double rounded = std::floor(std::abs(value) * scale + 0.5) / scale;
    if (value < 0) rounded = -rounded;
    if (rounded == 0.0) rounded = 0.0;  // never print -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, rounded);
    return buf;
}

std::string dilation_csv(const std::vector<DilationRow>& rows) {
    std::string out = "Tw,x,t,ta,err%,tp\n";
    for (const auto& r : rows) {
        out += std::to_string(r.tw);
        out += ',' + format_fixed(r.x, 1);
        out += ',' + format_fixed(r.t, 1);
        out += ',' + format_fixed(r.ta, 2);
        out += ',' + format_fixed(r.err_pct, 2);
        out += ',' + format_fixed(r.tp, 1);
        out += '\n';
    }
    return out;
}

std::string force_csv(const std::vector<ForceRow>& rows) {
    std::string out = "Tw,p,v,va,v_err%,E,Ea,E_err%\n";
    for (const auto& r : rows) {
        out += std::to_string(r.tw);
        out += ',' + format_fixed(r.p, 2);
        out += ',' + format_fixed(r.v, 2);
        out += ',' + format_fixed(r.va, 2);
        out += ',' + format_fixed(r.v_err_pct, 2);
        out += ',' + format_fixed(r.e, 2);
        out += ',' + format_fixed(r.ea, 2);
        out += ',' + format_fixed(r.e_err_pct, 2);
        out += '\n';
    }
    return out;
}

std::string worldline_text(const std::vector<std::pair<double, double>>& pts) {
    std::string out;
    for (const auto& [x, t] : pts) out += format_fixed(x, 6) + ' ' + format_fixed(t, 6) + '\n';
    return out;
}

std::string vp_curve_text(const std::vector<std::tuple<double, double, double>>& pts) {
    std::string out;
    for (const auto& [p, v, va] : pts) {
        out += format_fixed(p, 6) + ' ';
        out += (std::isnan(v) ? std::string("-") : format_fixed(v, 6)) + ' ';
        out += format_fixed(va, 6) + '\n';
    }
    return out;
}

}  // namespace minksim
