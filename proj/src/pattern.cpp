// SPDX-License-Identifier: Apache-2.0
#include "csr/pattern.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>
#include <vector>

#include "csr/errors.hpp"

namespace csr {

void validate(const Window& w) {
    if (!(w.x0 < w.x1) || !(w.y0 < w.y1))
        throw DomainError("window must satisfy x0 < x1 and y0 < y1");
}

PointPattern make_pattern(const Window& window, Vec x, Vec y) {
    validate(window);
    if (x.size() != y.size())
        throw DomainError("coordinate vectors differ in length");
    if (x.size() < 1) throw EmptyPatternError("pattern has no points");
    for (Index i = 0; i < x.size(); ++i) {
        if (!std::isfinite(x[i]) || !std::isfinite(y[i]))
            throw DomainError("point " + std::to_string(i + 1) + " is not finite");
        if (x[i] < window.x0 || x[i] > window.x1 || y[i] < window.y0 ||
            y[i] > window.y1)
            throw DomainError("point " + std::to_string(i + 1) + " (" +
                              std::to_string(x[i]) + ", " + std::to_string(y[i]) +
                              ") lies outside the window");
    }
    return PointPattern{window, std::move(x), std::move(y)};
}

namespace {

bool parse_real(std::string_view token, double& out) {
    // trim surrounding whitespace
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front())))
        token.remove_prefix(1);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back())))
        token.remove_suffix(1);
    if (token.empty()) return false;
    const char* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, out);
    return ec == std::errc{} && ptr == end && std::isfinite(out);
}

bool parse_line(const std::string& line, double& px, double& py) {
    const auto comma = line.find(',');
    if (comma == std::string::npos) return false;
    if (line.find(',', comma + 1) != std::string::npos) return false;
    return parse_real(std::string_view(line).substr(0, comma), px) &&
           parse_real(std::string_view(line).substr(comma + 1), py);
}

} // namespace

PointPattern load_pattern(std::istream& source, const Window& window) {
    validate(window);
    std::vector<double> xs;
    std::vector<double> ys;
    std::string line;
    int lineno = 0;
    bool first_content_line = true;
    while (std::getline(source, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        // skip blank lines
        bool blank = true;
        for (char ch : line)
            if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
        if (blank) continue;
        double px = 0.0;
        double py = 0.0;
        if (!parse_line(line, px, py)) {
            if (first_content_line) {
                // single optional header line starting with a non-numeric token
                first_content_line = false;
                continue;
            }
            throw ParseError("line " + std::to_string(lineno) +
                             ": expected two comma-separated reals, got \"" + line +
                             "\"");
        }
        first_content_line = false;
        xs.push_back(px);
        ys.push_back(py);
    }
    if (xs.empty()) throw EmptyPatternError("input contains no data lines");
    return make_pattern(window,
                        Eigen::Map<const Vec>(xs.data(), static_cast<Index>(xs.size())),
                        Eigen::Map<const Vec>(ys.data(), static_cast<Index>(ys.size())));
}

PointPattern rescale_to_unit(const PointPattern& pattern) {
    const Window& w = pattern.window;
    Vec x = (pattern.x - w.x0) / (w.x1 - w.x0);
    Vec y = (pattern.y - w.y0) / (w.y1 - w.y0);
    return PointPattern{Window::unit(), std::move(x), std::move(y)};
}

} // namespace csr
