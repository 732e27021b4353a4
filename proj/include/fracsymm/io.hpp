#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace fracsymm {

// Floating-point text with 17 significant digits, locale independent.
std::string fmt17(double v);

void ensure_dir(const std::string& path);

void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::vector<double>>& rows);

// (value, weight) rows; '#' starts a comment line.
std::vector<std::pair<double, double>> read_value_weight_csv(std::istream& in);

std::uint64_t fnv1a_hash(const std::string& s);

// key = value lines plus a content hash over the sorted pairs.
void write_manifest(const std::string& dir,
                    std::vector<std::pair<std::string, std::string>> kv);

struct PlotSeries {
    std::string name;
    std::vector<double> x, y;
};

// Minimal SVG: polylines and axis text only.
void write_svg_curves(const std::string& path, const std::string& title,
                      const std::vector<PlotSeries>& series);

}  // namespace fracsymm
