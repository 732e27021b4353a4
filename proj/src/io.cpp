#include "fracsymm/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fracsymm {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void ensure_dir(const std::string& path) {
    if (path.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(path, ec);
    if (ec) throw std::runtime_error("cannot create directory " + path);
}

void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::vector<double>>& rows) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << header << "\n";
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i)
            out << (i ? "," : "") << fmt17(r[i]);
        out << "\n";
    }
}

std::vector<std::pair<double, double>> read_value_weight_csv(std::istream& in) {
    std::vector<std::pair<double, double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        auto pos = line.find('#');
        if (pos != std::string::npos) line.erase(pos);
        if (line.find_first_not_of(" \t\r,") == std::string::npos) continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ls(line);
        double v, w;
        if (!(ls >> v >> w)) throw std::runtime_error("bad CSV row: " + line);
        rows.emplace_back(v, w);
    }
    return rows;
}

std::uint64_t fnv1a_hash(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

void write_manifest(const std::string& dir, std::vector<std::pair<std::string, std::string>> kv) {
    std::sort(kv.begin(), kv.end());
    std::string canon;
    for (const auto& [k, v] : kv) canon += k + "=" + v + "\n";
    char hash[32];
    std::snprintf(hash, sizeof hash, "%016llx",
                  static_cast<unsigned long long>(fnv1a_hash(canon)));
    std::ofstream out(dir.empty() ? "manifest" : dir + "/manifest");
    if (!out) throw std::runtime_error("cannot write manifest");
    out << "# fracsymm run manifest\n";
    for (const auto& [k, v] : kv) out << k << " = " << v << "\n";
    out << "config_hash = " << hash << "\n";
}

void write_svg_curves(const std::string& path, const std::string& title,
                      const std::vector<PlotSeries>& series) {
    const double W = 720, H = 480, ml = 70, mr = 20, mt = 40, mb = 50;
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& s : series)
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            xmin = std::min(xmin, s.x[i]);
            xmax = std::max(xmax, s.x[i]);
            ymin = std::min(ymin, s.y[i]);
            ymax = std::max(ymax, s.y[i]);
        }
    if (!(xmax > xmin)) xmax = xmin + 1;
    if (!(ymax > ymin)) ymax = ymin + 1;
    auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (W - ml - mr); };
    auto py = [&](double y) { return H - mb - (y - ymin) / (ymax - ymin) * (H - mt - mb); };
    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b"};
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W << "' height='" << H << "'>\n";
    out << "<text x='" << W / 2 << "' y='20' text-anchor='middle' font-size='15'>" << title
        << "</text>\n";
    out << "<polyline fill='none' stroke='black' points='" << px(xmin) << "," << py(ymax) << " "
        << px(xmin) << "," << py(ymin) << " " << px(xmax) << "," << py(ymin) << "'/>\n";
    for (int k = 0; k <= 4; ++k) {
        double xv = xmin + k * (xmax - xmin) / 4, yv = ymin + k * (ymax - ymin) / 4;
        out << "<text x='" << px(xv) << "' y='" << H - mb + 18
            << "' text-anchor='middle' font-size='11'>" << fmt17(xv).substr(0, 8) << "</text>\n";
        out << "<text x='" << ml - 8 << "' y='" << py(yv) + 4
            << "' text-anchor='end' font-size='11'>" << fmt17(yv).substr(0, 8) << "</text>\n";
    }
    int ci = 0;
    for (const auto& s : series) {
        out << "<polyline fill='none' stroke='" << colors[ci % 5] << "' stroke-width='1.5' points='";
        for (std::size_t i = 0; i < s.x.size(); ++i)
            out << px(s.x[i]) << "," << py(s.y[i]) << " ";
        out << "'/>\n";
        out << "<text x='" << W - mr - 10 << "' y='" << mt + 16 * ci
            << "' text-anchor='end' font-size='12' fill='" << colors[ci % 5] << "'>" << s.name
            << "</text>\n";
        ++ci;
    }
    out << "</svg>\n";
}

}  // namespace fracsymm
