#include "zenocat/emit.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "zenocat/errors.hpp"

namespace zenocat::emit {

std::string format_sig(double v, int sig) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) v = 0.0;  // normalize -0
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*g", sig, v);
    return buf;
}

CsvTable::CsvTable(std::vector<std::string> header, std::vector<std::string> comments)
    : header_(std::move(header)), comments_(std::move(comments)) {}

void CsvTable::add_row(const std::vector<std::string>& cells) {
    if (cells.size() != header_.size())
        throw DomainError("CsvTable: row width does not match header");
    rows_.push_back(cells);
}

std::vector<std::string> CsvTable::make_row(const std::vector<double>& vals) const {
    std::vector<std::string> cells;
    cells.reserve(vals.size());
    for (double v : vals) cells.push_back(format_sig(v));
    return cells;
}

std::string CsvTable::to_string() const {
    std::ostringstream os;
    for (const auto& c : comments_) os << "# " << c << "\n";
    for (std::size_t i = 0; i < header_.size(); ++i)
        os << header_[i] << (i + 1 < header_.size() ? "," : "");
    os << "\n";
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << row[i] << (i + 1 < row.size() ? "," : "");
        os << "\n";
    }
    return os.str();
}

void CsvTable::write_file(const std::string& path) const {
    write_text_file(path, to_string());
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw DomainError("cannot open output file: " + path);
    f << content;
    if (!f) throw DomainError("failed writing output file: " + path);
}

namespace {

struct Extent {
    double lo = 0.0, hi = 1.0;
    void grow(double v) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
};

std::string fmt6(double v) { return format_sig(v, 6); }

constexpr int kW = 820, kH = 520, kL = 70, kR = 160, kT = 40, kB = 50;
constexpr const char* kColors[] = {"#000000", "#1f6feb", "#d62728",
                                   "#2ca02c", "#9467bd", "#ff7f0e"};

double map_x(double v, const Extent& e) {
    const double span = (e.hi > e.lo) ? e.hi - e.lo : 1.0;
    return kL + (v - e.lo) / span * (kW - kL - kR);
}

double map_y(double v, const Extent& e) {
    const double span = (e.hi > e.lo) ? e.hi - e.lo : 1.0;
    return kH - kB - (v - e.lo) / span * (kH - kT - kB);
}

}  // namespace

std::string svg_line_chart(const std::string& title, const std::string& x_label,
                           const std::string& y_label, const std::vector<Series>& series,
                           bool log_y) {
    Extent ex, ey;
    bool first = true;
    for (const auto& s : series)
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            double yv = log_y ? std::log10(std::max(s.y[i], 1e-300)) : s.y[i];
            if (first) {
                ex = {s.x[i], s.x[i]};
                ey = {yv, yv};
                first = false;
            } else {
                ex.grow(s.x[i]);
                ey.grow(yv);
            }
        }
    std::ostringstream os;
    os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kW << "' height='" << kH
       << "'>\n<rect width='100%' height='100%' fill='white'/>\n";
    os << "<text x='" << kW / 2 << "' y='24' text-anchor='middle' font-size='16'>" << title
       << "</text>\n";
    // axes
    os << "<line x1='" << kL << "' y1='" << kH - kB << "' x2='" << kW - kR << "' y2='"
       << kH - kB << "' stroke='black'/>\n";
    os << "<line x1='" << kL << "' y1='" << kT << "' x2='" << kL << "' y2='" << kH - kB
       << "' stroke='black'/>\n";
    for (int k = 0; k <= 4; ++k) {
        const double fx = ex.lo + (ex.hi - ex.lo) * k / 4.0;
        const double fy = ey.lo + (ey.hi - ey.lo) * k / 4.0;
        os << "<text x='" << map_x(fx, ex) << "' y='" << kH - kB + 18
           << "' text-anchor='middle' font-size='11'>" << fmt6(fx) << "</text>\n";
        os << "<text x='" << kL - 8 << "' y='" << map_y(fy, ey) + 4
           << "' text-anchor='end' font-size='11'>"
           << fmt6(log_y ? std::pow(10.0, fy) : fy) << "</text>\n";
    }
    os << "<text x='" << (kL + kW - kR) / 2 << "' y='" << kH - 12
       << "' text-anchor='middle' font-size='13'>" << x_label << "</text>\n";
    os << "<text x='18' y='" << (kT + kH - kB) / 2
       << "' text-anchor='middle' font-size='13' transform='rotate(-90 18 "
       << (kT + kH - kB) / 2 << ")'>" << y_label << "</text>\n";
    for (std::size_t si = 0; si < series.size(); ++si) {
        const auto& s = series[si];
        const char* col = kColors[si % 6];
        os << "<polyline fill='none' stroke='" << col << "' stroke-width='1.5' points='";
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            double yv = log_y ? std::log10(std::max(s.y[i], 1e-300)) : s.y[i];
            os << fmt6(map_x(s.x[i], ex)) << "," << fmt6(map_y(yv, ey)) << " ";
        }
        os << "'/>\n";
        os << "<text x='" << kW - kR + 10 << "' y='" << kT + 16 + 18 * si
           << "' font-size='12' fill='" << col << "'>" << s.label << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string svg_bar_chart(const std::string& title, const std::string& x_label,
                          const std::string& y_label, const std::vector<double>& values) {
    Extent ey{0.0, 1e-12};
    for (double v : values) ey.grow(v);
    const std::size_t n = values.size();
    std::ostringstream os;
    os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kW << "' height='" << kH
       << "'>\n<rect width='100%' height='100%' fill='white'/>\n";
    os << "<text x='" << kW / 2 << "' y='24' text-anchor='middle' font-size='16'>" << title
       << "</text>\n";
    os << "<line x1='" << kL << "' y1='" << kH - kB << "' x2='" << kW - kR << "' y2='"
       << kH - kB << "' stroke='black'/>\n";
    const double bw = static_cast<double>(kW - kL - kR) / std::max<std::size_t>(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        const double hgt = (values[i] / ey.hi) * (kH - kT - kB);
        os << "<rect x='" << fmt6(kL + bw * i + 1) << "' y='" << fmt6(kH - kB - hgt)
           << "' width='" << fmt6(std::max(bw - 2.0, 1.0)) << "' height='" << fmt6(hgt)
           << "' fill='#1f6feb'/>\n";
        if (n <= 48 && i % 2 == 0)
            os << "<text x='" << fmt6(kL + bw * (i + 0.5)) << "' y='" << kH - kB + 16
               << "' text-anchor='middle' font-size='10'>" << i << "</text>\n";
    }
    os << "<text x='" << (kL + kW - kR) / 2 << "' y='" << kH - 12
       << "' text-anchor='middle' font-size='13'>" << x_label << "</text>\n";
    os << "<text x='18' y='" << (kT + kH - kB) / 2
       << "' text-anchor='middle' font-size='13' transform='rotate(-90 18 "
       << (kT + kH - kB) / 2 << ")'>" << y_label << "</text>\n";
    os << "</svg>\n";
    return os.str();
}

void parallel_for(std::size_t n, unsigned n_threads,
                  const std::function<void(std::size_t)>& fn) {
    if (n == 0) return;
    unsigned hw = n_threads ? n_threads : std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    hw = static_cast<unsigned>(std::min<std::size_t>(hw, n));
    if (hw <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::atomic<bool> failed{false};
    std::string first_error;
    std::mutex err_mu;
    for (unsigned t = 0; t < hw; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n || failed.load()) return;
                try {
                    fn(i);
                } catch (const std::exception& e) {
                    std::lock_guard<std::mutex> lock(err_mu);
                    if (!failed.exchange(true)) first_error = e.what();
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (failed.load()) throw NumericalError("parallel_for worker failed: " + first_error);
}

}  // namespace zenocat::emit
